#include <benchmark/benchmark.h>

#include "rcomb/digraph.hpp"
#include "rcomb/oracles.hpp"

namespace {

const rcomb::DifferenceSet kQ = rcomb::DifferenceSet::parse("1,2,4");

void subset_serial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(rcomb::subset_count_oracle_serial(kQ, static_cast<int>(state.range(0)), true));
}

void subset_parallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(rcomb::subset_count_oracle(kQ, static_cast<int>(state.range(0)), true));
}

void subset_transfer(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(rcomb::subset_counts_via_transfer(kQ, static_cast<int>(state.range(0)), true));
}

const rcomb::Subword kOmega = rcomb::Subword::parse("10110");

void subword_serial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(rcomb::subword_class_oracle_serial(kOmega, static_cast<int>(state.range(0))));
}

void subword_parallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(rcomb::subword_class_oracle(kOmega, static_cast<int>(state.range(0))));
}

} // namespace

BENCHMARK(subset_serial)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(subset_parallel)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(subset_transfer)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(subword_serial)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(subword_parallel)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
