#include <algorithm>
#include "rcomb/oracles.hpp"

#include <bit>
#include <omp.h>

namespace rcomb {

Subword Subword::parse(std::string_view s)
{
    if (s.empty() || s.size() > 63) throw Error("subword must have 1..63 binary digits");
    for (char c : s)
        if (c != '0' && c != '1') throw Error("subword must be a string of 0s and 1s, got '" + std::string(s) + "'");
    return Subword{std::string(s)};
}

std::uint64_t Subword::value() const
{
    std::uint64_t v = 0;
    for (char c : bits) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    return v;
}

namespace {

struct OccurrenceScanner {
    std::uint64_t pattern;
    std::uint64_t mask;
    int l;
    int n;
    int positions;

    // Bit s-1 set iff omega starts at position s (1 = leftmost).
    std::uint64_t occurrences(std::uint64_t word) const
    {
        std::uint64_t set = 0;
        for (int s = 1; s <= positions; ++s)
            if (((word >> (n - l - (s - 1))) & mask) == pattern) set |= std::uint64_t{1} << (s - 1);
        return set;
    }
};

OccurrenceScanner make_scanner(const Subword& omega, int n)
{
    const int l = omega.length();
    if (n < 0 || n > kSubwordOracleMaxN)
        throw LimitError("subword oracle needs 0 <= n <= " + std::to_string(kSubwordOracleMaxN));
    return {omega.value(), (std::uint64_t{1} << l) - 1, l, n, std::max(0, n - l + 1)};
}

SubwordClassCount tally(const std::vector<std::uint8_t>& seen, int positions)
{
    SubwordClassCount out;
    out.by_size.assign(positions + 1, 0);
    for (std::size_t set = 0; set < seen.size(); ++set)
        if (seen[set]) {
            out.classes++;
            out.by_size[std::popcount(set)]++;
        }
    return out;
}

} // namespace

SubwordClassCount subword_class_oracle_serial(const Subword& omega, int n)
{
    const auto scan = make_scanner(omega, n);
    std::vector<std::uint8_t> seen(std::size_t{1} << scan.positions, 0);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) seen[scan.occurrences(w)] = 1;
    return tally(seen, scan.positions);
}

SubwordClassCount subword_class_oracle(const Subword& omega, int n)
{
    const auto scan = make_scanner(omega, n);
    std::vector<std::uint8_t> seen(std::size_t{1} << scan.positions, 0);
    const std::int64_t words = std::int64_t{1} << n;
    std::uint8_t* flags = seen.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t w = 0; w < words; ++w) {
        const std::uint64_t set = scan.occurrences(static_cast<std::uint64_t>(w));
#pragma omp atomic write
        flags[set] = 1;
    }
    return tally(seen, scan.positions);
}

} // namespace rcomb
