#include "doctest.h"

#include <functional>
#include <map>
#include <tuple>

#include "rcomb/cycles.hpp"
#include "rcomb/digraph.hpp"
#include "rcomb/oracles.hpp"

using namespace rcomb;

namespace {

MetatileDigraph graph(const char* spec)
{
    return build_digraph(comb_from_differences(DifferenceSet::parse(spec)));
}

using CycleKey = std::tuple<int, int, bool>;

// Simple cycles by plain DFS: each cycle is found from its smallest node.
std::map<CycleKey, int> brute_cycles(const MetatileDigraph& g)
{
    std::map<CycleKey, int> out;
    std::vector<bool> on_path(g.size(), false);
    for (std::size_t s = 0; s < g.size(); ++s) {
        std::function<void(std::size_t, int, int, bool)> dfs = [&](std::size_t u, int len, int combs, bool zero) {
            on_path[u] = true;
            for (const Arc& arc : g.arcs(u)) {
                if (arc.dest < s) continue;
                const int l2 = len + arc.len, c2 = combs + arc.combs;
                if (arc.dest == s)
                    out[{l2, c2, zero || s == 0}] += 1;
                else if (!on_path[arc.dest])
                    dfs(arc.dest, l2, c2, zero);
            }
            on_path[u] = false;
        };
        dfs(s, 0, 0, false);
    }
    return out;
}

bool on_cycle(const Cycle& c, std::size_t v)
{
    for (const auto& ref : c.arcs)
        if (ref.from == v) return true;
    return false;
}

std::vector<CycleTerm> aggregate(const std::map<std::pair<int, int>, BigInt>& m)
{
    std::vector<CycleTerm> out;
    for (const auto& [k, c] : m) out.push_back({k.first, k.second, c});
    return out;
}

} // namespace

TEST_CASE("digraph of Q = {3}")
{
    const auto g = graph("3");
    REQUIRE(g.size() == 4);
    CHECK(g.label(0).to_string() == "0");
    const auto n001 = g.find(0b100);
    const auto n01 = g.find(0b10);
    const auto n011 = g.find(0b110);
    REQUIRE(n001);
    REQUIRE(n01);
    REQUIRE(n011);
    CHECK(g.label(*n011).to_string() == "011");
    CHECK(g.comb_arc(0).dest == *n001);
    CHECK(g.comb_arc(0).len == 4);
    CHECK(g.square_arc(0).dest == 0);
    CHECK(g.square_arc(0).len == 1);
    CHECK(g.square_arc(*n001).dest == *n01);
    CHECK(g.square_arc(*n001).len == 0);
    CHECK(g.comb_arc(*n01).dest == *n01);
    CHECK(g.comb_arc(*n01).len == 2);
    CHECK(g.comb_arc(*n011).dest == 0);
}

TEST_CASE("digraph arc invariants, q <= 10")
{
    for (int q = 0; q <= 10; ++q)
        for (const auto& Q : all_difference_sets_with_max(q)) {
            const auto g = build_digraph(comb_from_differences(Q));
            for (std::size_t u = 0; u < g.size(); ++u) {
                const auto& lab = g.label(u);
                CHECK(g.square_arc(u).tile == Tile::square);
                CHECK(g.comb_arc(u).tile == Tile::comb);
                CHECK(g.square_arc(u).len == (lab.is_zero() ? 1 : 0));
                CHECK(g.comb_arc(u).len == q + 1 - lab.digits());
                if (!lab.is_zero()) CHECK((lab.bits & 1u) == 0);
            }
        }
}

TEST_CASE("add_tile drops the leading filled cells")
{
    CHECK(add_tile(0, 0b10111) == 0b10);
    CHECK(add_tile(0b10, 1) == 0);
    CHECK(add_tile(0b100, 1) == 0b10);
    CHECK(add_tile(0, 1) == 0);
}

TEST_CASE("transfer DP equals the subset oracle, q <= 6, n <= 16")
{
    for (int q = 0; q <= 6; ++q)
        for (const auto& Q : all_difference_sets_with_max(q)) {
            REQUIRE(subset_counts_via_transfer(Q, 16, true) == subset_count_oracle(Q, 16, true));
            REQUIRE(subset_counts_via_transfer(Q, 16, false) == subset_count_oracle(Q, 16, false));
        }
}

TEST_CASE("finite family iff 2r >= q, and the 1-arc inner cycle condition, q <= 12")
{
    for (int q = 1; q <= 12; ++q)
        for (const auto& Q : all_difference_sets_with_max(q)) {
            const auto comb = comb_from_differences(Q);
            const auto g = build_digraph(comb);
            REQUIRE(is_finite_family(comb) == !has_inner_cycles(g));
            CHECK(longest_metatile(g).has_value() == is_finite_family(comb));
            if (!comb.has_gap()) continue;
            const int r = comb.r, t = static_cast<int>(comb.teeth.size());
            const bool cond = q == 2 * r + 1 ||
                              (q > 2 * r + 1 && comb.gaps.back() == 1 && t >= 2 && comb.teeth[t - 2] >= q - 2 * r - 1);
            CHECK_MESSAGE(has_one_arc_inner_cycle(g) == cond, Q.to_string());
        }
}

TEST_CASE("metatiles")
{
    const auto fib = enumerate_metatiles(graph("1"), 10);
    REQUIRE(fib.complete);
    REQUIRE(fib.entries.size() == 2);
    CHECK(fib.entries[0] == Metatile{1, 0, 1});
    CHECK(fib.entries[1] == Metatile{2, 1, 1});

    const auto inf = enumerate_metatiles(graph("1,2,4"), 30);
    CHECK_FALSE(inf.complete);
    CHECK_FALSE(longest_metatile(graph("1,2,4")).has_value());
    CHECK_THROWS_AS(enumerate_metatiles(graph("1"), -1), Error);
}

TEST_CASE("Johnson's algorithm matches plain DFS, q <= 7")
{
    for (int q = 0; q <= 7; ++q)
        for (const auto& Q : all_difference_sets_with_max(q)) {
            const auto g = build_digraph(comb_from_differences(Q));
            const auto cycles = enumerate_cycles(g, 1000000);
            std::map<CycleKey, int> got;
            for (const auto& c : cycles) got[{c.length, c.combs, c.through_zero}] += 1;
            REQUIRE_MESSAGE(got == brute_cycles(g), Q.to_string());
        }
    CHECK_THROWS_AS(enumerate_cycles(graph("7"), 10), LimitError);
}

TEST_CASE("common node of Q = {3}")
{
    const auto g = graph("3");
    const auto a = analyze_cycles(g);
    REQUIRE(a.common_node);
    CHECK(g.label(*a.common_node).to_string() == "01");
    CHECK(a.inner == std::vector<CycleTerm>{{2, 1, 1}});
    CHECK(a.outer == std::vector<CycleTerm>{{1, 0, 1}, {5, 2, 1}, {6, 3, 1}});
    CHECK(a.circuits == std::vector<CycleTerm>{{4, 1, 1}});
    CHECK(a.cycles.size() == 5);
    CHECK(a.common_circuits.size() == 1);
}

TEST_CASE("aggregated cycle data matches the explicit lists, q <= 8")
{
    int checked = 0;
    for (int q = 1; q <= 8; ++q)
        for (const auto& Q : all_difference_sets_with_max(q)) {
            const auto g = build_digraph(comb_from_differences(Q));
            CycleOptions opts;
            opts.max_cycles = 20000;
            CycleAnalysis a;
            try {
                a = analyze_cycles(g, opts);
            } catch (const LimitError&) {
                continue;
            }
            std::map<std::pair<int, int>, BigInt> inner, outer, circuits;
            for (const auto& c : a.cycles) {
                if (!c.through_zero) {
                    // with a common node, every inner cycle passes it
                    if (a.common_node) REQUIRE(on_cycle(c, *a.common_node));
                    inner[{c.length, c.combs}] += 1;
                } else if (!a.common_node || !on_cycle(c, *a.common_node)) {
                    outer[{c.length, c.combs}] += 1;
                }
            }
            for (const auto& c : a.common_circuits) circuits[{c.length, c.combs}] += 1;
            if (!a.has_inner) {
                CHECK(inner.empty());
                CHECK(a.outer == aggregate(outer));
            } else if (a.common_node) {
                CHECK(a.inner == aggregate(inner));
                CHECK(a.outer == aggregate(outer));
                CHECK(a.circuits == aggregate(circuits));
                ++checked;
            } else {
                CHECK(a.common_candidates.empty());
            }
        }
    CHECK(checked > 20);
}

TEST_CASE("common node override must lie on every inner cycle")
{
    const auto g = graph("3");
    CycleOptions opts;
    opts.common_node = 0b100; // 001 is not on the inner cycle
    CHECK_THROWS_AS(analyze_cycles(g, opts), Error);
}
