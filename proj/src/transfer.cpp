#include "rcomb/digraph.hpp"

#include <algorithm>
#include <numeric>

namespace rcomb {

namespace {

// Nonzero nodes by decreasing label length, then the 0 node. Zero-length arcs
// (squares out of nonzero nodes) always go to a shorter label or to the 0 node,
// so one pass in this order settles every node at a fixed total length.
std::vector<std::size_t> settle_order(const MetatileDigraph& g)
{
    std::vector<std::size_t> order(g.size() - 1);
    std::iota(order.begin(), order.end(), std::size_t{1});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.label(a).digits() > g.label(b).digits();
    });
    order.push_back(MetatileDigraph::zero);
    return order;
}

} // namespace

CountTable count_via_transfer(const MetatileDigraph& g, int n_max, bool want_triangle)
{
    if (n_max < 0) throw Error("n_max must be nonnegative");
    const int window = g.comb().q + 2; // longest arc is q+1
    const std::size_t nodes = g.size();
    const auto order = settle_order(g);

    // ring[n % window][node][k]; k collapses to a single slot in totals mode.
    auto width = [&](int n) { return want_triangle ? static_cast<std::size_t>(n + 1) : std::size_t{1}; };
    std::vector<std::vector<std::vector<BigInt>>> ring(window, std::vector<std::vector<BigInt>>(nodes));
    auto slot = [&](int n) -> std::vector<std::vector<BigInt>>& { return ring[n % window]; };
    for (int n = 0; n < window && n <= n_max; ++n)
        for (auto& v : slot(n)) v.assign(width(n), 0);
    slot(0)[MetatileDigraph::zero][0] = 1;

    CountTable table(n_max, want_triangle);
    for (int n = 0; n <= n_max; ++n) {
        auto& here = slot(n);
        for (std::size_t u : order) {
            const auto& ways = here[u];
            if (u == MetatileDigraph::zero) {
                if (want_triangle)
                    for (int k = 0; k <= n; ++k) table.at_ref(n, k) = ways[k];
                else
                    table.total_ref(n) = ways[0];
            }
            for (const Arc& arc : g.arcs(u)) {
                const int m = n + arc.len;
                if (m > n_max) continue;
                auto& dest = slot(m)[arc.dest];
                const int shift = want_triangle ? arc.combs : 0;
                for (std::size_t k = 0; k < ways.size(); ++k)
                    if (sgn(ways[k]) != 0) dest[k + shift] += ways[k];
            }
        }
        // Recycle this slot for length n + window.
        const int next = n + window;
        if (next <= n_max)
            for (auto& v : here) v.assign(width(next), 0);
    }
    if (want_triangle) table.fill_totals_from_triangle();
    return table;
}

CountTable subset_counts_via_transfer(const DifferenceSet& Q, int n_max, bool want_triangle)
{
    const auto g = build_digraph(comb_from_differences(Q));
    return count_via_transfer(g, n_max + Q.q(), want_triangle).shifted(Q.q());
}

} // namespace rcomb
