#include "rcomb/digraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace rcomb {

MetatileList enumerate_metatiles(const MetatileDigraph& g, int max_len)
{
    if (max_len < 0) throw Error("max_len must be nonnegative");
    const std::size_t nodes = g.size();

    // walks[n][node][k]: walks that left the 0 node, have not returned, length n.
    std::vector<std::vector<std::map<int, BigInt>>> walks(max_len + 1, std::vector<std::map<int, BigInt>>(nodes));
    std::map<std::pair<int, int>, BigInt> found;

    auto step = [&](std::size_t from, int n, int k, const BigInt& count) {
        for (const Arc& arc : g.arcs(from)) {
            const int m = n + arc.len;
            if (m > max_len) continue;
            if (arc.dest == MetatileDigraph::zero)
                found[{m, k + arc.combs}] += count;
            else
                walks[m][arc.dest][k + arc.combs] += count;
        }
    };
    step(MetatileDigraph::zero, 0, 0, BigInt(1));

    std::vector<std::size_t> order;
    for (std::size_t u = 1; u < nodes; ++u) order.push_back(u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return g.label(a).digits() > g.label(b).digits(); });

    for (int n = 0; n <= max_len; ++n)
        for (std::size_t u : order)
            for (const auto& [k, count] : walks[n][u]) step(u, n, k, count);

    MetatileList out;
    out.max_len = max_len;
    for (const auto& [key, count] : found) out.entries.push_back({key.first, key.second, count});
    const auto longest = longest_metatile(g);
    out.complete = longest && *longest <= max_len;
    return out;
}

std::optional<int> longest_metatile(const MetatileDigraph& g)
{
    if (has_inner_cycles(g)) return std::nullopt;
    // Longest walk from u to its first arrival at the 0 node, over the acyclic nonzero part.
    std::vector<int> memo(g.size(), -1);
    std::function<int(std::size_t)> from = [&](std::size_t u) {
        if (memo[u] >= 0) return memo[u];
        int best = 0;
        for (const Arc& arc : g.arcs(u))
            best = std::max(best, arc.len + (arc.dest == MetatileDigraph::zero ? 0 : from(arc.dest)));
        return memo[u] = best;
    };
    int best = 0;
    for (const Arc& arc : g.arcs(MetatileDigraph::zero))
        best = std::max(best, arc.len + (arc.dest == MetatileDigraph::zero ? 0 : from(arc.dest)));
    return best;
}

} // namespace rcomb
