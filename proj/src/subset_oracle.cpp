#include "rcomb/oracles.hpp"

#include <bit>
#include <omp.h>

namespace rcomb {

namespace {

void check_n(int n_max)
{
    if (n_max < 0 || n_max > kSubsetOracleMaxN)
        throw LimitError("subset oracle supports 0 <= n <= " + std::to_string(kSubsetOracleMaxN) +
                         ", got " + std::to_string(n_max));
}

// Smallest n with s allowed as a subset of N_n, or 0 if s has a disallowed difference.
inline int minimal_board(std::uint64_t s, std::uint64_t theta, int n_max)
{
    std::uint64_t ss = s;
    for (int i = 1; i <= n_max; ++i) {
        bool test = ss & 1u;
        ss >>= 1;
        if (ss == 0) return i;
        if (test && (theta & ss)) return 0;
    }
    return 0;
}

CountTable from_first_counts(const std::vector<std::vector<std::uint64_t>>& first, int n_max, bool tri)
{
    CountTable table(n_max, tri);
    std::vector<std::uint64_t> running(n_max + 2, 0);
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n_max + 1; ++k) running[k] += first[n][k];
        if (tri) {
            for (int k = 0; k <= n; ++k) table.at_ref(n, k) = to_big(running[k]);
        } else {
            table.total_ref(n) = to_big(running[0]);
        }
    }
    if (tri) table.fill_totals_from_triangle();
    return table;
}

} // namespace

bool subset_allowed(std::uint64_t s, const DifferenceSet& Q)
{
    for (int x = 1; x < 64; ++x)
        if ((s >> (x - 1)) & 1u)
            if (Q.theta() & (s >> x)) return false;
    return true;
}

CountTable subset_count_oracle_serial(const DifferenceSet& Q, int n_max, bool want_triangle)
{
    check_n(n_max);
    // counts[n][k], k = 0 in totals mode; the empty subset is allowed for every n.
    std::vector<std::vector<std::uint64_t>> counts(n_max + 1, std::vector<std::uint64_t>(n_max + 2, 0));
    for (int n = 0; n <= n_max; ++n) counts[n][0] = 1;

    const std::uint64_t theta = Q.theta();
    const std::uint64_t end = std::uint64_t{1} << n_max;
    for (std::uint64_t s = 1; s < end; ++s) {
        int k = want_triangle ? std::popcount(s) : 0;
        int i = minimal_board(s, theta, n_max);
        if (i == 0) continue;
        for (int j = i; j <= n_max; ++j) counts[j][k]++;
    }

    CountTable table(n_max, want_triangle);
    for (int n = 0; n <= n_max; ++n) {
        if (want_triangle)
            for (int k = 0; k <= n; ++k) table.at_ref(n, k) = to_big(counts[n][k]);
        else
            table.total_ref(n) = to_big(counts[n][0]);
    }
    if (want_triangle) table.fill_totals_from_triangle();
    return table;
}

CountTable subset_count_oracle(const DifferenceSet& Q, int n_max, bool want_triangle)
{
    check_n(n_max);
    const std::uint64_t theta = Q.theta();
    const std::int64_t end = std::int64_t{1} << n_max;
    const int width = n_max + 2;

    // first[n][k]: allowed subsets of size k whose largest element is n.
    std::vector<std::vector<std::uint64_t>> first(n_max + 1, std::vector<std::uint64_t>(width, 0));
    first[0][0] = 1;

#pragma omp parallel
    {
        std::vector<std::uint64_t> local((n_max + 1) * width, 0);
#pragma omp for schedule(static) nowait
        for (std::int64_t s = 1; s < end; ++s) {
            int i = minimal_board(static_cast<std::uint64_t>(s), theta, n_max);
            if (i == 0) continue;
            int k = want_triangle ? std::popcount(static_cast<std::uint64_t>(s)) : 0;
            local[i * width + k]++;
        }
#pragma omp critical
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k < width; ++k) first[n][k] += local[n * width + k];
    }
    return from_first_counts(first, n_max, want_triangle);
}

std::string subset_oracle_report(const DifferenceSet& Q, int n_max, bool triangle)
{
    return rcl_format(subset_count_oracle(Q, n_max, triangle), triangle);
}

} // namespace rcomb
