#include "rcomb/oracles.hpp"

#include <bit>

namespace rcomb {

namespace {

struct TilingCounter {
    Bits comb;
    int q;
    int board;
    std::vector<std::uint64_t>& by_combs;

    void place(Bits occupied, int combs)
    {
        const int first_empty = std::countr_one(occupied);
        if (first_empty >= board) {
            by_combs[combs]++;
            return;
        }
        place(occupied | (Bits{1} << first_empty), combs);
        if (first_empty + q < board) place(occupied | (comb << first_empty), combs + 1);
    }
};

} // namespace

CountTable tiling_count_oracle(const DifferenceSet& Q, int n_max)
{
    if (n_max < 0 || n_max > kTilingOracleMaxBoard)
        throw LimitError("tiling oracle supports boards of at most " +
                         std::to_string(kTilingOracleMaxBoard) + " cells");
    const CombShape comb = comb_from_differences(Q);
    CountTable table(n_max, true);
    for (int n = 0; n <= n_max; ++n) {
        std::vector<std::uint64_t> by_combs(n + 1, 0);
        TilingCounter counter{comb.occupancy, comb.q, n, by_combs};
        counter.place(0, 0);
        for (int k = 0; k <= n; ++k) table.at_ref(n, k) = to_big(by_combs[k]);
    }
    table.fill_totals_from_triangle();
    return table;
}

} // namespace rcomb
