#include "rcomb/bijections.hpp"

#include <algorithm>
#include <set>

namespace rcomb {

namespace {

// Cells covered by a tile whose leftmost cell is `cell`.
std::vector<int> cells_of(const CombShape& comb, Tile tile, int cell)
{
    if (tile == Tile::square) return {cell};
    std::vector<int> out;
    for (int i = 0; i < comb.length; ++i)
        if (comb.filled(i)) out.push_back(cell + i);
    return out;
}

} // namespace

TilingWitness subset_to_tiling(const std::vector<int>& S, int n, const DifferenceSet& Q)
{
    if (n < 0) throw Error("n must be nonnegative");
    const std::set<int> members(S.begin(), S.end());
    if (members.size() != S.size()) throw Error("subset has repeated elements");
    for (int x : members)
        if (x < 1 || x > n) throw Error("subset element " + std::to_string(x) + " is outside N_" + std::to_string(n));

    TilingWitness T;
    T.comb = comb_from_differences(Q);
    T.board_length = n + Q.q();
    T.coverage.assign(T.board_length, 0);
    for (int c = 1; c <= T.board_length; ++c) {
        const bool want_comb = members.count(c) > 0;
        if (T.coverage[c - 1] > 0) {
            if (want_comb)
                throw Error("cell " + std::to_string(c) + " is already covered; the subset has a difference in Q");
            continue;
        }
        const Tile tile = want_comb ? Tile::comb : Tile::square;
        T.placements.push_back({c, tile});
        for (int cell : cells_of(T.comb, tile, c)) T.coverage[cell - 1] += 1;
    }
    return T;
}

std::vector<int> tiling_to_subset(const TilingWitness& T)
{
    if (T.board_length < 0 || static_cast<int>(T.coverage.size()) != T.board_length)
        throw Error("witness coverage does not match the board length");
    std::vector<int> cover(T.board_length, 0);
    std::vector<int> S;
    int first_empty = 1;
    for (const Placement& p : T.placements) {
        while (first_empty <= T.board_length && cover[first_empty - 1] > 0) ++first_empty;
        if (p.cell != first_empty)
            throw Error("tile at cell " + std::to_string(p.cell) + " is not on the leftmost empty cell");
        for (int cell : cells_of(T.comb, p.tile, p.cell)) {
            if (cell > T.board_length) throw Error("tile at cell " + std::to_string(p.cell) + " overhangs the board");
            cover[cell - 1] += 1;
        }
        if (p.tile == Tile::comb) S.push_back(p.cell);
    }
    if (std::find(cover.begin(), cover.end(), 0) != cover.end()) throw Error("board is not fully covered");
    if (cover != T.coverage) throw Error("recorded coverage disagrees with the replay");
    return S;
}

DifferenceSet subword_to_differences(const Subword& omega)
{
    const int l = omega.length();
    if (l < 1) throw Error("subword must be nonempty");
    const std::uint64_t w = omega.value();
    std::vector<int> Q;
    for (int j = 1; j <= l - 1; ++j)
        if ((w & ((std::uint64_t{1} << (l - j)) - 1)) != (w >> j)) Q.push_back(j);
    return DifferenceSet(Q);
}

DifferenceSet subword_self_disagreements(const Subword& omega)
{
    const std::string& s = omega.bits;
    const int l = omega.length();
    std::vector<int> Q;
    for (int j = 1; j <= l - 1; ++j)
        if (s.compare(j, std::string::npos, s, 0, l - j) != 0) Q.push_back(j);
    return DifferenceSet(Q);
}

} // namespace rcomb
