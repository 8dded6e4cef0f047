#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rcomb/core.hpp"
#include "rcomb/digraph.hpp"
#include "rcomb/oracles.hpp"

namespace rcomb {

struct Placement {
    int cell = 1; // leftmost cell, 1-indexed
    Tile tile = Tile::square;

    friend bool operator==(const Placement&, const Placement&) = default;
};

// A restricted-overlap tiling of an (n+q)-board, listed in placement order.
struct TilingWitness {
    int board_length = 0;
    CombShape comb;
    std::vector<Placement> placements; // increasing cell
    std::vector<int> coverage;         // coverage[c-1] = tiles covering cell c
};

// Combs at the cells of S, squares on every other cell left empty.
// Throws Error if S leaves N_n or has a pairwise difference in Q.
TilingWitness subset_to_tiling(const std::vector<int>& S, int n, const DifferenceSet& Q);

// Replays the witness (each tile on the leftmost empty cell, full coverage,
// recorded coverage consistent) and returns the comb cells. Throws Error on an
// invalid witness.
std::vector<int> tiling_to_subset(const TilingWitness& T);

struct RestrictedPermutation {
    std::vector<int> images;       // images[i-1] = π(i)
    std::vector<int> displacements; // D
};

constexpr int kMaxPermutationSize = 16;

// Calls visit for every permutation of N_size with π(i) - i in D.
void for_each_restricted_permutation(int size, const std::vector<int>& D,
                                     const std::function<void(const std::vector<int>&)>& visit);

// Permutations of N_{n+jm} with π(i) - i in {-m, 0, jm}, counted by
// excedances: result[k] = permutations with k positions where π(i) > i.
std::vector<std::uint64_t> perm_count_jm(int n, int m, int j);

// Permutations of N_{n+1} that are products of non-overlapping adjacent
// transpositions and whose images differ by at most m within every m
// consecutive positions, counted by transpositions.
std::vector<std::uint64_t> perm_count_1m(int n, int m);

// j in Q iff omega mod 2^{l-j} != floor(omega / 2^j), j = 1..l-1.
DifferenceSet subword_to_differences(const Subword& omega);
// Same set by comparing the word with itself shifted j places as strings.
DifferenceSet subword_self_disagreements(const Subword& omega);

struct SubwordRow {
    int n = 0;
    std::uint64_t brute = 0;
    std::uint64_t predicted = 0; // S_{n-l+1}
    std::vector<std::uint64_t> brute_by_size;
    std::vector<std::uint64_t> predicted_by_size;
    bool match = false;          // totals and size refinement both agree
};

struct SubwordReport {
    Subword omega;
    DifferenceSet Q;
    std::vector<SubwordRow> rows;
    bool all_match() const;
};

// Brute-force class counts against S_{n-l+1}(Q(omega)) for n = n_min..n_max,
// n >= l - 1. Discrepancies are reported, never thrown.
SubwordReport verify_subword_classes(const Subword& omega, int n_min, int n_max);

std::string format_subword_report(const SubwordReport& report);

} // namespace rcomb
