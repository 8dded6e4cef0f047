#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcomb/core.hpp"
#include "rcomb/count_table.hpp"

namespace rcomb {

// Brute-force ground truth. Nothing here uses the digraph or recurrence code.

constexpr int kSubsetOracleMaxN = 32;
constexpr int kTilingOracleMaxBoard = 40;
constexpr int kSubwordOracleMaxN = 24;

// S_n (and S_{n,k}) by testing every subset of N_{n_max} with the shifted-AND
// difference test. A subset whose largest element is i is allowed in every N_m
// with m >= i, so each subset is tested once.
//
// The serial version visits subsets in increasing order of their bit string, the
// same order as the rcl program; the parallel version partitions that range
// across OpenMP threads with per-thread accumulators. Both give identical tables.
CountTable subset_count_oracle_serial(const DifferenceSet& Q, int n_max, bool want_triangle);
CountTable subset_count_oracle(const DifferenceSet& Q, int n_max, bool want_triangle);

// True iff the subset with bit string s (bit i-1 <-> element i) has no
// pairwise difference in Q.
bool subset_allowed(std::uint64_t s, const DifferenceSet& Q);

// The rcl program's exact output for "rcl Q" / "rcl Q t", with MAXn = n_max.
std::string subset_oracle_report(const DifferenceSet& Q, int n_max, bool triangle);

// B_n and B_{n,k} by exhaustive restricted-overlap tiling: repeatedly put either a
// square or a comb with its leftmost cell on the leftmost empty cell, OR-ing the
// comb's occupancy into the board. Each tiling is produced once, identified by the
// sequence of (leftmost cell, tile kind) in increasing position.
CountTable tiling_count_oracle(const DifferenceSet& Q, int n_max);

// A binary word given as a string of '0'/'1', leftmost character first.
struct Subword {
    std::string bits;

    static Subword parse(std::string_view s);
    int length() const { return static_cast<int>(bits.size()); }
    // omega as an integer, leftmost bit most significant.
    std::uint64_t value() const;
};

struct SubwordClassCount {
    std::uint64_t classes = 0;
    std::vector<std::uint64_t> by_size; // by_size[k] = classes whose occurrence set has k elements
};

// Groups all 2^n binary words of length n by the set of positions (1 = leftmost)
// at which omega occurs and counts the distinct occurrence sets.
SubwordClassCount subword_class_oracle_serial(const Subword& omega, int n);
SubwordClassCount subword_class_oracle(const Subword& omega, int n);

} // namespace rcomb
