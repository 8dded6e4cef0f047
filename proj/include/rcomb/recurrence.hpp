#pragma once

#include <string>
#include <vector>

#include "rcomb/count_table.hpp"
#include "rcomb/cycles.hpp"
#include "rcomb/digraph.hpp"

namespace rcomb {

// coeff * δ_{n,n_offset} δ_{k,k_offset}
struct DeltaTerm {
    int n_offset = 0;
    int k_offset = 0;
    BigInt coeff = 0;

    friend bool operator==(const DeltaTerm&, const DeltaTerm&) = default;
};

// coeff * B_{n - n_shift, k - k_shift}
struct ShiftTerm {
    int n_shift = 1;
    int k_shift = 0;
    BigInt coeff = 0;

    friend bool operator==(const ShiftTerm&, const ShiftTerm&) = default;
};

// B_{n,k} = Σ deltas + Σ shifts, with B_{n<0} = B_{n,k<0} = B_{n<k,k} = 0.
// The totals recurrence for B_n is the same term list with k dropped.
struct Recurrence {
    std::vector<DeltaTerm> deltas;
    std::vector<ShiftTerm> shifts;

    // Like terms merged, zero terms removed, sorted by offsets.
    Recurrence merged() const;
    // Totals form: k offsets set to 0 and like terms merged.
    Recurrence totals() const;

    // Every shift is at least 1 and every offset nonnegative.
    void validate() const;

    friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

// Numerator and denominator coefficients in x, lowest degree first.
struct RationalGF {
    std::vector<BigInt> numerator;
    std::vector<BigInt> denominator;

    // Trailing zeros trimmed, common integer content divided out, denominator
    // constant term made positive. No polynomial gcd is taken.
    RationalGF normalized() const;

    friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

// Same power series: N1 * D2 == N2 * D1.
bool same_series(const RationalGF& a, const RationalGF& b);

// First n_max+1 series coefficients. Throws if a coefficient is not integral.
std::vector<BigInt> series_expand(const RationalGF& gf, int n_max);

// Table of B for n = 0..n_max from the triangle recurrence (want_triangle) or the
// totals recurrence.
CountTable evaluate_recurrence(const Recurrence& rec, int n_max, bool want_triangle);

// Generating function of S_n = B_{n+q} for a B_n recurrence of the form
// B_n = δ_{n,0} + Σ_{m>0} (α_m δ_{n,m} + β_m B_{n-m}):
//   numerator   1 + Σ_{m>0} (α_{m+q} + Σ_{j=1..q} β_{m+j}) x^m
//   denominator 1 - Σ_{m>0} β_m x^m
// Throws if the recurrence does not give B_n = 1 for 0 <= n <= q.
RationalGF gf_from_recurrence(const Recurrence& rec, int q);

// Conditioning on the last metatile. Requires a complete metatile list.
Recurrence from_finite_metatiles(const MetatileList& metatiles);

// Common-node recurrence:
//   B_{n,k} = δδ + Σ_r (B_{n-L_r,k-K_r} - δ_{n,L_r}δ_{k,K_r})
//           + Σ_i (B_{n-l_oi,k-k_oi} - Σ_r B_{n-l_oi-L_r,k-k_oi-K_r})
//           + Σ_i B_{n-l_ci,k-k_ci}
// Throws when the analysis has no common node.
Recurrence from_common_node(const CycleAnalysis& analysis);

// "B_{n,k} = δ_{n,0}δ_{k,0} + B_{n-1,k} + ..." or, for totals, "B_n = ...".
std::string format_recurrence(const Recurrence& rec, bool totals);
// "(1 + x) / (1 - x - x^2)"
std::string format_gf(const RationalGF& gf);

} // namespace rcomb
