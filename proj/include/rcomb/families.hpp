#pragma once

#include <string>
#include <vector>

#include "rcomb/core.hpp"
#include "rcomb/recurrence.hpp"

namespace rcomb {

// Closed-form recurrence families. Each family function checks its
// precondition (Error if it fails), builds the closed form, and then
// cross-checks the claimed digraph structure (metatile list, or inner/outer
// cycles and circuits through the common node) against the digraph itself.
// A structural mismatch is a std::logic_error.
enum class Family {
    single_gap_finite, // gapless, or one gap with 2r >= q: finite metatiles in closed form
    finite_metatiles,  // any other finite family: recurrence read off the metatile list
    well_based,        // p_i + p_j never in Q
    tail_loop,         // 1-arc inner cycle at 01^r
    doubled_gap,       // p_a = 2 p_1
    branched_loop,     // p_1 = l > r, two comb-arc inner branches at σ_1
    general,           // none of the above; transfer DP or common-node recurrence
};

std::string family_name(Family f);

// One-l-bonacci numbers: f_j = f_{j-1} + f_{j-l} + δ_{j,0}, f_{j<0} = 0.
BigInt one_l_bonacci(int l, int j);

bool single_gap_finite_applies(const CombShape& comb);
bool well_based_applies(const CombShape& comb);
bool tail_loop_applies(const CombShape& comb);
bool doubled_gap_applies(const CombShape& comb);
bool branched_loop_applies(const CombShape& comb);

// For every j in 1..q-1: j in Q, or j+p <= q and j+p in Q.
bool covers(const CombShape& comb, int p);

Recurrence single_gap_finite_recurrence(const DifferenceSet& Q);
Recurrence well_based_recurrence(const DifferenceSet& Q);
Recurrence tail_loop_recurrence(const DifferenceSet& Q);
Recurrence doubled_gap_recurrence(const DifferenceSet& Q);
Recurrence branched_loop_recurrence(const DifferenceSet& Q);

// c(x) / ((1 - x) c(x) - x) with c(x) = 1 + Σ_{j in Q} x^j. Requires well_based_applies
// (Q empty gives 1/(1-2x)).
RationalGF well_based_gf(const DifferenceSet& Q);

struct Classification {
    Family family = Family::general;
    std::string reason;
};

// a <= 2 follows a complete case analysis on the comb shape; larger a tries the
// closed forms in order and falls back to finite_metatiles or general.
Classification classify(const DifferenceSet& Q);

// Recurrence for a classified family. general uses the common-node recurrence
// when the digraph has a common node and throws otherwise.
Recurrence family_recurrence(const DifferenceSet& Q, Family family);

// Best available recurrence: classify, then family_recurrence.
Recurrence recurrence_for(const DifferenceSet& Q);

} // namespace rcomb
