#include <stdexcept>

#include "rcomb/digraph.hpp"
#include "rcomb/families.hpp"

namespace rcomb {

namespace {

bool applies(Family f, const CombShape& comb)
{
    switch (f) {
    case Family::single_gap_finite: return single_gap_finite_applies(comb);
    case Family::well_based: return well_based_applies(comb);
    case Family::tail_loop: return tail_loop_applies(comb);
    case Family::doubled_gap: return doubled_gap_applies(comb);
    case Family::branched_loop: return branched_loop_applies(comb);
    case Family::finite_metatiles: return is_finite_family(comb);
    case Family::general: return true;
    }
    return false;
}

// Case analysis on the comb shape when at most two differences are allowed.
Classification classify_small(const CombShape& comb)
{
    const int a = comb.a(), l = comb.l, r = comb.r;
    if (a == 0) return {Family::well_based, "no allowed difference below q"};
    if (a == 1) {
        if (r >= l) return {Family::single_gap_finite, "one gap cell, r >= l"};
        return {Family::well_based, "one gap cell, l > r"};
    }
    if (comb.teeth.size() == 2) { // (l,2,r)
        if (r >= l + 1) return {Family::single_gap_finite, "(l,2,r) with r > l"};
        if (l == r) {
            if (l == 1) return {Family::doubled_gap, "(1,2,1)"};
            return {Family::tail_loop, "(l,2,l) with l >= 2"};
        }
        if (l == r + 1) return {Family::branched_loop, "(l,2,r) with l = r+1"};
        return {Family::well_based, "(l,2,r) with l > r+1"};
    }
    // (l,1,m,1,r)
    const int m = comb.teeth[1];
    if (l < r - m) return {Family::finite_metatiles, "(l,1,m,1,r) with 2r >= q"};
    if (l == m + 1) {
        if (l > r) return {Family::well_based, "(l,1,m,1,r) with l = m+1 > r"};
        return {Family::doubled_gap, "(l,1,m,1,r) with l = m+1 <= r"};
    }
    if (l <= r) return {Family::tail_loop, "(l,1,m,1,r) with l <= r"};
    if (l <= m + r + 1) return {Family::branched_loop, "(l,1,m,1,r) with r < l <= m+r+1"};
    return {Family::well_based, "(l,1,m,1,r) with l > m+r+1"};
}

} // namespace

Classification classify(const DifferenceSet& Q)
{
    const CombShape comb = comb_from_differences(Q);
    if (comb.a() <= 2) {
        Classification c = classify_small(comb);
        if (!applies(c.family, comb))
            throw std::logic_error(Q.to_string() + " classified " + family_name(c.family) +
                                   " but fails its precondition");
        return c;
    }
    for (Family f : {Family::single_gap_finite, Family::well_based, Family::tail_loop, Family::doubled_gap,
                     Family::branched_loop})
        if (applies(f, comb)) return {f, "precondition holds"};
    if (is_finite_family(comb)) return {Family::finite_metatiles, "2r >= q"};
    return {Family::general, "no closed form applies"};
}

} // namespace rcomb
