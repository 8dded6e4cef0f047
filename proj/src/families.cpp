#include "rcomb/families.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "rcomb/cycles.hpp"
#include "rcomb/digraph.hpp"

namespace rcomb {

std::string family_name(Family f)
{
    switch (f) {
    case Family::single_gap_finite: return "single-gap-finite";
    case Family::finite_metatiles: return "finite-metatiles";
    case Family::well_based: return "well-based";
    case Family::tail_loop: return "tail-loop";
    case Family::doubled_gap: return "doubled-gap";
    case Family::branched_loop: return "branched-loop";
    case Family::general: return "general";
    }
    return "general";
}

BigInt one_l_bonacci(int l, int j)
{
    if (l < 1) throw Error("one_l_bonacci needs l >= 1");
    if (j < 0) return 0;
    std::vector<BigInt> f(j + 1);
    for (int i = 0; i <= j; ++i) {
        f[i] = i == 0 ? 1 : 0;
        if (i >= 1) f[i] += f[i - 1];
        if (i >= l) f[i] += f[i - l];
    }
    return f[j];
}

namespace {

BigInt binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

int p(const CombShape& comb, int i) // 1-indexed p_i
{
    return comb.allowed[i - 1];
}

using Terms = std::map<std::pair<int, int>, BigInt>;

std::vector<CycleTerm> as_terms(const Terms& t)
{
    std::vector<CycleTerm> out;
    for (const auto& [key, c] : t)
        if (c != 0) out.push_back({key.first, key.second, c});
    return out;
}

[[noreturn]] void mismatch(const DifferenceSet& Q, const std::string& what)
{
    throw std::logic_error("digraph of " + Q.to_string() + " does not have the " + what + " structure");
}

// The finite family's first-return walks must be exactly `expected`.
void check_metatiles(const DifferenceSet& Q, const MetatileDigraph& g, const Terms& expected)
{
    const auto longest = longest_metatile(g);
    if (!longest) mismatch(Q, "finite metatile");
    const auto list = enumerate_metatiles(g, *longest);
    Terms got;
    for (const auto& m : list.entries) got[{m.length, m.combs}] += m.multiplicity;
    if (as_terms(got) != as_terms(expected)) mismatch(Q, "finite metatile");
}

// Some common node (the given one if any) must carry exactly these inner
// cycles, outer cycles and circuits.
void check_common_node(const DifferenceSet& Q, const MetatileDigraph& g, std::optional<Bits> node,
                       const Terms& inner, const Terms& outer, const Terms& circuits, const std::string& what)
{
    const auto candidates = common_node_candidates(g);
    for (std::size_t v : candidates) {
        if (node && g.label(v).bits != *node) continue;
        CycleOptions opts;
        opts.list_cycles = false;
        opts.common_node = g.label(v).bits;
        const auto a = analyze_cycles(g, opts);
        if (a.inner == as_terms(inner) && a.outer == as_terms(outer) && a.circuits == as_terms(circuits)) return;
    }
    mismatch(Q, what);
}

void require(bool ok, const DifferenceSet& Q, const std::string& family)
{
    if (!ok) throw Error(Q.to_string() + " does not satisfy the " + family + " precondition");
}

} // namespace

bool covers(const CombShape& comb, int shift)
{
    for (int j = 1; j <= comb.q - 1; ++j)
        if (!comb.filled(j) && !(j + shift <= comb.q && comb.filled(j + shift))) return false;
    return true;
}

bool single_gap_finite_applies(const CombShape& comb)
{
    return !comb.has_gap() || (comb.gaps.size() == 1 && 2 * comb.r >= comb.q);
}

bool well_based_applies(const CombShape& comb)
{
    for (int x : comb.allowed)
        for (int y : comb.allowed)
            if (x + y <= comb.q && comb.filled(x + y)) return false;
    return true;
}

bool tail_loop_applies(const CombShape& comb)
{
    const int a = comb.a(), q = comb.q, r = comb.r;
    if (a < 2) return false;
    for (int i = 1; i < a; ++i)
        if (!covers(comb, p(comb, i))) return false;
    return q == 2 * r + 1 || (q > 2 * r + 1 && p(comb, a - 1) <= r);
}

bool doubled_gap_applies(const CombShape& comb)
{
    const int a = comb.a(), q = comb.q, l = comb.l;
    if (a < 2 || p(comb, a) != 2 * l) return false;
    return q == 4 * l - 1 || (q < 4 * l - 1 && p(comb, a - 1) <= q - 2 * l);
}

bool branched_loop_applies(const CombShape& comb)
{
    const int a = comb.a(), q = comb.q, l = comb.l, r = comb.r;
    if (a < 2 || l <= r) return false;
    return q == 2 * l || (a == 2 && q >= 2 * l && q != 2 * l + r);
}

Recurrence single_gap_finite_recurrence(const DifferenceSet& Q)
{
    const CombShape comb = comb_from_differences(Q);
    require(single_gap_finite_applies(comb), Q, "single-gap-finite");
    const int q = comb.q, l = comb.l, r = comb.r;

    Recurrence rec;
    Terms expected;
    rec.deltas.push_back({0, 0, 1});
    rec.shifts.push_back({1, 0, 1});
    rec.shifts.push_back({q + 1, 1, 1});
    if (comb.has_gap())
        for (int j = 0; j <= q - l - r; ++j)
            for (int i = 0; i <= j / l; ++i) {
                BigInt c = binomial(j - (l - 1) * i, i);
                if (c != 0) rec.shifts.push_back({l + q + 1 + j, 2 + i, c});
            }
    for (const auto& t : rec.shifts) expected[{t.n_shift, t.k_shift}] += t.coeff;
    check_metatiles(Q, build_digraph(comb), expected);
    return rec;
}

Recurrence well_based_recurrence(const DifferenceSet& Q)
{
    const CombShape comb = comb_from_differences(Q);
    require(well_based_applies(comb), Q, "well-based");
    const int q = comb.q;

    Recurrence rec;
    rec.deltas.push_back({0, 0, 1});
    rec.shifts.push_back({1, 0, 1});
    rec.shifts.push_back({q + 1, 1, 1});
    for (int pi : comb.allowed) {
        rec.shifts.push_back({pi, 1, 1});
        rec.shifts.push_back({pi + 1, 1, -1});
        rec.deltas.push_back({pi, 1, -1});
    }

    const auto g = build_digraph(comb);
    if (comb.a() == 0) {
        check_metatiles(Q, g, {{{1, 0}, 1}, {{q + 1, 1}, 1}});
    } else {
        Terms inner;
        for (int pi : comb.allowed) inner[{pi, 1}] += 1;
        check_common_node(Q, g, add_tile(0, comb.occupancy), inner, {{{1, 0}, 1}}, {{{q + 1, 1}, 1}}, "well-based");
    }
    return rec;
}

Recurrence tail_loop_recurrence(const DifferenceSet& Q)
{
    const CombShape comb = comb_from_differences(Q);
    require(tail_loop_applies(comb), Q, "tail-loop");
    const int q = comb.q, r = comb.r, a = comb.a();

    Recurrence rec;
    rec.deltas.push_back({0, 0, 1});
    rec.deltas.push_back({q - r, 1, -1});
    rec.shifts.push_back({1, 0, 1});
    rec.shifts.push_back({q - r, 1, 1});
    rec.shifts.push_back({q - r + 1, 1, -1});
    rec.shifts.push_back({q + 1, 1, 1});
    Terms outer{{{1, 0}, 1}};
    for (int i = 1; i < a; ++i) {
        rec.shifts.push_back({q + 1 + p(comb, i), 2, 1});
        rec.shifts.push_back({2 * q - r + 1 + p(comb, i), 3, -1});
        outer[{q + 1 + p(comb, i), 2}] += 1;
    }

    const Bits node = ((Bits{1} << r) - 1) << 1;
    check_common_node(Q, build_digraph(comb), node, {{{q - r, 1}, 1}}, outer, {{{q + 1, 1}, 1}}, "tail-loop");
    return rec;
}

Recurrence doubled_gap_recurrence(const DifferenceSet& Q)
{
    const CombShape comb = comb_from_differences(Q);
    require(doubled_gap_applies(comb), Q, "doubled-gap");
    const int l = comb.l, a = comb.a(), c = comb.q + 1;

    Recurrence rec;
    rec.deltas.push_back({0, 0, 1});
    rec.deltas.push_back({2 * l, 1, -1});
    for (auto [n, k, coeff] : {std::tuple{1, 0, 1}, {2 * l, 1, 1}, {2 * l + 1, 1, -1}, {c, 1, 1}, {c + l, 2, 1},
                               {c + 2 * l, 3, 1}, {c + 3 * l, 3, -1}, {c + 4 * l, 4, -1}})
        rec.shifts.push_back({n, k, coeff});
    Terms outer{{{1, 0}, 1}, {{c + l, 2}, 1}, {{c + 2 * l, 3}, 1}};
    for (int i = 2; i <= a - 1; ++i) {
        rec.shifts.push_back({c + p(comb, i), 2, 1});
        rec.shifts.push_back({c + 2 * l + p(comb, i), 3, -1});
        outer[{c + p(comb, i), 2}] += 1;
    }

    check_common_node(Q, build_digraph(comb), std::nullopt, {{{2 * l, 1}, 1}}, outer, {{{c, 1}, 1}}, "doubled-gap");
    return rec;
}

Recurrence branched_loop_recurrence(const DifferenceSet& Q)
{
    const CombShape comb = comb_from_differences(Q);
    require(branched_loop_applies(comb), Q, "branched-loop");
    const int l = comb.l, a = comb.a(), c = comb.q + 1;

    Recurrence rec;
    rec.deltas.push_back({0, 0, 1});
    rec.shifts.push_back({1, 0, 1});
    rec.shifts.push_back({c, 1, 1});
    rec.shifts.push_back({c + l, 2, 1});
    Terms inner;
    for (int i = 2; i <= a; ++i) {
        const int pi = p(comb, i);
        rec.shifts.push_back({pi, 1, 1});
        rec.shifts.push_back({pi + 1, 1, -1});
        rec.shifts.push_back({l + pi, 2, 1});
        rec.shifts.push_back({l + pi + 1, 2, -1});
        rec.deltas.push_back({pi, 1, -1});
        rec.deltas.push_back({l + pi, 2, -1});
        inner[{pi, 1}] += 1;
        inner[{l + pi, 2}] += 1;
    }

    check_common_node(Q, build_digraph(comb), add_tile(0, comb.occupancy), inner, {{{1, 0}, 1}},
                      {{{c, 1}, 1}, {{c + l, 2}, 1}}, "branched-loop");
    return rec;
}

RationalGF well_based_gf(const DifferenceSet& Q)
{
    const CombShape comb = comb_from_differences(Q);
    require(well_based_applies(comb), Q, "well-based");
    const int q = Q.q();
    std::vector<BigInt> c(q + 1, 0);
    c[0] = 1;
    for (int j : Q.elements()) c[j] += 1;
    // (1 - x) c - x
    std::vector<BigInt> den(q + 2, 0);
    for (int i = 0; i <= q; ++i) {
        den[i] += c[i];
        den[i + 1] -= c[i];
    }
    den[1] -= 1;
    return RationalGF{c, den}.normalized();
}

Recurrence family_recurrence(const DifferenceSet& Q, Family family)
{
    switch (family) {
    case Family::single_gap_finite: return single_gap_finite_recurrence(Q);
    case Family::well_based: return well_based_recurrence(Q);
    case Family::tail_loop: return tail_loop_recurrence(Q);
    case Family::doubled_gap: return doubled_gap_recurrence(Q);
    case Family::branched_loop: return branched_loop_recurrence(Q);
    case Family::finite_metatiles: {
        const auto g = build_digraph(comb_from_differences(Q));
        const auto longest = longest_metatile(g);
        if (!longest) throw Error(Q.to_string() + " has infinitely many metatiles");
        return from_finite_metatiles(enumerate_metatiles(g, *longest));
    }
    case Family::general: {
        const auto g = build_digraph(comb_from_differences(Q));
        if (const auto longest = longest_metatile(g)) return from_finite_metatiles(enumerate_metatiles(g, *longest));
        CycleOptions opts;
        opts.list_cycles = false;
        return from_common_node(analyze_cycles(g, opts));
    }
    }
    throw std::logic_error("unknown family");
}

Recurrence recurrence_for(const DifferenceSet& Q)
{
    return family_recurrence(Q, classify(Q).family);
}

} // namespace rcomb
