#include "rcomb/recurrence.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace rcomb {

Recurrence Recurrence::merged() const
{
    std::map<std::pair<int, int>, BigInt> d, s;
    for (const auto& t : deltas) d[{t.n_offset, t.k_offset}] += t.coeff;
    for (const auto& t : shifts) s[{t.n_shift, t.k_shift}] += t.coeff;
    Recurrence out;
    for (const auto& [key, c] : d)
        if (c != 0) out.deltas.push_back({key.first, key.second, c});
    for (const auto& [key, c] : s)
        if (c != 0) out.shifts.push_back({key.first, key.second, c});
    return out;
}

Recurrence Recurrence::totals() const
{
    Recurrence flat = *this;
    for (auto& t : flat.deltas) t.k_offset = 0;
    for (auto& t : flat.shifts) t.k_shift = 0;
    return flat.merged();
}

void Recurrence::validate() const
{
    for (const auto& t : shifts)
        if (t.n_shift < 1 || t.k_shift < 0)
            throw Error("malformed recurrence: shift (" + std::to_string(t.n_shift) + "," +
                        std::to_string(t.k_shift) + ")");
    for (const auto& t : deltas)
        if (t.n_offset < 0 || t.k_offset < 0) throw Error("malformed recurrence: negative delta offset");
}

CountTable evaluate_recurrence(const Recurrence& rec, int n_max, bool want_triangle)
{
    rec.validate();
    CountTable table(n_max, want_triangle);
    if (want_triangle) {
        const Recurrence r = rec.merged();
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k <= n; ++k) {
                BigInt v = 0;
                for (const auto& t : r.deltas)
                    if (t.n_offset == n && t.k_offset == k) v += t.coeff;
                for (const auto& t : r.shifts) {
                    const int m = n - t.n_shift, j = k - t.k_shift;
                    if (m >= 0 && j >= 0 && j <= m) v += t.coeff * table.at_ref(m, j);
                }
                table.at_ref(n, k) = v;
            }
        table.fill_totals_from_triangle();
    } else {
        const Recurrence r = rec.totals();
        for (int n = 0; n <= n_max; ++n) {
            BigInt v = 0;
            for (const auto& t : r.deltas)
                if (t.n_offset == n) v += t.coeff;
            for (const auto& t : r.shifts)
                if (n - t.n_shift >= 0) v += t.coeff * table.total_ref(n - t.n_shift);
            table.total_ref(n) = v;
        }
    }
    return table;
}

namespace {

using Poly = std::vector<BigInt>;

void trim(Poly& p)
{
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    if (p.empty()) p.push_back(0);
}

Poly multiply(const Poly& a, const Poly& b)
{
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

BigInt coeff(const Poly& p, std::size_t i)
{
    return i < p.size() ? p[i] : BigInt(0);
}

} // namespace

RationalGF RationalGF::normalized() const
{
    RationalGF out = *this;
    trim(out.numerator);
    trim(out.denominator);
    BigInt g = 0;
    for (const auto* p : {&out.numerator, &out.denominator})
        for (const auto& c : *p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return out;
    if (out.denominator.front() < 0) g = -g;
    for (auto* p : {&out.numerator, &out.denominator})
        for (auto& c : *p) c /= g;
    return out;
}

bool same_series(const RationalGF& a, const RationalGF& b)
{
    return multiply(a.numerator, b.denominator) == multiply(b.numerator, a.denominator);
}

std::vector<BigInt> series_expand(const RationalGF& gf, int n_max)
{
    const Poly& num = gf.numerator;
    const Poly& den = gf.denominator;
    if (den.empty() || den.front() == 0) throw Error("generating function denominator has zero constant term");
    std::vector<BigInt> out(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        BigInt v = coeff(num, n);
        for (int i = 1; i <= n && i < static_cast<int>(den.size()); ++i) v -= den[i] * out[n - i];
        if (!mpz_divisible_p(v.get_mpz_t(), den.front().get_mpz_t()))
            throw Error("generating function has a non-integral coefficient at x^" + std::to_string(n));
        out[n] = v / den.front();
    }
    return out;
}

RationalGF gf_from_recurrence(const Recurrence& rec, int q)
{
    rec.validate();
    const Recurrence flat = rec.totals();

    std::map<int, BigInt> alpha, beta;
    BigInt constant = 0;
    for (const auto& t : flat.deltas) {
        if (t.n_offset == 0)
            constant += t.coeff;
        else
            alpha[t.n_offset] += t.coeff;
    }
    if (constant != 1) throw Error("recurrence must carry δ_{n,0} with coefficient 1");
    for (const auto& t : flat.shifts) beta[t.n_shift] += t.coeff;
    auto a = [&](int m) { auto it = alpha.find(m); return it == alpha.end() ? BigInt(0) : it->second; };
    auto b = [&](int m) { auto it = beta.find(m); return it == beta.end() ? BigInt(0) : it->second; };

    const int top_alpha = alpha.empty() ? 0 : alpha.rbegin()->first;
    const int top_beta = beta.empty() ? 0 : beta.rbegin()->first;

    RationalGF gf;
    gf.denominator.assign(top_beta + 1, 0);
    gf.denominator[0] = 1;
    for (const auto& [m, c] : beta) gf.denominator[m] = -c;

    const int top = std::max({top_alpha - q, top_beta - 1, 0});
    gf.numerator.assign(top + 1, 0);
    gf.numerator[0] = 1;
    for (int m = 1; m <= top; ++m) {
        BigInt c = a(m + q);
        for (int j = 1; j <= q; ++j) c += b(m + j);
        gf.numerator[m] = c;
    }

    // B's generating function (1 + A)/(1 - β) must start 1 + x + ... + x^q;
    // equivalently the x^r terms (r < q) of 1 + A - (1 - β)(1 + ... + x^{q-1}) vanish
    // and its x^q term is S_0 = 1.
    Poly lhs(std::max(top_alpha, top_beta + q) + 1, 0);
    lhs[0] += 1;
    for (const auto& [m, c] : alpha) lhs[m] += c;
    Poly ones(std::max(q, 1), 1);
    if (q == 0) ones.assign(1, 0);
    const Poly prod = multiply(gf.denominator, ones);
    for (std::size_t i = 0; i < prod.size(); ++i) {
        if (i >= lhs.size()) lhs.resize(i + 1, 0);
        lhs[i] -= prod[i];
    }
    for (int r = 0; r < q; ++r)
        if (coeff(lhs, r) != 0) throw Error("recurrence does not give B_n = 1 for n < q");
    for (std::size_t i = q; i < lhs.size(); ++i)
        if (coeff(lhs, i) != coeff(gf.numerator, i - q))
            throw Error("recurrence disagrees with its generating function at x^" + std::to_string(i - q));

    trim(gf.numerator);
    trim(gf.denominator);
    return gf;
}

Recurrence from_finite_metatiles(const MetatileList& metatiles)
{
    if (!metatiles.complete) throw Error("metatile list is incomplete; the family is infinite or max_len too small");
    Recurrence rec;
    rec.deltas.push_back({0, 0, 1});
    for (const auto& m : metatiles.entries) rec.shifts.push_back({m.length, m.combs, m.multiplicity});
    return rec;
}

Recurrence from_common_node(const CycleAnalysis& analysis)
{
    if (!analysis.common_node)
        throw Error("digraph has no common node; count with the transfer DP instead");
    Recurrence rec;
    rec.deltas.push_back({0, 0, 1});
    for (const auto& in : analysis.inner) {
        rec.shifts.push_back({in.length, in.combs, in.multiplicity});
        rec.deltas.push_back({in.length, in.combs, -in.multiplicity});
    }
    for (const auto& out : analysis.outer) {
        rec.shifts.push_back({out.length, out.combs, out.multiplicity});
        for (const auto& in : analysis.inner)
            rec.shifts.push_back({out.length + in.length, out.combs + in.combs, -(out.multiplicity * in.multiplicity)});
    }
    for (const auto& c : analysis.circuits) rec.shifts.push_back({c.length, c.combs, c.multiplicity});
    return rec;
}

namespace {

std::string offset(char var, int by)
{
    std::string s(1, var);
    if (by > 0) s += "-" + std::to_string(by);
    return s;
}

void signed_term(std::ostringstream& os, bool& first, const BigInt& c, const std::string& body)
{
    BigInt mag = abs(c);
    if (first)
        os << (c < 0 ? "-" : "");
    else
        os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) os << mag.get_str();
    os << body;
}

} // namespace

std::string format_recurrence(const Recurrence& rec, bool totals)
{
    const Recurrence r = totals ? rec.totals() : rec;
    std::ostringstream os;
    os << (totals ? "B_n = " : "B_{n,k} = ");
    bool first = true;
    for (const auto& t : r.deltas) {
        std::string body = "δ_{n," + std::to_string(t.n_offset) + "}";
        if (!totals) body += "δ_{k," + std::to_string(t.k_offset) + "}";
        signed_term(os, first, t.coeff, body);
    }
    for (const auto& t : r.shifts) {
        std::string body = totals ? "B_{" + offset('n', t.n_shift) + "}"
                                  : "B_{" + offset('n', t.n_shift) + "," + offset('k', t.k_shift) + "}";
        signed_term(os, first, t.coeff, body);
    }
    if (first) os << "0";
    return os.str();
}

namespace {

std::string format_poly(const Poly& p)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        BigInt mag = abs(p[i]);
        if (first)
            os << (p[i] < 0 ? "-" : "");
        else
            os << (p[i] < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

std::string format_gf(const RationalGF& gf)
{
    return "(" + format_poly(gf.numerator) + ") / (" + format_poly(gf.denominator) + ")";
}

} // namespace rcomb
