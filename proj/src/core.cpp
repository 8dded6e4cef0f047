#include "rcomb/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rcomb {

DifferenceSet::DifferenceSet(std::vector<int> elements) : elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (int e : elements_) {
        if (e < 1)
            throw Error("difference set elements must be positive, got " + std::to_string(e));
        if (e > kMaxQ)
            throw LimitError("difference " + std::to_string(e) + " exceeds the supported maximum q=" +
                             std::to_string(kMaxQ));
        theta_ |= Bits{1} << (e - 1);
    }
}

DifferenceSet DifferenceSet::parse(std::string_view spec)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    spec = trim(spec);
    if (spec.empty() || spec == "0")
        return {};

    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string_view::npos) comma = spec.size();
        std::string_view item = trim(spec.substr(pos, comma - pos));
        int value = 0;
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || end != item.data() + item.size())
            throw Error("cannot parse difference set '" + std::string(spec) + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return DifferenceSet(std::move(out));
}

DifferenceSet DifferenceSet::from_theta(Bits theta)
{
    std::vector<int> out;
    for (int j = 1; j <= 64; ++j)
        if ((theta >> (j - 1)) & 1u) out.push_back(j);
    return DifferenceSet(std::move(out));
}

std::string DifferenceSet::to_spec() const
{
    std::string s;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(elements_[i]);
    }
    return s;
}

std::string DifferenceSet::to_string() const
{
    return "{" + to_spec() + "}";
}

std::string CombShape::notation() const
{
    if (!has_gap())
        return std::to_string(length) + "-omino";
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < teeth.size(); ++i) {
        if (i) os << ',' << gaps[i - 1] << ',';
        os << teeth[i];
    }
    os << ")-comb";
    return os.str();
}

CombShape comb_from_differences(const DifferenceSet& Q)
{
    CombShape c;
    c.q = Q.q();
    c.length = c.q + 1;
    c.occupancy = 1 | (Bits{1} << c.q) | (Q.theta() << 1);
    c.allowed = allowed_differences(Q);

    c.teeth.clear();
    int cell = 0;
    while (cell < c.length) {
        bool tooth = c.filled(cell);
        int run = 0;
        while (cell < c.length && c.filled(cell) == tooth) {
            ++run;
            ++cell;
        }
        (tooth ? c.teeth : c.gaps).push_back(run);
    }
    c.l = c.teeth.front();
    c.r = c.teeth.back();
    return c;
}

DifferenceSet differences_from_comb(const CombShape& comb)
{
    std::vector<int> out;
    for (int i = 1; i < comb.q; ++i)
        if (comb.filled(i)) out.push_back(i);
    if (comb.q > 0) out.push_back(comb.q);
    return DifferenceSet(std::move(out));
}

std::vector<int> allowed_differences(const DifferenceSet& Q)
{
    std::vector<int> p;
    for (int j = 1; j < Q.q(); ++j)
        if (!Q.contains(j)) p.push_back(j);
    return p;
}

bool is_well_based(const DifferenceSet& Q)
{
    if (Q.empty())
        throw Error("well-based test needs a nonempty difference set");
    const auto p = allowed_differences(Q);
    for (int x : p)
        for (int y : p)
            if (Q.contains(x + y)) return false;
    return true;
}

bool is_well_based_by_decomposition(const DifferenceSet& Q)
{
    if (Q.empty())
        throw Error("well-based test needs a nonempty difference set");
    const auto& e = Q.elements();
    if (e.front() != 1) return false;
    for (std::size_t j = 1; j < e.size(); ++j)
        for (int delta = 1; delta < e[j]; ++delta)
            if (!Q.contains(delta) && !Q.contains(e[j] - delta)) return false;
    return true;
}

std::vector<DifferenceSet> all_difference_sets_with_max(int q)
{
    if (q == 0) return {DifferenceSet{}};
    if (q < 0 || q > kMaxQ) throw LimitError("q out of range");
    std::vector<DifferenceSet> out;
    out.reserve(std::size_t{1} << (q - 1));
    for (Bits m = 0; m < (Bits{1} << (q - 1)); ++m)
        out.push_back(DifferenceSet::from_theta(m | (Bits{1} << (q - 1))));
    return out;
}

std::vector<DifferenceSet> all_difference_sets_up_to(int q_max)
{
    std::vector<DifferenceSet> out;
    for (int q = 1; q <= q_max; ++q) {
        auto v = all_difference_sets_with_max(q);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

} // namespace rcomb
