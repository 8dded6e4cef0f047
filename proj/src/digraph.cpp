#include "rcomb/digraph.hpp"

#include <bit>
#include <stdexcept>

namespace rcomb {

int StateLabel::digits() const
{
    return std::bit_width(bits);
}

std::string StateLabel::to_string() const
{
    if (is_zero()) return "0";
    std::string s;
    for (int i = 0; i < digits(); ++i) s += ((bits >> i) & 1u) ? '1' : '0';
    return s;
}

MetatileDigraph::MetatileDigraph(CombShape comb, std::vector<StateLabel> labels,
                                 std::vector<std::array<Arc, 2>> arcs)
    : comb_(std::move(comb)), labels_(std::move(labels)), arcs_(std::move(arcs))
{
    if (labels_.empty() || !labels_[0].is_zero() || arcs_.size() != labels_.size())
        throw std::invalid_argument("malformed metatile digraph");
    for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i].bits, i);
}

std::optional<std::size_t> MetatileDigraph::find(Bits label) const
{
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Bits add_tile(Bits from, Bits tile)
{
    Bits v = from | tile;
    return v >> std::countr_one(v);
}

MetatileDigraph build_digraph(const CombShape& comb)
{
    if (comb.q > kMaxQ) throw LimitError("q exceeds the supported maximum " + std::to_string(kMaxQ));

    std::vector<StateLabel> labels{StateLabel{0}};
    std::vector<std::array<Arc, 2>> arcs;
    std::unordered_map<Bits, std::size_t> index{{0, 0}};

    auto intern = [&](Bits v) {
        auto [it, inserted] = index.emplace(v, labels.size());
        if (inserted) {
            if (labels.size() >= kMaxDigraphNodes) throw LimitError("metatile digraph too large");
            labels.push_back(StateLabel{v});
        }
        return it->second;
    };

    for (std::size_t i = 0; i < labels.size(); ++i) {
        const StateLabel from = labels[i];
        const int d = from.digits();

        Arc square{Tile::square, 0, from.is_zero() ? 1 : 0, 0};
        const Bits sq = add_tile(from.bits, 1);
        square.dest = intern(sq);
        // Square arcs out of nonzero nodes have length 0; they must strictly shorten
        // the label so that no cycle has total length 0.
        if (!from.is_zero() && sq != 0 && static_cast<int>(std::bit_width(sq)) >= d)
            throw std::logic_error("square arc does not shorten label " + from.to_string());

        Arc comb_arc{Tile::comb, 0, comb.q + 1 - d, 1};
        comb_arc.dest = intern(add_tile(from.bits, comb.occupancy));
        if (comb_arc.len < 1) throw std::logic_error("comb arc with nonpositive length");

        arcs.push_back({square, comb_arc});
    }
    return MetatileDigraph(comb, std::move(labels), std::move(arcs));
}

bool is_finite_family(const CombShape& comb)
{
    if (!comb.has_gap()) return true;
    return 2 * comb.r >= comb.q;
}

bool has_one_arc_inner_cycle(const MetatileDigraph& g)
{
    const CombShape& c = g.comb();
    if (!c.has_gap()) return false;
    const Bits label = ((Bits{1} << c.r) - 1) << 1;
    auto node = g.find(label);
    return node && g.comb_arc(*node).dest == *node;
}

} // namespace rcomb
