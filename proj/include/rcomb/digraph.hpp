#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rcomb/core.hpp"
#include "rcomb/count_table.hpp"

namespace rcomb {

// Occupancy of an incomplete metatile. Bit 0 is the first cell after the
// discarded leading 1s, so a nonempty label has bit 0 clear and its highest set
// bit is the last filled cell. The 0 node (empty board / completed metatile)
// is value 0.
struct StateLabel {
    Bits bits = 0;

    bool is_zero() const { return bits == 0; }
    // Number of digits d in the written label; 0 for the 0 node.
    int digits() const;
    // Written left to right from bit 0, e.g. "0111" for 01^3; "0" for the 0 node.
    std::string to_string() const;

    friend auto operator<=>(const StateLabel&, const StateLabel&) = default;
};

enum class Tile { square, comb };

struct Arc {
    Tile tile = Tile::square;
    std::size_t dest = 0;
    int len = 0;    // contribution to the metatile length
    int combs = 0;  // 0 for a square arc, 1 for a comb arc
};

// Directed pseudograph generating all metatiles for one comb. Node 0 is the 0 node;
// the rest are in breadth-first discovery order. Every node has exactly one square
// arc and one comb arc.
class MetatileDigraph {
public:
    static constexpr std::size_t zero = 0;

    MetatileDigraph(CombShape comb, std::vector<StateLabel> labels, std::vector<std::array<Arc, 2>> arcs);

    const CombShape& comb() const { return comb_; }
    std::size_t size() const { return labels_.size(); }
    const StateLabel& label(std::size_t node) const { return labels_[node]; }
    const std::array<Arc, 2>& arcs(std::size_t node) const { return arcs_[node]; }
    const Arc& square_arc(std::size_t node) const { return arcs_[node][0]; }
    const Arc& comb_arc(std::size_t node) const { return arcs_[node][1]; }
    std::optional<std::size_t> find(Bits label) const;

private:
    CombShape comb_;
    std::vector<StateLabel> labels_;
    std::vector<std::array<Arc, 2>> arcs_;
    std::unordered_map<Bits, std::size_t> index_;
};

constexpr std::size_t kMaxDigraphNodes = std::size_t{1} << 22;

// The label reached by adding a tile whose occupancy (bit 0 = its leftmost cell)
// is `tile` at the first empty cell of `from`: bitwise OR, then drop leading 1s.
Bits add_tile(Bits from, Bits tile);

// Breadth-first closure from the 0 node. Throws LimitError past kMaxDigraphNodes.
MetatileDigraph build_digraph(const CombShape& comb);

// B_n (and B_{n,k}) for n = 0..n_max: walks from the 0 node back to it with total
// arc length n, comb arcs counted for k.
CountTable count_via_transfer(const MetatileDigraph& g, int n_max, bool want_triangle);

// S_n (and S_{n,k}) for n = 0..n_max through the digraph, using S_n = B_{n+q}.
CountTable subset_counts_via_transfer(const DifferenceSet& Q, int n_max, bool want_triangle);

// Finite metatile set iff 2r >= q (combs without a gap are metatiles by themselves).
bool is_finite_family(const CombShape& comb);

struct Metatile {
    int length = 0;
    int combs = 0;
    BigInt multiplicity = 0;

    friend bool operator==(const Metatile&, const Metatile&) = default;
};

struct MetatileList {
    std::vector<Metatile> entries; // sorted by (length, combs)
    int max_len = 0;
    bool complete = false;         // no metatile is longer than max_len
};

// First-return walks 0 -> 0 of length <= max_len, aggregated by (length, combs).
MetatileList enumerate_metatiles(const MetatileDigraph& g, int max_len);

// Length of the longest metatile, or nullopt when the family is infinite.
std::optional<int> longest_metatile(const MetatileDigraph& g);

// Whether any cycle avoids the 0 node.
bool has_inner_cycles(const MetatileDigraph& g);

// Node 01^r carries a 1-arc comb self-loop.
bool has_one_arc_inner_cycle(const MetatileDigraph& g);

} // namespace rcomb
