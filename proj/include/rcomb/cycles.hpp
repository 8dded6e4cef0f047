#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rcomb/digraph.hpp"

namespace rcomb {

struct ArcRef {
    std::size_t from = 0;
    Tile tile = Tile::square;

    friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

// A closed walk repeating no node or arc except its start, given by its arcs.
struct Cycle {
    std::vector<ArcRef> arcs;
    int length = 0;
    int combs = 0;
    bool through_zero = false;
};

// An outgoing simple path 0 -> common followed by a return path common -> 0.
struct Circuit {
    std::vector<ArcRef> out;
    std::vector<ArcRef> back;
    int length = 0;
    int combs = 0;
};

// (length, combs) with the number of cycles/circuits sharing them.
struct CycleTerm {
    int length = 0;
    int combs = 0;
    BigInt multiplicity = 0;

    friend bool operator==(const CycleTerm&, const CycleTerm&) = default;
};

struct CycleOptions {
    bool list_cycles = true;        // also produce explicit cycle and circuit lists
    std::size_t max_cycles = 100000; // LimitError beyond this many listed cycles or circuits
    std::optional<Bits> common_node; // override the tie-break; must be a valid common node
};

struct CycleAnalysis {
    bool has_inner = false;
    // Nodes lying on every inner cycle, ascending by encoded label.
    std::vector<std::size_t> common_candidates;
    // Smallest encoded label among the candidates (or the override).
    std::optional<std::size_t> common_node;

    // Aggregated by (length, combs), sorted. With a common node: inner cycles,
    // outer cycles (through 0, avoiding the common node) and common circuits.
    // Without inner cycles: outer holds every cycle through 0 and the rest are empty.
    // With inner cycles but no common node all three are empty.
    std::vector<CycleTerm> inner;
    std::vector<CycleTerm> outer;
    std::vector<CycleTerm> circuits;

    bool listed = false;
    std::vector<Cycle> cycles;      // every simple cycle
    std::vector<Circuit> common_circuits;

    bool aggregated() const { return !has_inner || common_node.has_value(); }
};

// Nodes v != 0 such that removing {0, v} leaves no cycle. Empty without inner cycles.
std::vector<std::size_t> common_node_candidates(const MetatileDigraph& g);

// Every simple cycle (Johnson's algorithm over the arc multigraph).
std::vector<Cycle> enumerate_cycles(const MetatileDigraph& g, std::size_t max_cycles);

CycleAnalysis analyze_cycles(const MetatileDigraph& g, const CycleOptions& options = {});

} // namespace rcomb
