#include "rcomb/cycles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

namespace rcomb {

namespace {

// Iterative three-colour DFS over the nodes not marked removed.
bool acyclic_without(const MetatileDigraph& g, const std::vector<bool>& removed)
{
    enum : std::uint8_t { white, grey, black };
    std::vector<std::uint8_t> colour(g.size(), white);
    std::vector<std::pair<std::size_t, int>> stack;
    for (std::size_t root = 0; root < g.size(); ++root) {
        if (removed[root] || colour[root] != white) continue;
        stack.push_back({root, 0});
        colour[root] = grey;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next == 2) {
                colour[u] = black;
                stack.pop_back();
                continue;
            }
            const std::size_t w = g.arcs(u)[next++].dest;
            if (removed[w]) continue;
            if (colour[w] == grey) return false;
            if (colour[w] == white) {
                colour[w] = grey;
                stack.push_back({w, 0});
            }
        }
    }
    return true;
}

const Arc& arc_of(const MetatileDigraph& g, const ArcRef& ref)
{
    return ref.tile == Tile::square ? g.square_arc(ref.from) : g.comb_arc(ref.from);
}

ArcRef ref_of(std::size_t from, const Arc& arc)
{
    return {from, arc.tile};
}

class Johnson {
public:
    Johnson(const MetatileDigraph& g, std::size_t max_cycles)
        : g_(g), max_(max_cycles), blocked_(g.size()), blocked_by_(g.size())
    {
    }

    std::vector<Cycle> run()
    {
        for (start_ = 0; start_ < g_.size(); ++start_) {
            std::fill(blocked_.begin(), blocked_.end(), false);
            for (auto& b : blocked_by_) b.clear();
            circuit(start_);
        }
        return std::move(out_);
    }

private:
    bool circuit(std::size_t v)
    {
        bool found = false;
        blocked_[v] = true;
        for (const Arc& arc : g_.arcs(v)) {
            const std::size_t w = arc.dest;
            if (w < start_) continue;
            path_.push_back(ref_of(v, arc));
            if (w == start_) {
                emit();
                found = true;
            } else if (!blocked_[w] && circuit(w)) {
                found = true;
            }
            path_.pop_back();
        }
        if (found) {
            unblock(v);
        } else {
            for (const Arc& arc : g_.arcs(v)) {
                auto& b = blocked_by_[arc.dest];
                if (arc.dest >= start_ && std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
            }
        }
        return found;
    }

    void unblock(std::size_t u)
    {
        blocked_[u] = false;
        auto pending = std::move(blocked_by_[u]);
        blocked_by_[u].clear();
        for (std::size_t w : pending)
            if (blocked_[w]) unblock(w);
    }

    void emit()
    {
        if (out_.size() >= max_)
            throw LimitError("more than " + std::to_string(max_) + " simple cycles");
        Cycle c;
        c.arcs = path_;
        for (const ArcRef& ref : path_) {
            const Arc& arc = arc_of(g_, ref);
            c.length += arc.len;
            c.combs += arc.combs;
            if (ref.from == MetatileDigraph::zero) c.through_zero = true;
        }
        out_.push_back(std::move(c));
    }

    const MetatileDigraph& g_;
    std::size_t max_;
    std::size_t start_ = 0;
    std::vector<bool> blocked_;
    std::vector<std::vector<std::size_t>> blocked_by_;
    std::vector<ArcRef> path_;
    std::vector<Cycle> out_;
};

// Walks that leave a stop node and continue until they first reach a stop node,
// aggregated by (end node, length, combs). The non-stop part must be acyclic.
class StopWalks {
public:
    using Key = std::tuple<std::size_t, int, int>;
    using Terms = std::map<Key, BigInt>;

    StopWalks(const MetatileDigraph& g, std::vector<bool> stop)
        : g_(g), stop_(std::move(stop)), memo_(g.size()), state_(g.size(), 0)
    {
    }

    Terms from_stop(std::size_t start)
    {
        Terms out;
        for (const Arc& arc : g_.arcs(start)) append(out, arc);
        return out;
    }

private:
    void append(Terms& out, const Arc& arc)
    {
        if (stop_[arc.dest]) {
            out[{arc.dest, arc.len, arc.combs}] += 1;
            return;
        }
        for (const auto& [key, count] : through(arc.dest)) {
            auto [end, len, combs] = key;
            out[{end, len + arc.len, combs + arc.combs}] += count;
        }
    }

    const Terms& through(std::size_t u)
    {
        if (state_[u] == 2) return memo_[u];
        if (state_[u] == 1) throw std::logic_error("cycle outside the stop set");
        state_[u] = 1;
        Terms out;
        for (const Arc& arc : g_.arcs(u)) append(out, arc);
        memo_[u] = std::move(out);
        state_[u] = 2;
        return memo_[u];
    }

    const MetatileDigraph& g_;
    std::vector<bool> stop_;
    std::vector<Terms> memo_;
    std::vector<std::uint8_t> state_;
};

std::vector<CycleTerm> ending_at(const StopWalks::Terms& terms, std::size_t end)
{
    std::vector<CycleTerm> out;
    for (const auto& [key, count] : terms) {
        auto [e, len, combs] = key;
        if (e == end) out.push_back({len, combs, count});
    }
    std::sort(out.begin(), out.end(),
              [](const CycleTerm& a, const CycleTerm& b) { return std::tie(a.length, a.combs) < std::tie(b.length, b.combs); });
    return out;
}

std::vector<CycleTerm> convolve(const std::vector<CycleTerm>& a, const std::vector<CycleTerm>& b)
{
    std::map<std::pair<int, int>, BigInt> acc;
    for (const auto& x : a)
        for (const auto& y : b) acc[{x.length + y.length, x.combs + y.combs}] += x.multiplicity * y.multiplicity;
    std::vector<CycleTerm> out;
    for (const auto& [key, count] : acc) out.push_back({key.first, key.second, count});
    return out;
}

// Explicit walks from `start` to the first stop node, kept only when they end at `end`.
void list_paths(const MetatileDigraph& g, const std::vector<bool>& stop, std::size_t start, std::size_t end,
                std::size_t cap, std::vector<std::vector<ArcRef>>& out)
{
    std::vector<ArcRef> path;
    std::function<void(std::size_t)> walk = [&](std::size_t u) {
        for (const Arc& arc : g.arcs(u)) {
            path.push_back(ref_of(u, arc));
            if (stop[arc.dest]) {
                if (arc.dest == end) {
                    if (out.size() >= cap) throw LimitError("too many common-circuit paths");
                    out.push_back(path);
                }
            } else {
                walk(arc.dest);
            }
            path.pop_back();
        }
    };
    walk(start);
}

} // namespace

bool has_inner_cycles(const MetatileDigraph& g)
{
    std::vector<bool> removed(g.size(), false);
    removed[MetatileDigraph::zero] = true;
    return !acyclic_without(g, removed);
}

std::vector<std::size_t> common_node_candidates(const MetatileDigraph& g)
{
    std::vector<std::size_t> out;
    if (!has_inner_cycles(g)) return out;
    std::vector<bool> removed(g.size(), false);
    removed[MetatileDigraph::zero] = true;
    for (std::size_t v = 1; v < g.size(); ++v) {
        removed[v] = true;
        if (acyclic_without(g, removed)) out.push_back(v);
        removed[v] = false;
    }
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return g.label(a) < g.label(b); });
    return out;
}

std::vector<Cycle> enumerate_cycles(const MetatileDigraph& g, std::size_t max_cycles)
{
    return Johnson(g, max_cycles).run();
}

CycleAnalysis analyze_cycles(const MetatileDigraph& g, const CycleOptions& options)
{
    CycleAnalysis a;
    a.has_inner = has_inner_cycles(g);
    a.common_candidates = common_node_candidates(g);

    if (options.common_node) {
        auto node = g.find(*options.common_node);
        if (!node || std::find(a.common_candidates.begin(), a.common_candidates.end(), *node) == a.common_candidates.end())
            throw Error("requested common node is not on every inner cycle");
        a.common_node = *node;
    } else if (!a.common_candidates.empty()) {
        a.common_node = a.common_candidates.front();
    }

    std::vector<bool> stop(g.size(), false);
    stop[MetatileDigraph::zero] = true;
    if (!a.has_inner) {
        StopWalks walks(g, stop);
        a.outer = ending_at(walks.from_stop(MetatileDigraph::zero), MetatileDigraph::zero);
    } else if (a.common_node) {
        const std::size_t v = *a.common_node;
        stop[v] = true;
        StopWalks walks(g, stop);
        const auto from_zero = walks.from_stop(MetatileDigraph::zero);
        const auto from_common = walks.from_stop(v);
        a.outer = ending_at(from_zero, MetatileDigraph::zero);
        a.inner = ending_at(from_common, v);
        a.circuits = convolve(ending_at(from_zero, v), ending_at(from_common, MetatileDigraph::zero));
    }

    if (options.list_cycles) {
        a.cycles = enumerate_cycles(g, options.max_cycles);
        if (a.common_node) {
            const std::size_t v = *a.common_node;
            std::vector<std::vector<ArcRef>> outs, backs;
            list_paths(g, stop, MetatileDigraph::zero, v, options.max_cycles, outs);
            list_paths(g, stop, v, MetatileDigraph::zero, options.max_cycles, backs);
            if (outs.size() * backs.size() > options.max_cycles)
                throw LimitError("more than " + std::to_string(options.max_cycles) + " common circuits");
            for (const auto& o : outs)
                for (const auto& b : backs) {
                    Circuit c{o, b, 0, 0};
                    for (const auto* part : {&o, &b})
                        for (const ArcRef& ref : *part) {
                            c.length += arc_of(g, ref).len;
                            c.combs += arc_of(g, ref).combs;
                        }
                    a.common_circuits.push_back(std::move(c));
                }
        }
        a.listed = true;
    }
    return a;
}

} // namespace rcomb
