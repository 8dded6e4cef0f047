#include "rcomb/emit.hpp"

#include <sstream>

namespace rcomb {

namespace {

std::string arc_tag(const Arc& arc)
{
    if (arc.tile == Tile::comb) return "C[" + std::to_string(arc.len) + "]";
    return arc.len == 0 ? "S" : "S[" + std::to_string(arc.len) + "]";
}

std::string join(const std::vector<int>& v, const char* sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

Json terms_json(const std::vector<CycleTerm>& terms)
{
    Json out = Json::array();
    for (const auto& t : terms) out.push_back({{"length", t.length}, {"combs", t.combs}, {"count", t.multiplicity.get_str()}});
    return out;
}

std::string path_text(const MetatileDigraph& g, const std::vector<ArcRef>& arcs)
{
    std::string out = g.label(arcs.front().from).to_string();
    for (const auto& ref : arcs) {
        const Arc& arc = ref.tile == Tile::square ? g.square_arc(ref.from) : g.comb_arc(ref.from);
        out += " -" + arc_tag(arc) + "-> " + g.label(arc.dest).to_string();
    }
    return out;
}

Json path_json(const MetatileDigraph& g, const std::vector<ArcRef>& arcs)
{
    Json out = Json::array();
    for (const auto& ref : arcs) {
        const Arc& arc = ref.tile == Tile::square ? g.square_arc(ref.from) : g.comb_arc(ref.from);
        out.push_back({{"from", g.label(ref.from).to_string()}, {"arc", arc_tag(arc)}, {"to", g.label(arc.dest).to_string()}});
    }
    return out;
}

} // namespace

std::string comb_text(const CombShape& comb)
{
    std::ostringstream os;
    os << comb.notation() << ", length " << comb.length << "\n";
    os << "teeth " << join(comb.teeth) << "\n";
    os << "gaps " << (comb.gaps.empty() ? "-" : join(comb.gaps)) << "\n";
    os << "l " << comb.l << " r " << comb.r << "\n";
    os << "allowed " << (comb.allowed.empty() ? "-" : join(comb.allowed)) << "\n";
    return os.str();
}

Json comb_json(const CombShape& comb)
{
    return {{"notation", comb.notation()}, {"q", comb.q},       {"length", comb.length},
            {"teeth", comb.teeth},         {"gaps", comb.gaps}, {"l", comb.l},
            {"r", comb.r},                 {"allowed", comb.allowed}};
}

std::string digraph_dot(const MetatileDigraph& g)
{
    std::ostringstream os;
    os << "digraph metatiles {\n";
    for (std::size_t u = 0; u < g.size(); ++u)
        os << "  n" << u << " [label=\"" << g.label(u).to_string() << "\"];\n";
    for (std::size_t u = 0; u < g.size(); ++u)
        for (const Arc& arc : g.arcs(u))
            os << "  n" << u << " -> n" << arc.dest << " [label=\"" << arc_tag(arc) << "\"];\n";
    os << "}\n";
    return os.str();
}

Json digraph_json(const MetatileDigraph& g)
{
    Json nodes = Json::array();
    for (std::size_t u = 0; u < g.size(); ++u) {
        Json arcs = Json::array();
        for (const Arc& arc : g.arcs(u))
            arcs.push_back({{"tag", arc_tag(arc)}, {"to", g.label(arc.dest).to_string()}, {"length", arc.len}, {"combs", arc.combs}});
        nodes.push_back({{"label", g.label(u).to_string()}, {"arcs", arcs}});
    }
    return {{"comb", comb_json(g.comb())}, {"nodes", nodes}};
}

Json table_json(const CountTable& table)
{
    Json totals = Json::array();
    for (const auto& v : table.totals()) totals.push_back(v.get_str());
    Json out{{"n_max", table.n_max()}, {"totals", totals}};
    if (table.has_triangle()) {
        Json rows = Json::array();
        for (const auto& row : table.triangle()) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(v.get_str());
            rows.push_back(r);
        }
        out["triangle"] = rows;
    }
    return out;
}

Json metatiles_json(const MetatileList& list)
{
    Json entries = Json::array();
    for (const auto& m : list.entries)
        entries.push_back({{"length", m.length}, {"combs", m.combs}, {"count", m.multiplicity.get_str()}});
    return {{"max_len", list.max_len}, {"complete", list.complete}, {"metatiles", entries}};
}

std::string metatiles_text(const MetatileList& list)
{
    std::ostringstream os;
    os << "length combs count\n";
    for (const auto& m : list.entries) os << m.length << " " << m.combs << " " << m.multiplicity.get_str() << "\n";
    os << (list.complete ? "complete" : "truncated at length " + std::to_string(list.max_len)) << "\n";
    return os.str();
}

Json cycles_json(const MetatileDigraph& g, const CycleAnalysis& a)
{
    Json candidates = Json::array();
    for (std::size_t v : a.common_candidates) candidates.push_back(g.label(v).to_string());
    Json out{{"has_inner", a.has_inner},
             {"common_candidates", candidates},
             {"common_node", a.common_node ? Json(g.label(*a.common_node).to_string()) : Json(nullptr)},
             {"inner", terms_json(a.inner)},
             {"outer", terms_json(a.outer)},
             {"circuits", terms_json(a.circuits)}};
    if (a.listed) {
        Json cycles = Json::array();
        for (const auto& c : a.cycles)
            cycles.push_back({{"length", c.length}, {"combs", c.combs}, {"through_zero", c.through_zero}, {"arcs", path_json(g, c.arcs)}});
        Json circuits = Json::array();
        for (const auto& c : a.common_circuits)
            circuits.push_back({{"length", c.length}, {"combs", c.combs}, {"out", path_json(g, c.out)}, {"back", path_json(g, c.back)}});
        out["cycles"] = cycles;
        out["common_circuits"] = circuits;
    }
    return out;
}

std::string cycles_text(const MetatileDigraph& g, const CycleAnalysis& a)
{
    std::ostringstream os;
    auto terms = [&](const char* name, const std::vector<CycleTerm>& t) {
        os << name << ":";
        if (t.empty()) os << " none";
        for (const auto& x : t) {
            os << " (" << x.length << "," << x.combs << ")";
            if (x.multiplicity != 1) os << "x" << x.multiplicity.get_str();
        }
        os << "\n";
    };
    os << "inner cycles: " << (a.has_inner ? "yes" : "no") << "\n";
    os << "common node: " << (a.common_node ? g.label(*a.common_node).to_string() : std::string("none")) << "\n";
    if (a.aggregated()) {
        terms(a.has_inner ? "outer" : "cycles through 0", a.outer);
        if (a.has_inner) {
            terms("inner", a.inner);
            terms("circuits", a.circuits);
        }
    }
    if (a.listed) {
        os << "simple cycles: " << a.cycles.size() << "\n";
        for (const auto& c : a.cycles)
            os << "  " << (c.through_zero ? "via 0 " : "inner ") << "(" << c.length << "," << c.combs << ") "
               << path_text(g, c.arcs) << "\n";
        if (a.common_node) {
            os << "common circuits: " << a.common_circuits.size() << "\n";
            for (const auto& c : a.common_circuits)
                os << "  (" << c.length << "," << c.combs << ") " << path_text(g, c.out) << " | " << path_text(g, c.back) << "\n";
        }
    }
    return os.str();
}

Json recurrence_json(const Recurrence& rec)
{
    Json deltas = Json::array(), shifts = Json::array();
    for (const auto& t : rec.deltas) deltas.push_back({{"n", t.n_offset}, {"k", t.k_offset}, {"coeff", t.coeff.get_str()}});
    for (const auto& t : rec.shifts) shifts.push_back({{"n_shift", t.n_shift}, {"k_shift", t.k_shift}, {"coeff", t.coeff.get_str()}});
    return {{"triangle", format_recurrence(rec, false)}, {"totals", format_recurrence(rec, true)}, {"deltas", deltas}, {"shifts", shifts}};
}

Json gf_json(const RationalGF& gf)
{
    Json num = Json::array(), den = Json::array();
    for (const auto& c : gf.numerator) num.push_back(c.get_str());
    for (const auto& c : gf.denominator) den.push_back(c.get_str());
    return {{"text", format_gf(gf)}, {"numerator", num}, {"denominator", den}};
}

Json subword_report_json(const SubwordReport& report)
{
    Json rows = Json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"n", r.n}, {"brute", r.brute}, {"predicted", r.predicted}, {"brute_by_size", r.brute_by_size},
                        {"predicted_by_size", r.predicted_by_size}, {"match", r.match}});
    return {{"omega", report.omega.bits}, {"Q", report.Q.elements()}, {"rows", rows}, {"all_match", report.all_match()}};
}

} // namespace rcomb
