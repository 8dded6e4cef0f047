#pragma once

#include <string>

#include "json.hpp"

#include "rcomb/bijections.hpp"
#include "rcomb/count_table.hpp"
#include "rcomb/cycles.hpp"
#include "rcomb/digraph.hpp"
#include "rcomb/families.hpp"
#include "rcomb/recurrence.hpp"

namespace rcomb {

// Exact integers go to JSON as decimal strings.
using Json = nlohmann::ordered_json;

// First line "(3,1,1)-comb, length 5", then the tooth/gap profile.
std::string comb_text(const CombShape& comb);
Json comb_json(const CombShape& comb);

// Arcs annotated "S" (zero-length square), "S[1]" (square at the 0 node) or "C[len]".
std::string digraph_dot(const MetatileDigraph& g);
Json digraph_json(const MetatileDigraph& g);

Json table_json(const CountTable& table);
Json metatiles_json(const MetatileList& list);
std::string metatiles_text(const MetatileList& list);

Json cycles_json(const MetatileDigraph& g, const CycleAnalysis& a);
std::string cycles_text(const MetatileDigraph& g, const CycleAnalysis& a);

Json recurrence_json(const Recurrence& rec);
Json gf_json(const RationalGF& gf);

Json subword_report_json(const SubwordReport& report);

} // namespace rcomb
