#pragma once

#include <string>

#include <json.hpp>

#include "flipforge/analysis.hpp"
#include "flipforge/construct.hpp"
#include "flipforge/ecgraph.hpp"
#include "flipforge/pipelines.hpp"
#include "flipforge/setalg.hpp"

namespace flipforge {

using Json = nlohmann::json;

/// {"vertices": n, "colours": k, "edges": [[u, v, c], ...]}, u < v, sorted.
Json graph_to_json(const EdgeColouredGraph& g);
/// Throws Error on malformed documents.
EdgeColouredGraph graph_from_json(const Json& j);

Json element_to_json(const GroupElement& x);
Json subset_to_json(const GroupSubset& s);
Json interval_to_json(const ResidueInterval& iv);

/// {"group": "z:40", "classes": {"1": [[9], [18], ...], ...}}
Json connecting_set_to_json(const ColouredConnectingSet& ccs);
ColouredConnectingSet connecting_set_from_json(const Json& j);

Json profile_to_json(const VertexColourProfile& p);
/// At most the first 20 violations are written; "violation_count" has the total.
Json flip_report_to_json(const FlipReport& report);
Json br_plan_to_json(const BrPlan& plan);
Json gaps_plan_to_json(const GapsPlan& plan);
Json certificate_to_json(const MonotonicityCertificate& c);
Json interval_sumset_to_json(const IntervalSumsetReport& report);

/// Graphviz, one edge per line, colour name from a fixed palette and the
/// colour index as label.
std::string graph_to_dot(const EdgeColouredGraph& g);
std::string palette_colour(Colour c);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace flipforge
