#include "flipforge/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "flipforge/error.hpp"

namespace flipforge {

Json graph_to_json(const EdgeColouredGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.colour});
  return {{"vertices", g.vertex_count()}, {"colours", g.colour_count()}, {"edges", std::move(edges)}};
}

EdgeColouredGraph graph_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error("graph document must be an object");
    std::vector<ColouredEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw Error("each edge must be [u, v, colour]");
      edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>(), e[2].get<Colour>()});
    }
    return EdgeColouredGraph(j.at("vertices").get<Vertex>(), j.at("colours").get<Colour>(),
                             std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed graph JSON: ") + ex.what());
  }
}

Json element_to_json(const GroupElement& x) { return x.residues; }

Json subset_to_json(const GroupSubset& s) {
  Json out = Json::array();
  for (const auto& x : s.elements()) out.push_back(element_to_json(x));
  return out;
}

Json interval_to_json(const ResidueInterval& iv) {
  return {{"n", iv.n}, {"lo", iv.lo}, {"hi", iv.hi}};
}

Json connecting_set_to_json(const ColouredConnectingSet& ccs) {
  Json classes = Json::object();
  for (const auto& [colour, cls] : ccs.classes()) classes[std::to_string(colour)] = subset_to_json(cls);
  return {{"group", ccs.spec().to_string()},
          {"colours", ccs.colour_count()},
          {"classes", std::move(classes)}};
}

ColouredConnectingSet connecting_set_from_json(const Json& j) {
  try {
    const auto& group = j.at("group");
    const auto spec = group.is_string() ? GroupSpec::parse(group.get<std::string>())
                                        : GroupSpec(group.get<std::vector<std::int64_t>>());
    std::map<Colour, GroupSubset> classes;
    for (const auto& [key, elems] : j.at("classes").items()) {
      std::vector<GroupElement> elements;
      for (const auto& e : elems) {
        auto raw = e.is_array() ? e.get<std::vector<std::int64_t>>()
                                : std::vector<std::int64_t>{e.get<std::int64_t>()};
        elements.push_back(make_element(spec, std::move(raw)));
      }
      classes.emplace(std::stoi(key), GroupSubset(spec, std::move(elements)));
    }
    const Colour k = j.contains("colours") ? j.at("colours").get<Colour>() : 0;
    return ColouredConnectingSet(spec, std::move(classes), k);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed connecting-set JSON: ") + ex.what());
  } catch (const std::invalid_argument&) {
    throw Error("malformed connecting-set JSON: colour keys must be integers");
  }
}

Json profile_to_json(const VertexColourProfile& p) {
  return {{"vertex", p.vertex}, {"deg", p.deg}, {"e_closed", p.e_closed}, {"e_open", p.e_open}};
}

Json flip_report_to_json(const FlipReport& report) {
  Json out{{"verdict", report.pass ? "pass" : "fail"}};
  out["colour_degrees"] = report.colour_degrees ? Json(*report.colour_degrees) : Json(nullptr);
  if (report.uniform_e) {
    out["e_chain"] = *report.uniform_e;
  } else {
    out["e_chain_per_vertex"] = report.e_per_vertex;
  }
  Json violations = Json::array();
  for (std::size_t i = 0; i < report.violations.size() && i < 20; ++i) {
    const auto& v = report.violations[i];
    violations.push_back({{"vertex", v.vertex ? Json(*v.vertex) : Json(nullptr)},
                          {"reason", to_string(v.reason)},
                          {"detail", v.detail}});
  }
  out["violations"] = std::move(violations);
  out["violation_count"] = report.violations.size();
  return out;
}

Json br_plan_to_json(const BrPlan& plan) {
  return {{"b", plan.b},
          {"r", plan.r},
          {"n", plan.n},
          {"lambda", plan.lambda},
          {"parity_case", to_string(plan.parity_case)},
          {"R0", interval_to_json(plan.r0)},
          {"T0", interval_to_json(plan.t0)},
          {"T2", interval_to_json(plan.t2)},
          {"R1", subset_to_json(plan.r1)},
          {"T1", subset_to_json(plan.t1)},
          {"B1", subset_to_json(plan.b1)},
          {"R", subset_to_json(plan.red)},
          {"B", subset_to_json(plan.blue)},
          {"group", plan.group.to_string()},
          {"order", plan.order()},
          {"connecting_set", connecting_set_to_json(plan.connecting_set())}};
}

Json certificate_to_json(const MonotonicityCertificate& c) {
  auto opt = [](const std::optional<std::int64_t>& x) { return x ? Json(*x) : Json(nullptr); };
  return {{"t", c.t},
          {"deg", c.deg},
          {"e", c.e},
          {"deg_increasing", c.deg_increasing},
          {"e_decreasing", c.e_decreasing},
          {"first_deg_violation", opt(c.first_deg_violation)},
          {"first_e_violation", opt(c.first_e_violation)}};
}

Json gaps_plan_to_json(const GapsPlan& plan) {
  auto affine = [](const std::vector<AffineInt>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back({{"slope", x.slope}, {"intercept", x.intercept}});
    return out;
  };
  return {{"q", plan.q},
          {"k", plan.k},
          {"D", plan.d},
          {"a_low", plan.a_low},
          {"xi", plan.xi},
          {"mu", plan.mu},
          {"gap_lhs", plan.gap_lhs},
          {"gap_rhs", plan.gap_rhs},
          {"gap_slack", plan.gap_slack()},
          {"sum_D", plan.sum_d},
          {"t_min", plan.t_min},
          {"t", plan.t},
          {"rho", plan.rho},
          {"kappa", {{"num", plan.kappa_num}, {"den", plan.kappa_den}}},
          {"S_sizes", plan.s_sizes},
          {"predicted_deg", affine(plan.predicted_deg)},
          {"predicted_e", affine(plan.predicted_e)},
          {"k_order", plan.k_order},
          {"order_per_F_vertex", plan.order_per_f_vertex},
          {"materialized_order_estimate", plan.materialized_order_estimate
                                              ? Json(*plan.materialized_order_estimate)
                                              : Json(nullptr)},
          {"certificate", certificate_to_json(plan.certificate)},
          {"relaxed", plan.relaxed}};
}

Json interval_sumset_to_json(const IntervalSumsetReport& report) {
  auto opt = [](const std::optional<bool>& x) { return x ? Json(*x) : Json(nullptr); };
  return {{"A", subset_to_json(report.a)},
          {"B", subset_to_json(report.b)},
          {"sum_avoids_A", report.sum_avoids_a},
          {"involution_avoids_A", opt(report.involution_avoids_a)},
          {"B1_min_at_least_3n_16", report.b1_hypothesis},
          {"involution_plus_B_avoids_A", opt(report.involution_b_avoids_a)}};
}

std::string palette_colour(Colour c) {
  static constexpr std::array<const char*, 10> kPalette = {
      "blue", "red", "green", "orange", "purple", "brown", "cyan", "magenta", "gold", "gray"};
  return kPalette[static_cast<std::size_t>(c - 1) % kPalette.size()];
}

std::string graph_to_dot(const EdgeColouredGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [color=" << palette_colour(e.colour)
        << ", label=" << e.colour << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace flipforge
