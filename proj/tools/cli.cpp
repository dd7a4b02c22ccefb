#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flipforge/analysis.hpp"
#include "flipforge/construct.hpp"
#include "flipforge/error.hpp"
#include "flipforge/io.hpp"
#include "flipforge/pipelines.hpp"

namespace flipforge::cli {

namespace {

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& text, char sep = ',') {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("not an integer: '" + item + "'");
    }
  }
  return out;
}

std::uint64_t default_materialize_limit() {
  if (const char* env = std::getenv("FLIPFORGE_MATERIALIZE_LIMIT")) {
    auto values = parse_ints(env);
    if (values.size() != 1 || values[0] < 0) {
      throw PreconditionError("FLIPFORGE_MATERIALIZE_LIMIT must be a non-negative integer");
    }
    return static_cast<std::uint64_t>(values[0]);
  }
  return kDefaultMaterializeLimit;
}

EdgeColouredGraph load_graph(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& ex) {
    throw Error("malformed JSON in '" + path + "': " + ex.what());
  }
  return graph_from_json(doc);
}

ColouredConnectingSet load_connecting_set(const std::string& path) {
  try {
    return connecting_set_from_json(Json::parse(read_text_file(path)));
  } catch (const nlohmann::json::exception& ex) {
    throw Error("malformed JSON in '" + path + "': " + ex.what());
  }
}

void emit_graph(const EdgeColouredGraph& g, const std::string& out_path, const std::string& dot_path,
                std::ostream& out) {
  if (!out_path.empty()) {
    write_text_file(out_path, graph_to_json(g).dump() + "\n");
  }
  if (!dot_path.empty()) write_text_file(dot_path, graph_to_dot(g));
  out << "vertices " << g.vertex_count() << "\n";
  out << "edges " << g.edge_count() << "\n";
}

void print_report(const FlipReport& report, std::ostream& out) {
  if (report.colour_degrees) out << "deg=(" << join(*report.colour_degrees) << ")\n";
  if (report.uniform_e) out << "e=(" << join(*report.uniform_e) << ")\n";
  for (std::size_t i = 0; i < report.violations.size() && i < 20; ++i) {
    const auto& v = report.violations[i];
    out << "violation " << to_string(v.reason);
    if (v.vertex) out << " at vertex " << *v.vertex;
    out << ": " << v.detail << "\n";
  }
  if (report.violations.size() > 20) {
    out << "... " << report.violations.size() - 20 << " more violations\n";
  }
  out << (report.pass ? "PASS" : "FAIL") << "\n";
}

// `--class 1=9,18,22,31`; multi-factor elements use ':' between components,
// e.g. `--class 2=0:14,1:0`.
std::map<Colour, GroupSubset> parse_classes(const GroupSpec& spec,
                                            const std::vector<std::string>& specs) {
  std::map<Colour, GroupSubset> classes;
  for (const auto& text : specs) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw PreconditionError("class must look like c=e1,e2,...: " + text);
    const auto colour = parse_ints(text.substr(0, eq));
    if (colour.size() != 1) throw PreconditionError("bad colour in '" + text + "'");
    std::vector<GroupElement> elements;
    std::stringstream in(text.substr(eq + 1));
    std::string item;
    while (std::getline(in, item, ',')) elements.push_back(make_element(spec, parse_ints(item, ':')));
    classes.emplace(static_cast<Colour>(colour[0]), GroupSubset(spec, std::move(elements)));
  }
  return classes;
}

std::vector<std::vector<Colour>> parse_partition(const std::string& text) {
  std::vector<std::vector<Colour>> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    std::vector<Colour> colours;
    for (auto c : parse_ints(part)) colours.push_back(static_cast<Colour>(c));
    parts.push_back(std::move(colours));
  }
  return parts;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"flipforge: flip-coloured graph constructions and bounds"};
  app.require_subcommand(1);

  std::string out_path, dot_path;

  // construct-br
  auto* construct_br = app.add_subcommand("construct-br", "build the (b,r)-flip Cayley graph");
  std::int64_t b = 0, r = 0;
  bool verify = false;
  std::string plan_out;
  construct_br->add_option("--b", b, "colour-1 degree")->required();
  construct_br->add_option("--r", r, "colour-2 degree")->required();
  construct_br->add_option("--out", out_path, "graph JSON output");
  construct_br->add_option("--plan-out", plan_out, "plan JSON output");
  construct_br->add_option("--dot", dot_path, "DOT output");
  construct_br->add_flag("--verify", verify, "run flip verification and print the profile");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check the flip property of a graph JSON file");
  std::string in_path, sequence;
  bool json_report = false;
  verify_cmd->add_option("--in", in_path, "graph JSON")->required();
  verify_cmd->add_option("--sequence", sequence, "expected colour degrees, e.g. 4,5");
  verify_cmd->add_flag("--json", json_report, "print the report as JSON");

  // product
  auto* product = app.add_subcommand("product", "coloured strong or Cartesian product");
  std::string kind, left, right;
  product->add_option("--kind", kind, "strong | cartesian")
      ->required()
      ->check(CLI::IsMember({"strong", "cartesian"}));
  product->add_option("--left", left, "left factor graph JSON")->required();
  product->add_option("--right", right, "right factor graph JSON")->required();
  product->add_option("--out", out_path, "graph JSON output");
  product->add_option("--dot", dot_path, "DOT output");

  // cayley
  auto* cayley = app.add_subcommand("cayley", "coloured Cayley graph");
  std::string group_text;
  std::vector<std::string> class_specs;
  std::string connecting_out;
  Colour colours = 0;
  cayley->add_option("--group", group_text, "z:n, z2xz:n or z:a,b,c")->required();
  cayley->add_option("--class", class_specs, "colour=elements, e.g. 1=9,18,22,31")->required();
  cayley->add_option("--colours", colours, "palette size (default: largest colour)");
  cayley->add_option("--out", out_path, "graph JSON output");
  cayley->add_option("--set-out", connecting_out, "connecting-set JSON output");
  cayley->add_option("--dot", dot_path, "DOT output");

  // pack
  auto* pack = app.add_subcommand("pack", "pack two coloured Cayley graphs on one group");
  std::string first, second;
  pack->add_option("--first", first, "connecting-set JSON")->required();
  pack->add_option("--second", second, "connecting-set JSON")->required();
  pack->add_option("--out", out_path, "graph JSON output");
  pack->add_option("--dot", dot_path, "DOT output");

  // merge
  auto* merge = app.add_subcommand("merge", "merge colour classes");
  std::string partition_text;
  merge->add_option("--in", in_path, "graph JSON")->required();
  merge->add_option("--partition", partition_text, "parts separated by ';', e.g. 1,2;3")->required();
  merge->add_option("--out", out_path, "graph JSON output");
  merge->add_option("--dot", dot_path, "DOT output");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "compare the old and new bounds on h(b,r)");
  std::vector<std::int64_t> b_values;
  std::string format = "csv", range = "common";
  bounds->add_option("--b", b_values, "values of b")->required()->delimiter(',');
  bounds->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  bounds->add_option("--range", range, "common | union")->check(CLI::IsMember({"common", "union"}));
  bounds->add_option("--out", out_path, "output file (default stdout)");

  // gaps-plan
  auto* gaps = app.add_subcommand("gaps-plan", "plan (and build when small) H ⊠ (F □ K)");
  std::int64_t q = 0, k = 0;
  std::vector<std::int64_t> from_br, d_values, a_values;
  std::optional<std::int64_t> t_override;
  std::optional<std::uint64_t> materialize_limit;
  std::string graph_out;
  bool relaxed = false;
  gaps->add_option("--q", q, "number of fixed colours")->required();
  gaps->add_option("--k", k, "total number of colours")->required();
  auto* from_br_opt = gaps->add_option("--from-br", from_br, "use F = construct-br b,r")->delimiter(',')->expected(2);
  auto* d_opt = gaps->add_option("--D", d_values, "closed counts D_1..D_q of F")->delimiter(',');
  gaps->add_option("--a", a_values, "colour degrees a_1..a_q of F (with --D)")->delimiter(',');
  gaps->add_option("--t", t_override, "number of base matchings t");
  gaps->add_option("--materialize-limit", materialize_limit, "largest |G| to build");
  gaps->add_option("--out", out_path, "plan JSON output (default stdout)");
  gaps->add_option("--graph-out", graph_out, "graph JSON of G when materialised");
  gaps->add_flag("--relaxed", relaxed, "skip the parameter gates (small-scale checks)");
  from_br_opt->excludes(d_opt);

  // search-sumfree
  auto* search = app.add_subcommand("search-sumfree", "largest sum-free inverse-closed subset");
  std::string mode = "exhaustive";
  std::uint64_t budget = 100'000'000;
  search->add_option("--group", group_text, "z:n, z2xz:n or z:a,b,c")->required();
  search->add_option("--mode", mode, "exhaustive | greedy")->check(CLI::IsMember({"exhaustive", "greedy"}));
  search->add_option("--budget", budget, "candidate evaluation cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }

  try {
    if (construct_br->parsed()) {
      const auto plan = plan_br(b, r);
      const auto built = build_br(plan);
      if (!plan_out.empty()) write_text_file(plan_out, br_plan_to_json(plan).dump(2) + "\n");
      out << "group " << plan.group.to_string() << "\n";
      out << "order " << built.graph.vertex_count() << "\n";
      emit_graph(built.graph, out_path, dot_path, out);
      if (verify) {
        print_report(built.report, out);
        return built.report.pass ? kExitOk : kExitFail;
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const auto g = load_graph(in_path);
      std::optional<std::vector<std::int64_t>> expected;
      if (!sequence.empty()) expected = parse_ints(sequence);
      const auto report = verify_flip(g, expected);
      if (json_report) {
        out << flip_report_to_json(report).dump(2) << "\n";
      } else {
        print_report(report, out);
      }
      return report.pass ? kExitOk : kExitFail;
    }

    if (product->parsed()) {
      const auto g = load_graph(left);
      const auto h = load_graph(right);
      const auto p = kind == "strong" ? strong_product(g, h) : cartesian_product(g, h);
      emit_graph(p, out_path, dot_path, out);
      return kExitOk;
    }

    if (cayley->parsed()) {
      const auto spec = GroupSpec::parse(group_text);
      const ColouredConnectingSet ccs(spec, parse_classes(spec, class_specs), colours);
      if (!connecting_out.empty()) {
        write_text_file(connecting_out, connecting_set_to_json(ccs).dump(2) + "\n");
      }
      emit_graph(cayley_build(ccs), out_path, dot_path, out);
      return kExitOk;
    }

    if (pack->parsed()) {
      const auto a = load_connecting_set(first);
      const auto c = load_connecting_set(second);
      emit_graph(pack_cayley(a.spec(), a, c), out_path, dot_path, out);
      return kExitOk;
    }

    if (merge->parsed()) {
      const auto g = load_graph(in_path);
      emit_graph(colour_merge(g, parse_partition(partition_text)), out_path, dot_path, out);
      return kExitOk;
    }

    if (bounds->parsed()) {
      const auto rows = bounds_table(b_values, range == "common" ? RangePolicy::Common : RangePolicy::Union);
      std::string text;
      if (format == "csv") {
        text = bounds_csv(rows);
      } else {
        Json doc = Json::array();
        for (const auto& row : rows) {
          doc.push_back({{"b", row.b},
                         {"r", row.r},
                         {"old_bound", row.old_bound ? Json(*row.old_bound) : Json(nullptr)},
                         {"new_bound", row.new_bound ? Json(*row.new_bound) : Json(nullptr)}});
        }
        text = doc.dump(2) + "\n";
      }
      if (out_path.empty()) {
        out << text;
      } else {
        write_text_file(out_path, text);
      }
      return kExitOk;
    }

    if (gaps->parsed()) {
      const auto limit = materialize_limit.value_or(default_materialize_limit());
      std::optional<EdgeColouredGraph> f;
      std::vector<std::int64_t> d, a;
      if (!from_br.empty()) {
        auto built = build_br(plan_br(from_br[0], from_br[1]));
        d = *built.report.uniform_e;
        a = {from_br[0], from_br[1]};
        f = std::move(built.graph);
      } else if (!d_values.empty()) {
        d = d_values;
        a = a_values;
      } else {
        throw PreconditionError("one of --from-br or --D is required");
      }
      GapsOptions options;
      options.t_override = t_override;
      options.relaxed = relaxed;
      if (f) options.f_order = static_cast<std::uint64_t>(f->vertex_count());
      const auto plan = plan_gaps(q, k, d, a, options);
      const auto text = gaps_plan_to_json(plan).dump(2) + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        write_text_file(out_path, text);
      }
      err << "gap slack " << plan.gap_slack() << ", t = " << plan.t << ", rho = " << plan.rho << "\n";
      if (!f) {
        err << "no F graph given; materialisation skipped\n";
        return kExitOk;
      }
      const auto estimate = *plan.materialized_order_estimate;
      if (estimate > limit) {
        err << "materialisation skipped: |G| = " << estimate << " exceeds limit " << limit << "\n";
        return kExitOk;
      }
      const auto result = build_gaps(plan, *f, limit);
      err << "materialised |G| = " << result.order << "\n";
      if (result.report) {
        print_report(*result.report, err);
        if (!graph_out.empty()) write_text_file(graph_out, graph_to_json(*result.g_graph).dump() + "\n");
        return result.report->pass ? kExitOk : kExitFail;
      }
      return kExitOk;
    }

    if (search->parsed()) {
      const auto spec = GroupSpec::parse(group_text);
      const auto result = search_sumfree_inverse_closed(
          spec, mode == "greedy" ? SearchMode::Greedy : SearchMode::Exhaustive, budget);
      Json doc{{"group", spec.to_string()},
               {"mode", mode},
               {"size", result.best.size()},
               {"elements", subset_to_json(result.best)},
               {"is_maximum", result.is_maximum},
               {"budget_exhausted", result.budget_exhausted},
               {"steps", result.steps}};
      out << doc.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace flipforge::cli
