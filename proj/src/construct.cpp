#include "flipforge/construct.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "flipforge/error.hpp"

namespace flipforge {

ColouredConnectingSet::ColouredConnectingSet(GroupSpec spec, std::map<Colour, GroupSubset> classes,
                                             Colour colour_count)
    : spec_(std::move(spec)), classes_(std::move(classes)), colour_count_(colour_count) {
  Colour max_colour = 1;
  for (const auto& [colour, cls] : classes_) {
    const auto tag = "class of colour " + std::to_string(colour);
    if (colour < 1) throw PreconditionError(tag + ": colours are 1-based");
    if (!(cls.spec() == spec_)) throw PreconditionError(tag + " lives in another group");
    if (cls.contains(identity(spec_))) throw PreconditionError(tag + " contains the identity");
    if (!is_inverse_closed(cls)) throw PreconditionError(tag + " is not inverse-closed");
    max_colour = std::max(max_colour, colour);
  }
  for (auto a = classes_.begin(); a != classes_.end(); ++a) {
    for (auto b = std::next(a); b != classes_.end(); ++b) {
      if (!are_disjoint(a->second, b->second)) {
        throw PreconditionError("classes of colours " + std::to_string(a->first) + " and " +
                                std::to_string(b->first) + " overlap");
      }
    }
  }
  if (colour_count_ == 0) colour_count_ = max_colour;
  if (colour_count_ < max_colour) throw PreconditionError("colour count below largest colour used");
}

EdgeColouredGraph cayley_build(const ColouredConnectingSet& ccs, std::uint64_t limit) {
  const auto& spec = ccs.spec();
  const auto elements = enumerate(spec, limit);
  if (elements.size() > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) {
    throw PreconditionError("group too large for vertex ids");
  }
  std::vector<ColouredEdge> edges;
  for (std::size_t g = 0; g < elements.size(); ++g) {
    for (const auto& [colour, cls] : ccs.classes()) {
      for (const auto& s : cls.elements()) {
        auto h = element_index(spec, add(spec, elements[g], s));
        if (g < h) edges.push_back({static_cast<Vertex>(g), static_cast<Vertex>(h), colour});
      }
    }
  }
  return EdgeColouredGraph(static_cast<Vertex>(elements.size()), ccs.colour_count(),
                           std::move(edges));
}

namespace {

Vertex product_order(const EdgeColouredGraph& g, const EdgeColouredGraph& h) {
  if (g.colour_count() != h.colour_count()) {
    throw PreconditionError("product factors use " + std::to_string(g.colour_count()) + " and " +
                            std::to_string(h.colour_count()) + " colours");
  }
  auto order = static_cast<std::int64_t>(g.vertex_count()) * h.vertex_count();
  if (order > std::numeric_limits<Vertex>::max()) throw PreconditionError("product too large");
  return static_cast<Vertex>(order);
}

// Edges shared by both products: H-fibres and G-fibres.
std::vector<ColouredEdge> fibre_edges(const EdgeColouredGraph& g, const EdgeColouredGraph& h) {
  const auto nh = h.vertex_count();
  std::vector<ColouredEdge> edges;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (const auto& e : h.edges()) {
      edges.push_back({product_vertex(u, e.u, nh), product_vertex(u, e.v, nh), e.colour});
    }
  }
  for (const auto& e : g.edges()) {
    for (Vertex v = 0; v < nh; ++v) {
      edges.push_back({product_vertex(e.u, v, nh), product_vertex(e.v, v, nh), e.colour});
    }
  }
  return edges;
}

}  // namespace

EdgeColouredGraph strong_product(const EdgeColouredGraph& g, const EdgeColouredGraph& h) {
  const auto order = product_order(g, h);
  const auto nh = h.vertex_count();
  auto edges = fibre_edges(g, h);
  for (const auto& eg : g.edges()) {
    for (const auto& eh : h.edges()) {
      edges.push_back({product_vertex(eg.u, eh.u, nh), product_vertex(eg.v, eh.v, nh), eg.colour});
      edges.push_back({product_vertex(eg.u, eh.v, nh), product_vertex(eg.v, eh.u, nh), eg.colour});
    }
  }
  return EdgeColouredGraph(order, g.colour_count(), std::move(edges));
}

EdgeColouredGraph cartesian_product(const EdgeColouredGraph& g, const EdgeColouredGraph& h) {
  const auto order = product_order(g, h);
  return EdgeColouredGraph(order, g.colour_count(), fibre_edges(g, h));
}

namespace {

std::int64_t total(const std::vector<std::int64_t>& xs) {
  return std::accumulate(xs.begin(), xs.end(), std::int64_t{0});
}

void require_same_palette(const VertexColourProfile& g, const VertexColourProfile& h) {
  if (g.deg.size() != h.deg.size()) throw PreconditionError("profiles over different palettes");
}

}  // namespace

VertexColourProfile predict_strong_profile(const VertexColourProfile& g,
                                           const VertexColourProfile& h) {
  require_same_palette(g, h);
  const auto k = g.deg.size();
  const auto deg_g = total(g.deg);
  const auto deg_h = total(h.deg);
  const auto closed_h = total(h.e_closed);
  VertexColourProfile p{0, std::vector<std::int64_t>(k), std::vector<std::int64_t>(k),
                        std::vector<std::int64_t>(k)};
  for (std::size_t j = 0; j < k; ++j) {
    p.deg[j] = h.deg[j] + g.deg[j] * (1 + deg_h);
    p.e_closed[j] = h.e_closed[j] * (1 + deg_g) + g.e_closed[j] * (1 + deg_h + 2 * closed_h);
    p.e_open[j] = p.e_closed[j] - p.deg[j];
  }
  return p;
}

VertexColourProfile predict_cartesian_profile(const VertexColourProfile& g,
                                              const VertexColourProfile& h) {
  require_same_palette(g, h);
  const auto k = g.deg.size();
  VertexColourProfile p{0, std::vector<std::int64_t>(k), std::vector<std::int64_t>(k),
                        std::vector<std::int64_t>(k)};
  for (std::size_t j = 0; j < k; ++j) {
    p.deg[j] = g.deg[j] + h.deg[j];
    p.e_closed[j] = g.e_closed[j] + h.e_closed[j];
    p.e_open[j] = p.e_closed[j] - p.deg[j];
  }
  return p;
}

EdgeColouredGraph pack_cayley(const GroupSpec& spec, const ColouredConnectingSet& first,
                              const ColouredConnectingSet& second) {
  if (!(first.spec() == spec) || !(second.spec() == spec)) {
    throw PreconditionError("packing inputs must share the group " + spec.to_string());
  }
  for (const auto& [c1, a] : first.classes()) {
    for (const auto& [c2, b] : second.classes()) {
      if (!are_disjoint(a, b)) {
        throw PreconditionError("packing undefined: class " + std::to_string(c1) +
                                " of the first set meets class " + std::to_string(c2) +
                                " of the second");
      }
    }
  }
  auto merged = first.classes();
  for (const auto& [colour, cls] : second.classes()) {
    auto it = merged.find(colour);
    if (it == merged.end()) {
      merged.emplace(colour, cls);
    } else {
      it->second = set_union(it->second, cls);
    }
  }
  return cayley_build(ColouredConnectingSet(
      spec, std::move(merged), std::max(first.colour_count(), second.colour_count())));
}

PackingDeltaReport packing_delta(const GroupSpec& spec, const GroupSubset& blue, const GroupSubset& red,
                          Vertex vertex) {
  if (!are_disjoint(blue, red)) throw PreconditionError("B and R must be disjoint");
  const ColouredConnectingSet blue_set(spec, {{1, blue}}, 2);
  const ColouredConnectingSet red_set(spec, {{2, red}}, 2);
  const auto g = cayley_build(blue_set);
  const auto h = cayley_build(red_set);
  const auto packed = pack_cayley(spec, blue_set, red_set);
  if (!packed.valid_vertex(vertex)) throw PreconditionError("invalid vertex");

  const auto n_packed = closed_neighbourhood(packed, vertex);
  const auto n_blue = closed_neighbourhood(g, vertex);
  const auto n_red = closed_neighbourhood(h, vertex);

  PackingDeltaReport r;
  r.vertex = vertex;
  r.e1_packed = count_coloured_edges(packed, n_packed, 1);
  r.e2_packed = count_coloured_edges(packed, n_packed, 2);
  r.e1_blue = count_coloured_edges(g, n_blue, 1);
  r.e2_red = count_coloured_edges(h, n_red, 2);
  r.e2_red_on_blue = count_coloured_edges(h, n_blue, 2);
  r.e1_blue_on_red = count_coloured_edges(g, n_red, 1);
  r.lhs = r.e1_packed - r.e2_packed;
  r.rhs = (r.e1_blue - r.e2_red) + (r.e2_red_on_blue - r.e1_blue_on_red);
  r.red_plus_blue_avoids_red = are_disjoint(sumset(red, blue), red);
  r.blue_dominates = r.e1_blue > r.e2_red;
  if (r.lhs != r.rhs) {
    throw VerificationError("packing identity fails at vertex " + std::to_string(vertex) + ": " +
                            std::to_string(r.lhs) + " != " + std::to_string(r.rhs));
  }
  return r;
}

MatchingColourPlan MatchingColourPlan::from_counts(
    const std::vector<std::pair<Colour, std::int64_t>>& counts, Colour colour_count) {
  MatchingColourPlan plan{0, colour_count, {}};
  for (const auto& [colour, count] : counts) {
    if (count < 1) {
      throw PreconditionError("colour " + std::to_string(colour) + " is assigned no matching");
    }
    plan.assignments.insert(plan.assignments.end(), static_cast<std::size_t>(count), colour);
  }
  plan.part_size = static_cast<std::int64_t>(plan.assignments.size());
  return plan;
}

EdgeColouredGraph bipartite_matching_graph(const MatchingColourPlan& plan) {
  const auto rho = plan.part_size;
  if (rho < 1) throw PreconditionError("part size must be >= 1");
  if (static_cast<std::int64_t>(plan.assignments.size()) != rho) {
    throw PreconditionError("plan lists " + std::to_string(plan.assignments.size()) +
                            " matchings for part size " + std::to_string(rho));
  }
  if (2 * rho > std::numeric_limits<Vertex>::max()) throw PreconditionError("part size too large");
  std::vector<ColouredEdge> edges;
  edges.reserve(static_cast<std::size_t>(rho * rho));
  for (std::int64_t d = 0; d < rho; ++d) {
    for (std::int64_t i = 0; i < rho; ++i) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(rho + (i + d) % rho),
                       plan.assignments[static_cast<std::size_t>(d)]});
    }
  }
  return EdgeColouredGraph(static_cast<Vertex>(2 * rho), plan.colour_count, std::move(edges));
}

}  // namespace flipforge
