#include "flipforge/ecgraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "flipforge/error.hpp"

namespace flipforge {

EdgeColouredGraph::EdgeColouredGraph(Vertex vertex_count, Colour colour_count,
                                     std::vector<ColouredEdge> edges)
    : vertex_count_(vertex_count), colour_count_(colour_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw PreconditionError("negative vertex count");
  if (colour_count_ < 1) throw PreconditionError("colour count must be >= 1");
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= vertex_count_) {
      throw PreconditionError("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              "} has an endpoint outside [0, " + std::to_string(vertex_count_) +
                              ")");
    }
    if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
    if (e.colour < 1 || e.colour > colour_count_) {
      throw PreconditionError("edge colour " + std::to_string(e.colour) + " outside [1, " +
                              std::to_string(colour_count_) + "]");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw PreconditionError("parallel edges between " + std::to_string(edges_[i].u) + " and " +
                              std::to_string(edges_[i].v));
    }
  }

  std::vector<std::size_t> degree(static_cast<std::size_t>(vertex_count_), 0);
  for (const auto& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(static_cast<std::size_t>(vertex_count_) + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[cursor[e.u]++] = {e.v, e.colour};
    adjacency_[cursor[e.v]++] = {e.u, e.colour};
  }
  for (Vertex v = 0; v < vertex_count_; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Neighbour& a, const Neighbour& b) { return a.vertex < b.vertex; });
  }
}

std::span<const Neighbour> EdgeColouredGraph::neighbours(Vertex v) const {
  if (!valid_vertex(v)) throw PreconditionError("invalid vertex " + std::to_string(v));
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::optional<Colour> EdgeColouredGraph::colour_between(Vertex u, Vertex v) const {
  auto row = neighbours(u);
  if (!valid_vertex(v)) throw PreconditionError("invalid vertex " + std::to_string(v));
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const Neighbour& n, Vertex x) { return n.vertex < x; });
  if (it == row.end() || it->vertex != v) return std::nullopt;
  return it->colour;
}

std::int64_t VertexColourProfile::degree() const {
  return std::accumulate(deg.begin(), deg.end(), std::int64_t{0});
}

std::vector<Vertex> closed_neighbourhood(const EdgeColouredGraph& g, Vertex v) {
  std::vector<Vertex> out;
  auto row = g.neighbours(v);
  out.reserve(row.size() + 1);
  for (const auto& n : row) out.push_back(n.vertex);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::int64_t count_coloured_edges(const EdgeColouredGraph& g, std::span<const Vertex> subset,
                                  Colour j) {
  if (j < 1 || j > g.colour_count()) throw PreconditionError("invalid colour " + std::to_string(j));
  std::vector<char> in_subset(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto v : subset) {
    if (!g.valid_vertex(v)) throw PreconditionError("invalid vertex " + std::to_string(v));
    in_subset[v] = 1;
  }
  std::int64_t count = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!in_subset[u]) continue;
    for (const auto& n : g.neighbours(u)) {
      if (n.vertex > u && in_subset[n.vertex] && n.colour == j) ++count;
    }
  }
  return count;
}

namespace {

// Walks N(v) and, for each neighbour, its adjacency row. `mark` must be
// all-zero on entry and is restored before returning.
VertexColourProfile profile_with_marks(const EdgeColouredGraph& g, Vertex v,
                                       std::vector<char>& mark) {
  const auto k = static_cast<std::size_t>(g.colour_count());
  VertexColourProfile p{v, std::vector<std::int64_t>(k, 0), std::vector<std::int64_t>(k, 0),
                        std::vector<std::int64_t>(k, 0)};
  auto row = g.neighbours(v);
  for (const auto& n : row) {
    ++p.deg[n.colour - 1];
    mark[n.vertex] = 1;
  }
  for (const auto& n : row) {
    for (const auto& w : g.neighbours(n.vertex)) {
      if (w.vertex > n.vertex && mark[w.vertex]) ++p.e_open[w.colour - 1];
    }
  }
  for (const auto& n : row) mark[n.vertex] = 0;
  for (std::size_t j = 0; j < k; ++j) p.e_closed[j] = p.e_open[j] + p.deg[j];
  return p;
}

}  // namespace

VertexColourProfile vertex_profile(const EdgeColouredGraph& g, Vertex v) {
  if (!g.valid_vertex(v)) throw PreconditionError("invalid vertex " + std::to_string(v));
  std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
  return profile_with_marks(g, v, mark);
}

std::vector<VertexColourProfile> all_profiles(const EdgeColouredGraph& g) {
  std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<VertexColourProfile> out;
  out.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(profile_with_marks(g, v, mark));
  return out;
}

bool is_colour_regular(const EdgeColouredGraph& g, std::span<const std::int64_t> a) {
  if (a.size() != static_cast<std::size_t>(g.colour_count())) {
    throw PreconditionError("degree vector has length " + std::to_string(a.size()) +
                            ", graph has " + std::to_string(g.colour_count()) + " colours");
  }
  std::vector<std::int64_t> deg(a.size());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::fill(deg.begin(), deg.end(), 0);
    for (const auto& n : g.neighbours(v)) ++deg[n.colour - 1];
    if (!std::equal(deg.begin(), deg.end(), a.begin())) return false;
  }
  return true;
}

EdgeColouredGraph widen_palette(const EdgeColouredGraph& g, Colour k) {
  if (k < g.colour_count()) throw PreconditionError("cannot shrink a palette by widening");
  return EdgeColouredGraph(g.vertex_count(), k, g.edges());
}

EdgeColouredGraph relabel(const EdgeColouredGraph& g, std::span<const Vertex> permutation) {
  if (permutation.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw PreconditionError("permutation length differs from vertex count");
  }
  std::vector<char> seen(permutation.size(), 0);
  for (auto p : permutation) {
    if (!g.valid_vertex(p) || seen[p]) throw PreconditionError("not a permutation");
    seen[p] = 1;
  }
  std::vector<ColouredEdge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({permutation[e.u], permutation[e.v], e.colour});
  return EdgeColouredGraph(g.vertex_count(), g.colour_count(), std::move(edges));
}

}  // namespace flipforge
