#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace flipforge {

using Vertex = std::int32_t;
/// Colours are 1-based; 0 is never a valid edge colour.
using Colour = std::int32_t;

struct ColouredEdge {
  Vertex u = 0;
  Vertex v = 0;
  Colour colour = 0;

  friend auto operator<=>(const ColouredEdge&, const ColouredEdge&) = default;
};

struct Neighbour {
  Vertex vertex = 0;
  Colour colour = 0;
};

/// Simple undirected graph with a colour in [1, k] on every edge.
///
/// Immutable once built. Edges are normalised to u < v and sorted; the
/// adjacency is kept in CSR form with each row sorted by neighbour id so
/// colour_between() is a binary search.
class EdgeColouredGraph {
 public:
  EdgeColouredGraph() = default;
  /// Throws PreconditionError on loops, parallel edges, out-of-range
  /// endpoints or colours.
  EdgeColouredGraph(Vertex vertex_count, Colour colour_count, std::vector<ColouredEdge> edges);

  Vertex vertex_count() const { return vertex_count_; }
  Colour colour_count() const { return colour_count_; }
  const std::vector<ColouredEdge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Neighbour> neighbours(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbours(v).size(); }
  /// Colour of edge {u, v}, or nullopt when u and v are not adjacent.
  std::optional<Colour> colour_between(Vertex u, Vertex v) const;

  bool valid_vertex(Vertex v) const { return 0 <= v && v < vertex_count_; }

  friend bool operator==(const EdgeColouredGraph& a, const EdgeColouredGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.colour_count_ == b.colour_count_ &&
           a.edges_ == b.edges_;
  }

 private:
  Vertex vertex_count_ = 0;
  Colour colour_count_ = 1;
  std::vector<ColouredEdge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbour> adjacency_;
};

/// Per-vertex counts, indexed by colour - 1.
///   deg[j-1]      = deg_j(v)
///   e_closed[j-1] = e_j[v], colour-j edges induced by N[v]
///   e_open[j-1]   = e_j(v), colour-j edges induced by N(v)
/// e_closed - e_open == deg componentwise.
struct VertexColourProfile {
  Vertex vertex = 0;
  std::vector<std::int64_t> deg;
  std::vector<std::int64_t> e_closed;
  std::vector<std::int64_t> e_open;

  std::int64_t degree() const;
  /// Same counts, whatever the vertex.
  bool same_counts(const VertexColourProfile& other) const {
    return deg == other.deg && e_closed == other.e_closed && e_open == other.e_open;
  }
};

std::vector<Vertex> closed_neighbourhood(const EdgeColouredGraph& g, Vertex v);

/// e_j(S): colour-j edges of the subgraph induced by `subset`.
std::int64_t count_coloured_edges(const EdgeColouredGraph& g, std::span<const Vertex> subset,
                                  Colour j);

VertexColourProfile vertex_profile(const EdgeColouredGraph& g, Vertex v);
std::vector<VertexColourProfile> all_profiles(const EdgeColouredGraph& g);

/// deg_j(v) == a[j-1] for every vertex and colour. Throws if a.size() != k.
bool is_colour_regular(const EdgeColouredGraph& g, std::span<const std::int64_t> a);

/// Same edges, declared over a larger palette [1, k].
EdgeColouredGraph widen_palette(const EdgeColouredGraph& g, Colour k);

/// Vertex v of g becomes permutation[v].
EdgeColouredGraph relabel(const EdgeColouredGraph& g, std::span<const Vertex> permutation);

}  // namespace flipforge
