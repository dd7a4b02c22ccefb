#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "flipforge/ecgraph.hpp"
#include "flipforge/group.hpp"
#include "flipforge/setalg.hpp"

namespace flipforge {

/// Colour -> connecting-set class of a coloured Cayley graph. Each class is
/// inverse-closed and identity-free; classes are pairwise disjoint.
class ColouredConnectingSet {
 public:
  /// colour_count 0 means "the largest colour used".
  ColouredConnectingSet(GroupSpec spec, std::map<Colour, GroupSubset> classes,
                        Colour colour_count = 0);

  const GroupSpec& spec() const { return spec_; }
  const std::map<Colour, GroupSubset>& classes() const { return classes_; }
  Colour colour_count() const { return colour_count_; }

 private:
  GroupSpec spec_;
  std::map<Colour, GroupSubset> classes_;
  Colour colour_count_ = 1;
};

/// Vertices follow enumerate(spec); edge {g, g+s} gets the colour of s's class.
EdgeColouredGraph cayley_build(const ColouredConnectingSet& ccs,
                               std::uint64_t limit = kDefaultEnumerationLimit);

/// Product vertex (u, v) has id u * |V(H)| + v.
inline Vertex product_vertex(Vertex u, Vertex v, Vertex h_order) { return u * h_order + v; }

/// Coloured strong product. Edges with u == u' take H's colour of {v, v'};
/// every other edge (v == v' or diagonal) takes G's colour of {u, u'}.
EdgeColouredGraph strong_product(const EdgeColouredGraph& g, const EdgeColouredGraph& h);

/// Coloured Cartesian product. u == u' edges take H's colour, v == v' edges G's.
EdgeColouredGraph cartesian_product(const EdgeColouredGraph& g, const EdgeColouredGraph& h);

/// Closed-form profile of (u, v) in G ⊠ H from the factor profiles at u and v.
VertexColourProfile predict_strong_profile(const VertexColourProfile& g,
                                           const VertexColourProfile& h);
/// Closed-form profile of (u, v) in G □ H: componentwise sums.
VertexColourProfile predict_cartesian_profile(const VertexColourProfile& g,
                                              const VertexColourProfile& h);

/// Cayley graph on the union of two coloured connecting sets whose classes
/// are pairwise disjoint. Classes sharing a colour are merged.
EdgeColouredGraph pack_cayley(const GroupSpec& spec, const ColouredConnectingSet& first,
                              const ColouredConnectingSet& second);

/// Both sides of the packing identity
///   e1[v] - e2[v] = (e1^G[v] - e2^H[v]) + (e2^H(N^G[v]) - e1^G(N^H[v]))
/// for G = Cay(B) in colour 1 and H = Cay(R) in colour 2, by direct counting.
struct PackingDeltaReport {
  Vertex vertex = 0;
  std::int64_t e1_packed = 0;
  std::int64_t e2_packed = 0;
  std::int64_t e1_blue = 0;           // e1^G[v]
  std::int64_t e2_red = 0;            // e2^H[v]
  std::int64_t e2_red_on_blue = 0;    // e2^H(N^G[v])
  std::int64_t e1_blue_on_red = 0;    // e1^G(N^H[v])
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool red_plus_blue_avoids_red = false;  // (R + B) ∩ R = ∅
  bool blue_dominates = false;            // e1^G[v] > e2^H[v]
};

/// Throws VerificationError if the two sides differ. `vertex` indexes
/// enumerate(spec); the default is the identity.
PackingDeltaReport packing_delta(const GroupSpec& spec, const GroupSubset& blue, const GroupSubset& red,
                          Vertex vertex = 0);

/// Colour of each perfect matching M_d, d = 0..part_size-1, of K_{ρ,ρ}.
struct MatchingColourPlan {
  std::int64_t part_size = 0;
  Colour colour_count = 1;
  std::vector<Colour> assignments;

  /// Consecutive matchings per (colour, count) entry; rejects zero counts.
  static MatchingColourPlan from_counts(const std::vector<std::pair<Colour, std::int64_t>>& counts,
                                        Colour colour_count);
};

/// K_{ρ,ρ} on parts {0..ρ-1}, {ρ..2ρ-1} with matching M_d = {(i, ρ + (i+d) mod ρ)}
/// coloured assignments[d].
EdgeColouredGraph bipartite_matching_graph(const MatchingColourPlan& plan);

}  // namespace flipforge
