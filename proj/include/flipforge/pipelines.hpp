#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flipforge/analysis.hpp"
#include "flipforge/construct.hpp"
#include "flipforge/ecgraph.hpp"
#include "flipforge/group.hpp"
#include "flipforge/setalg.hpp"

namespace flipforge {

// ---------------------------------------------------------------------------
// (b, r)-flip Cayley graphs
// ---------------------------------------------------------------------------

enum class ParityCase {
  BothEven,  // Γ = Z_n, R = R1, B = B1
  OneOdd,    // Γ = Z_n, the involution n/2 joins the odd side
  BothOdd,   // Γ = Z_2 x Z_n
};

std::string to_string(ParityCase c);

/// Every intermediate set and scalar of the (b, r) construction.
///
/// Placement is deterministic: R0 is the lowest ⌊r/2⌋ residues above n/8,
/// T0 the highest |T0| residues below n/4, and T2 the top ⌊(b+2)/6⌋ of T0.
/// R1, T1, B1 live in Z_n; R and B in the final group.
struct BrPlan {
  std::int64_t b = 0;
  std::int64_t r = 0;
  std::int64_t n = 0;
  std::int64_t lambda = 1;
  ParityCase parity_case = ParityCase::BothEven;
  ResidueInterval r0;
  ResidueInterval t0;
  ResidueInterval t2;
  GroupSubset r1{GroupSpec::cyclic(2)};
  GroupSubset t1{GroupSpec::cyclic(2)};
  GroupSubset b1{GroupSpec::cyclic(2)};
  GroupSubset red{GroupSpec::cyclic(2)};
  GroupSubset blue{GroupSpec::cyclic(2)};
  GroupSpec group = GroupSpec::cyclic(2);

  /// Blue (B) in colour 1, red (R) in colour 2.
  ColouredConnectingSet connecting_set() const;
  std::uint64_t order() const { return group.order(); }
};

/// Requires 4 <= b < r < b + 2⌊(b+2)/6⌋²; throws PreconditionError naming
/// the failed inequality. Every plan invariant is checked by brute force
/// before returning (VerificationError if one fails).
BrPlan plan_br(std::int64_t b, std::int64_t r);

struct BrBuild {
  EdgeColouredGraph graph;
  FlipReport report;
  std::int64_t blue_closed = 0;  // e1^G[v] in Cay(Γ, B) alone
  std::int64_t red_closed = 0;   // e2^H[v] in Cay(Γ, R) alone
};

/// Packs the plan's connecting sets and certifies the result: colour
/// degrees (b, r) and e1[v] > e2[v] everywhere, e1^G[v] >= b + 2⌊(b+2)/6⌋² >
/// r = e2^H[v] in the factors, and order λn equal to new_bound(b, r).
BrBuild build_br(const BrPlan& plan);

// ---------------------------------------------------------------------------
// Arbitrary gaps: H ⊠ (F □ K)
// ---------------------------------------------------------------------------

/// Sum-free connecting set over Z_2^a x Z_m: colour q+j gets a class of size
/// k-q-j (j = 1..k-q-1), all with Z_m component in the open middle third.
/// `relaxed` drops the 1 < q < k/4 gate (test-scale parameters).
ColouredConnectingSet k_connecting_set(std::int64_t k, std::int64_t q, bool relaxed = false);

/// Cayley graph of k_connecting_set(), palette [1, k], certified sum-free with
/// e_{q+j}[v] = deg_{q+j}(v) = k-q-j at every vertex.
EdgeColouredGraph build_K(std::int64_t k, std::int64_t q, bool relaxed = false);

/// slope * t + intercept
struct AffineInt {
  std::int64_t slope = 0;
  std::int64_t intercept = 0;
  std::int64_t at(std::int64_t t) const { return slope * t + intercept; }
  friend bool operator==(const AffineInt&, const AffineInt&) = default;
};

struct MonotonicityCertificate {
  std::int64_t t = 0;
  std::vector<std::int64_t> deg;  // predicted deg_j, j = 1..k
  std::vector<std::int64_t> e;    // predicted e_j[v], j = 1..k
  bool deg_increasing = false;
  bool e_decreasing = false;
  std::optional<std::int64_t> first_deg_violation;  // colour j with deg_j >= deg_{j+1}
  std::optional<std::int64_t> first_e_violation;    // colour j with e_j <= e_{j+1}
  bool holds() const { return deg_increasing && e_decreasing; }
};

struct GapsOptions {
  std::optional<std::int64_t> t_override;
  std::optional<std::uint64_t> f_order;  // |V(F)|, for the order estimate
  /// Skip the q, gap-condition, minimum-t and monotonicity gates. Intended
  /// for small-scale product checks only.
  bool relaxed = false;
};

struct GapsPlan {
  std::int64_t q = 0;
  std::int64_t k = 0;
  std::vector<std::int64_t> d;      // D_1..D_q
  std::vector<std::int64_t> a_low;  // a_1..a_q
  std::int64_t xi = 0;              // max_{1<=j<q} (D_j - D_{j+1})
  std::int64_t mu = 0;              // C(k-q, 2) + Σ a_i
  std::int64_t gap_lhs = 0;         // D_q (k - 4q)
  std::int64_t gap_rhs = 0;         // 1 + ξ q(q-1) + 5 C(k-q, 2)
  std::int64_t sum_d = 0;           // Σ_{i=1..k} D_i
  std::int64_t t_min = 0;
  std::int64_t t = 0;
  std::int64_t rho = 0;             // (k-q) t + C(k-q, 2)
  std::int64_t kappa_num = 0;       // κ = (ρ+1) / ((k-q) t), reduced
  std::int64_t kappa_den = 1;
  std::vector<std::int64_t> s_sizes;  // |S_j| = k-q-j
  std::vector<AffineInt> predicted_deg;
  std::vector<AffineInt> predicted_e;
  std::uint64_t k_order = 0;
  std::uint64_t order_per_f_vertex = 0;  // 2ρ |K|
  std::optional<std::uint64_t> materialized_order_estimate;
  MonotonicityCertificate certificate;
  bool relaxed = false;

  std::int64_t gap_slack() const { return gap_lhs - gap_rhs; }
  /// Colour q+j receives t+j-1 perfect matchings of H.
  MatchingColourPlan matching_plan() const;
};

/// Evaluates the predicted chains at t and records the first violations.
MonotonicityCertificate certify_chain(const GapsPlan& plan, std::int64_t t);

GapsPlan plan_gaps(std::int64_t q, std::int64_t k, const std::vector<std::int64_t>& d,
                   const std::vector<std::int64_t>& a_low, const GapsOptions& options = {});

inline constexpr std::uint64_t kDefaultMaterializeLimit = 200'000;

struct GapsResult {
  EdgeColouredGraph k_graph;
  EdgeColouredGraph m_graph;  // F □ K, fully verified
  EdgeColouredGraph h_graph;
  VertexColourProfile predicted;  // uniform profile of H ⊠ (F □ K)
  MonotonicityCertificate certificate;
  std::uint64_t order = 0;
  bool materialized = false;
  std::optional<EdgeColouredGraph> g_graph;
  std::optional<FlipReport> report;
};

/// F must be colour-uniform with deg = a_low and e = D on colours 1..q.
GapsResult build_gaps(const GapsPlan& plan, const EdgeColouredGraph& f,
                      std::uint64_t materialize_limit = kDefaultMaterializeLimit);

/// Colour c becomes the (1-based) index of the part containing it. The parts
/// must partition [1, k]. Additivity of deg and e[v] is asserted per vertex.
EdgeColouredGraph colour_merge(const EdgeColouredGraph& g,
                               const std::vector<std::vector<Colour>>& partition);

/// Advisory check of the hypotheses under which unit-gap q-flip graphs on
/// [b, b+q-1] are known to exist: b >= 101 and ⌊(b² - 10 b^{3/2}) / 4⌋ >= q - 1.
struct FlippingIntervalAdvice {
  bool b_large_enough = false;
  bool floor_condition = false;
  bool feasible() const { return b_large_enough && floor_condition; }
};

FlippingIntervalAdvice flipping_interval_advice(std::int64_t b, std::int64_t q);

}  // namespace flipforge
