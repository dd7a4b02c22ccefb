#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flipforge/ecgraph.hpp"
#include "flipforge/group.hpp"
#include "flipforge/setalg.hpp"

namespace flipforge {

enum class ViolationReason { NotRegular, ChainNotStrict, DegreesNotIncreasing };

std::string to_string(ViolationReason reason);

struct FlipViolation {
  std::optional<Vertex> vertex;  // nullopt for graph-wide violations
  ViolationReason reason = ViolationReason::NotRegular;
  std::string detail;
};

/// Verdict on the flip conditions: per-colour regularity with strictly
/// increasing degrees a_1 < ... < a_k, and e_1[v] > ... > e_k[v] at every v.
struct FlipReport {
  bool pass = false;
  std::optional<std::vector<std::int64_t>> colour_degrees;  // set when colour-regular
  std::optional<std::vector<std::int64_t>> uniform_e;       // set when every vertex agrees
  std::vector<std::vector<std::int64_t>> e_per_vertex;      // filled only when not uniform
  std::vector<FlipViolation> violations;
};

/// Failures are verdicts, never exceptions.
FlipReport verify_flip(const EdgeColouredGraph& g,
                       std::optional<std::vector<std::int64_t>> expected = std::nullopt);

std::uint64_t isqrt(std::uint64_t x);

/// 3 <= b < r <= C(b+1, 2) - 1
bool old_bound_admissible(std::int64_t b, std::int64_t r);
/// 4 <= b < r < b + 2*floor((b+2)/6)^2
bool new_bound_admissible(std::int64_t b, std::int64_t r);

/// Previously known upper bound on h(b, r).
std::int64_t old_bound(std::int64_t b, std::int64_t r);
/// 8 λ (2 + ⌊r/2⌋ + ⌊(b+2)/2⌋ - 2⌊(b+2)/6⌋), the order of the Cayley construction.
std::int64_t new_bound(std::int64_t b, std::int64_t r);
/// λ = max{1, (b mod 2) + (r mod 2)}
std::int64_t parity_factor(std::int64_t b, std::int64_t r);

enum class LowerBoundForm {
  Max,      // max{1, ⌈k/4⌉ - 1}
  Literal,  // min{1, ⌈k/4⌉ - 1}
};

struct QkBounds {
  std::int64_t lower = 0;
  std::int64_t upper_exclusive = 0;
};

/// lower <= q(k) < upper_exclusive, k >= 4.
QkBounds qk_bounds(std::int64_t k, LowerBoundForm form = LowerBoundForm::Max);

struct BoundRow {
  std::int64_t b = 0;
  std::int64_t r = 0;
  std::optional<std::int64_t> old_bound;
  std::optional<std::int64_t> new_bound;
  bool admissible_old() const { return old_bound.has_value(); }
  bool admissible_new() const { return new_bound.has_value(); }
};

enum class RangePolicy {
  Union,   // r over the union of both admissible ranges
  Common,  // r where both bounds are defined
};

std::vector<BoundRow> bounds_table(std::span<const std::int64_t> b_values,
                                   RangePolicy policy = RangePolicy::Union);

/// CSV with header `b,r,old_bound,new_bound`; inadmissible cells are empty.
std::string bounds_csv(std::span<const BoundRow> rows);

enum class SearchMode { Exhaustive, Greedy };

struct SearchResult {
  GroupSubset best;
  bool is_maximum = false;        // exhaustive search ran to completion
  bool budget_exhausted = false;
  std::uint64_t steps = 0;
};

inline constexpr std::uint64_t kExhaustiveSearchMaxOrder = 24;

/// Largest (exhaustive) or maximal (greedy) subset that is both sum-free and
/// inverse-closed. The search runs over atoms {x, -x}; the identity is never
/// included since 0 + 0 = 0. `budget` caps candidate evaluations; on
/// exhaustion the best set so far is returned with budget_exhausted set.
SearchResult search_sumfree_inverse_closed(const GroupSpec& spec, SearchMode mode,
                                           std::uint64_t budget = 100'000'000);

}  // namespace flipforge
