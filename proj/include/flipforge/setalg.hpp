#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flipforge/group.hpp"

namespace flipforge {

/// Finite subset of a group. Elements are kept sorted and unique.
class GroupSubset {
 public:
  explicit GroupSubset(GroupSpec spec) : spec_(std::move(spec)) {}
  GroupSubset(GroupSpec spec, std::vector<GroupElement> elements);

  /// Convenience for cyclic groups: each residue is reduced into Z_n.
  static GroupSubset of_residues(const GroupSpec& spec, std::span<const std::int64_t> residues);
  static GroupSubset of_residues(const GroupSpec& spec,
                                 std::initializer_list<std::int64_t> residues) {
    return of_residues(spec, std::span<const std::int64_t>(residues.begin(), residues.size()));
  }

  const GroupSpec& spec() const { return spec_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const GroupElement& x) const;

  /// Residues of a cyclic-group subset, ascending.
  std::vector<std::int64_t> residues() const;

  friend bool operator==(const GroupSubset& a, const GroupSubset& b) {
    return a.spec_ == b.spec_ && a.elements_ == b.elements_;
  }

 private:
  GroupSpec spec_;
  std::vector<GroupElement> elements_;
};

GroupSubset sumset(const GroupSubset& a, const GroupSubset& b);
inline GroupSubset doubled(const GroupSubset& a) { return sumset(a, a); }
GroupSubset inverses(const GroupSubset& a);
GroupSubset set_union(const GroupSubset& a, const GroupSubset& b);
GroupSubset set_intersection(const GroupSubset& a, const GroupSubset& b);
bool are_disjoint(const GroupSubset& a, const GroupSubset& b);

/// (A + A) ∩ A = ∅, with a + a included.
bool is_sum_free(const GroupSubset& a);
bool is_inverse_closed(const GroupSubset& a);

/// Every residue of A is strictly below every residue of B. Cyclic groups only.
bool set_less(const GroupSubset& a, const GroupSubset& b);

/// {lo, lo+1, ..., hi} as residues of Z_n; 0 <= lo <= hi < n.
struct ResidueInterval {
  std::int64_t n = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  ResidueInterval() = default;
  ResidueInterval(std::int64_t n, std::int64_t lo, std::int64_t hi);

  std::int64_t size() const { return hi - lo + 1; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  friend bool operator==(const ResidueInterval&, const ResidueInterval&) = default;
};

GroupSubset interval_elements(const ResidueInterval& iv);

/// Disjointness checks for the sets built from three residue intervals.
struct IntervalSumsetReport {
  GroupSubset a;  // A0 ∪ A0⁻¹
  GroupSubset b;  // B0 ∪ B0⁻¹ ∪ 2B1 ∪ 2B1⁻¹
  bool sum_avoids_a = false;                   // (A + B) ∩ A = ∅
  std::optional<bool> involution_avoids_a;     // (A + {n/2}) ∩ A = ∅, n even only
  bool b1_hypothesis = false;                  // min(B1) >= 3n/16
  std::optional<bool> involution_b_avoids_a;   // ({n/2} + B) ∩ A = ∅, n even and hypothesis

  /// True when every applicable disjointness check holds.
  bool conclusions_hold() const;
};

/// Checks by direct sumset evaluation. Throws PreconditionError naming the
/// violated clause when A0, B0 are not disjoint sub-intervals of the open
/// interval (n/8, n/4) with A0 < B0, or B1 is not inside B0.
IntervalSumsetReport interval_sumset_check(std::int64_t n, const ResidueInterval& a0, const ResidueInterval& b0,
                            const ResidueInterval& b1);

}  // namespace flipforge
