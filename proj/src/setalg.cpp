#include "flipforge/setalg.hpp"

#include <algorithm>

#include "flipforge/error.hpp"

namespace flipforge {

namespace {

void require_same_spec(const GroupSubset& a, const GroupSubset& b) {
  if (!(a.spec() == b.spec())) {
    throw PreconditionError("subsets live in different groups: " + a.spec().to_string() +
                            " vs " + b.spec().to_string());
  }
}

void require_cyclic(const GroupSpec& spec) {
  if (!spec.is_cyclic()) {
    throw PreconditionError("operation needs a cyclic group, got " + spec.to_string());
  }
}

}  // namespace

GroupSubset::GroupSubset(GroupSpec spec, std::vector<GroupElement> elements)
    : spec_(std::move(spec)), elements_(std::move(elements)) {
  for (const auto& x : elements_) {
    if (!conforms(spec_, x)) {
      throw PreconditionError("element " + to_string(x) + " is not a reduced element of " +
                              spec_.to_string());
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

GroupSubset GroupSubset::of_residues(const GroupSpec& spec,
                                     std::span<const std::int64_t> residues) {
  require_cyclic(spec);
  std::vector<GroupElement> elements;
  elements.reserve(residues.size());
  for (auto r : residues) elements.push_back(make_element(spec, {r}));
  return GroupSubset(spec, std::move(elements));
}

bool GroupSubset::contains(const GroupElement& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::vector<std::int64_t> GroupSubset::residues() const {
  require_cyclic(spec_);
  std::vector<std::int64_t> out;
  out.reserve(elements_.size());
  for (const auto& x : elements_) out.push_back(x.residues[0]);
  return out;
}

GroupSubset sumset(const GroupSubset& a, const GroupSubset& b) {
  require_same_spec(a, b);
  std::vector<GroupElement> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.elements()) {
    for (const auto& y : b.elements()) out.push_back(add(a.spec(), x, y));
  }
  return GroupSubset(a.spec(), std::move(out));
}

GroupSubset inverses(const GroupSubset& a) {
  std::vector<GroupElement> out;
  out.reserve(a.size());
  for (const auto& x : a.elements()) out.push_back(negate(a.spec(), x));
  return GroupSubset(a.spec(), std::move(out));
}

GroupSubset set_union(const GroupSubset& a, const GroupSubset& b) {
  require_same_spec(a, b);
  std::vector<GroupElement> out;
  std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(),
                 b.elements().end(), std::back_inserter(out));
  return GroupSubset(a.spec(), std::move(out));
}

GroupSubset set_intersection(const GroupSubset& a, const GroupSubset& b) {
  require_same_spec(a, b);
  std::vector<GroupElement> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return GroupSubset(a.spec(), std::move(out));
}

bool are_disjoint(const GroupSubset& a, const GroupSubset& b) {
  return set_intersection(a, b).empty();
}

bool is_sum_free(const GroupSubset& a) {
  for (const auto& x : a.elements()) {
    for (const auto& y : a.elements()) {
      if (a.contains(add(a.spec(), x, y))) return false;
    }
  }
  return true;
}

bool is_inverse_closed(const GroupSubset& a) { return inverses(a) == a; }

bool set_less(const GroupSubset& a, const GroupSubset& b) {
  require_same_spec(a, b);
  require_cyclic(a.spec());
  if (a.empty() || b.empty()) return true;
  return a.elements().back().residues[0] < b.elements().front().residues[0];
}

ResidueInterval::ResidueInterval(std::int64_t n_, std::int64_t lo_, std::int64_t hi_)
    : n(n_), lo(lo_), hi(hi_) {
  if (n < 2) throw PreconditionError("interval modulus must be >= 2");
  if (!(0 <= lo && lo <= hi && hi < n)) {
    throw PreconditionError("interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] is not a non-empty range of residues mod " + std::to_string(n));
  }
}

GroupSubset interval_elements(const ResidueInterval& iv) {
  std::vector<std::int64_t> residues;
  for (auto x = iv.lo; x <= iv.hi; ++x) residues.push_back(x);
  return GroupSubset::of_residues(GroupSpec::cyclic(iv.n), residues);
}

bool IntervalSumsetReport::conclusions_hold() const {
  return sum_avoids_a && involution_avoids_a.value_or(true) &&
         involution_b_avoids_a.value_or(true);
}

IntervalSumsetReport interval_sumset_check(std::int64_t n, const ResidueInterval& a0, const ResidueInterval& b0,
                            const ResidueInterval& b1) {
  for (const auto* iv : {&a0, &b0, &b1}) {
    if (iv->n != n) throw PreconditionError("interval modulus differs from n");
  }
  // Strictly inside (n/8, n/4): 8*lo > n and 4*hi < n.
  auto inside = [n](const ResidueInterval& iv) { return 8 * iv.lo > n && 4 * iv.hi < n; };
  if (!inside(a0)) throw PreconditionError("A0 is not inside the open interval (n/8, n/4)");
  if (!inside(b0)) throw PreconditionError("B0 is not inside the open interval (n/8, n/4)");
  if (!(a0.hi < b0.lo)) throw PreconditionError("A0 < B0 fails (intervals must be disjoint and ordered)");
  if (!(b0.lo <= b1.lo && b1.hi <= b0.hi)) throw PreconditionError("B1 is not a sub-interval of B0");

  const auto spec = GroupSpec::cyclic(n);
  const auto a0_set = interval_elements(a0);
  const auto b0_set = interval_elements(b0);
  const auto b1_double = doubled(interval_elements(b1));

  IntervalSumsetReport report{set_union(a0_set, inverses(a0_set)),
                       set_union(set_union(b0_set, inverses(b0_set)),
                                 set_union(b1_double, inverses(b1_double))),
                       false, std::nullopt, false, std::nullopt};
  report.sum_avoids_a = are_disjoint(sumset(report.a, report.b), report.a);
  report.b1_hypothesis = 16 * b1.lo >= 3 * n;
  if (n % 2 == 0) {
    const auto half = GroupSubset::of_residues(spec, {n / 2});
    report.involution_avoids_a = are_disjoint(sumset(report.a, half), report.a);
    if (report.b1_hypothesis) {
      report.involution_b_avoids_a = are_disjoint(sumset(half, report.b), report.a);
    }
  }
  return report;
}

}  // namespace flipforge
