#include "flipforge/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "flipforge/error.hpp"

namespace flipforge {

std::string to_string(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::NotRegular:
      return "not-regular";
    case ViolationReason::ChainNotStrict:
      return "chain-not-strict";
    case ViolationReason::DegreesNotIncreasing:
      return "degrees-not-increasing";
  }
  return "unknown";
}

namespace {

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

}  // namespace

FlipReport verify_flip(const EdgeColouredGraph& g, std::optional<std::vector<std::int64_t>> expected) {
  FlipReport report;
  const auto k = static_cast<std::size_t>(g.colour_count());
  const auto profiles = all_profiles(g);

  if (expected && expected->size() != k) {
    report.violations.push_back({std::nullopt, ViolationReason::NotRegular,
                                 "expected sequence has length " +
                                     std::to_string(expected->size()) + ", graph has " +
                                     std::to_string(k) + " colours"});
    expected.reset();
    report.pass = false;
  }

  std::vector<std::int64_t> reference;
  if (expected) {
    reference = *expected;
  } else if (!profiles.empty()) {
    reference = profiles.front().deg;
  } else {
    reference.assign(k, 0);
  }

  bool regular = true;
  bool uniform = true;
  for (const auto& p : profiles) {
    if (p.deg != reference) {
      regular = false;
      report.violations.push_back({p.vertex, ViolationReason::NotRegular,
                                   "colour degrees " + join(p.deg) + ", expected " +
                                       join(reference)});
    }
    for (std::size_t j = 0; j + 1 < k; ++j) {
      if (!(p.e_closed[j] > p.e_closed[j + 1])) {
        report.violations.push_back(
            {p.vertex, ViolationReason::ChainNotStrict,
             "e_" + std::to_string(j + 1) + "[v] = " + std::to_string(p.e_closed[j]) + " <= e_" +
                 std::to_string(j + 2) + "[v] = " + std::to_string(p.e_closed[j + 1])});
        break;
      }
    }
    if (p.e_closed != profiles.front().e_closed) uniform = false;
  }

  if (regular) {
    report.colour_degrees = reference;
    for (std::size_t j = 0; j + 1 < k; ++j) {
      if (!(reference[j] < reference[j + 1])) {
        report.violations.push_back({std::nullopt, ViolationReason::DegreesNotIncreasing,
                                     "colour degrees " + join(reference) +
                                         " are not strictly increasing"});
        break;
      }
    }
  }

  if (uniform) {
    report.uniform_e = profiles.empty() ? std::vector<std::int64_t>(k, 0) : profiles.front().e_closed;
  } else {
    report.e_per_vertex.reserve(profiles.size());
    for (const auto& p : profiles) report.e_per_vertex.push_back(p.e_closed);
  }

  report.pass = report.violations.empty();
  return report;
}

std::uint64_t isqrt(std::uint64_t x) {
  std::uint64_t lo = 0;
  std::uint64_t hi = std::min<std::uint64_t>(x, 4'294'967'295ULL);
  while (lo < hi) {
    auto mid = lo + (hi - lo + 1) / 2;
    if (mid * mid <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

bool old_bound_admissible(std::int64_t b, std::int64_t r) {
  return 3 <= b && b < r && r <= b * (b + 1) / 2 - 1;
}

bool new_bound_admissible(std::int64_t b, std::int64_t r) {
  const auto s = (b + 2) / 6;
  return 4 <= b && b < r && r < b + 2 * s * s;
}

std::int64_t old_bound(std::int64_t b, std::int64_t r) {
  if (!old_bound_admissible(b, r)) {
    throw PreconditionError("old bound needs 3 <= b < r <= C(b+1,2) - 1, got (" +
                            std::to_string(b) + ", " + std::to_string(r) + ")");
  }
  // floor((5 + sqrt(x)) / 2) == floor((5 + isqrt(x)) / 2) for every x >= 0.
  const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(1 + 8 * (r - b))));
  const auto f = (5 + root) / 2;
  return 2 * (r + b + 1 - f) * f;
}

std::int64_t parity_factor(std::int64_t b, std::int64_t r) {
  return std::max<std::int64_t>(1, b % 2 + r % 2);
}

std::int64_t new_bound(std::int64_t b, std::int64_t r) {
  if (!new_bound_admissible(b, r)) {
    throw PreconditionError("new bound needs 4 <= b < r < b + 2*floor((b+2)/6)^2, got (" +
                            std::to_string(b) + ", " + std::to_string(r) + ")");
  }
  return 8 * parity_factor(b, r) * (2 + r / 2 + (b + 2) / 2 - 2 * ((b + 2) / 6));
}

QkBounds qk_bounds(std::int64_t k, LowerBoundForm form) {
  if (k < 4) throw PreconditionError("q(k) bounds need k >= 4");
  const auto ceil_quarter = (k + 3) / 4;
  const auto lower = form == LowerBoundForm::Max ? std::max<std::int64_t>(1, ceil_quarter - 1)
                                                 : std::min<std::int64_t>(1, ceil_quarter - 1);
  const auto upper = k % 3 == 0 ? k / 3 : (k + 1) / 2;
  return {lower, upper};
}

std::vector<BoundRow> bounds_table(std::span<const std::int64_t> b_values, RangePolicy policy) {
  std::vector<BoundRow> rows;
  for (auto b : b_values) {
    const auto s = (b + 2) / 6;
    const auto old_max = b * (b + 1) / 2 - 1;
    const auto new_max = b + 2 * s * s - 1;
    const auto r_max = std::max(old_max, new_max);
    for (auto r = b + 1; r <= r_max; ++r) {
      BoundRow row{b, r, std::nullopt, std::nullopt};
      if (old_bound_admissible(b, r)) row.old_bound = old_bound(b, r);
      if (new_bound_admissible(b, r)) row.new_bound = new_bound(b, r);
      const bool keep = policy == RangePolicy::Union
                            ? (row.admissible_old() || row.admissible_new())
                            : (row.admissible_old() && row.admissible_new());
      if (keep) rows.push_back(row);
    }
  }
  return rows;
}

std::string bounds_csv(std::span<const BoundRow> rows) {
  std::ostringstream out;
  out << "b,r,old_bound,new_bound\n";
  for (const auto& row : rows) {
    out << row.b << ',' << row.r << ',';
    if (row.old_bound) out << *row.old_bound;
    out << ',';
    if (row.new_bound) out << *row.new_bound;
    out << '\n';
  }
  return out.str();
}

namespace {

// Atoms {x, -x} over the non-identity elements, in enumeration order of
// their smaller member. Each atom is stored by element index.
std::vector<std::vector<std::uint64_t>> inverse_atoms(const GroupSpec& spec) {
  std::vector<std::vector<std::uint64_t>> atoms;
  std::vector<char> taken(spec.order(), 0);
  taken[0] = 1;
  for (std::uint64_t i = 1; i < spec.order(); ++i) {
    if (taken[i]) continue;
    auto j = element_index(spec, negate(spec, element_at(spec, i)));
    taken[i] = taken[j] = 1;
    atoms.push_back(i == j ? std::vector<std::uint64_t>{i} : std::vector<std::uint64_t>{i, j});
  }
  return atoms;
}

struct SumTable {
  std::uint64_t order;
  std::vector<std::uint64_t> sum;  // sum[i * order + j]

  explicit SumTable(const GroupSpec& spec) : order(spec.order()), sum(order * order) {
    for (std::uint64_t i = 0; i < order; ++i) {
      auto x = element_at(spec, i);
      for (std::uint64_t j = 0; j < order; ++j) {
        sum[i * order + j] = element_index(spec, add(spec, x, element_at(spec, j)));
      }
    }
  }
  std::uint64_t operator()(std::uint64_t i, std::uint64_t j) const { return sum[i * order + j]; }
};

// Adding `atom` to the sum-free set `members` keeps it sum-free.
bool extends_sum_free(const SumTable& table, const std::vector<char>& in_set,
                      const std::vector<std::uint64_t>& members,
                      const std::vector<std::uint64_t>& atom) {
  std::vector<char> with(in_set);
  for (auto a : atom) with[a] = 1;
  std::vector<std::uint64_t> all(members);
  all.insert(all.end(), atom.begin(), atom.end());
  for (auto x : all) {
    for (auto a : atom) {
      if (with[table(x, a)]) return false;
    }
  }
  return true;
}

GroupSubset subset_of(const GroupSpec& spec, const std::vector<std::uint64_t>& members) {
  std::vector<GroupElement> elements;
  for (auto i : members) elements.push_back(element_at(spec, i));
  return GroupSubset(spec, std::move(elements));
}

struct Exhaustive {
  const SumTable& table;
  const std::vector<std::vector<std::uint64_t>>& atoms;
  std::vector<std::size_t> suffix_capacity;
  std::uint64_t budget;
  std::uint64_t steps = 0;
  bool exhausted = false;
  std::vector<char> in_set;
  std::vector<std::uint64_t> members;
  std::vector<std::uint64_t> best;

  void run(std::size_t next) {
    if (members.size() > best.size()) best = members;
    if (next == atoms.size() || exhausted) return;
    if (members.size() + suffix_capacity[next] <= best.size()) return;
    // Include-first keeps the first maximum found deterministic.
    if (++steps > budget) {
      exhausted = true;
      return;
    }
    const auto& atom = atoms[next];
    if (extends_sum_free(table, in_set, members, atom)) {
      for (auto a : atom) {
        in_set[a] = 1;
        members.push_back(a);
      }
      run(next + 1);
      for (auto a : atom) {
        in_set[a] = 0;
        members.pop_back();
      }
    }
    run(next + 1);
  }
};

}  // namespace

SearchResult search_sumfree_inverse_closed(const GroupSpec& spec, SearchMode mode,
                                           std::uint64_t budget) {
  if (mode == SearchMode::Exhaustive && spec.order() > kExhaustiveSearchMaxOrder) {
    throw PreconditionError("exhaustive search needs group order <= " +
                            std::to_string(kExhaustiveSearchMaxOrder) + ", got " +
                            std::to_string(spec.order()));
  }
  enumerate(spec);  // enforces the enumeration limit
  const SumTable table(spec);
  const auto atoms = inverse_atoms(spec);

  if (mode == SearchMode::Greedy) {
    std::vector<char> in_set(spec.order(), 0);
    std::vector<std::uint64_t> members;
    SearchResult result{GroupSubset(spec), false, false, 0};
    for (const auto& atom : atoms) {
      if (++result.steps > budget) {
        result.budget_exhausted = true;
        break;
      }
      if (extends_sum_free(table, in_set, members, atom)) {
        for (auto a : atom) {
          in_set[a] = 1;
          members.push_back(a);
        }
      }
    }
    result.best = subset_of(spec, members);
    return result;
  }

  Exhaustive search{table, atoms, std::vector<std::size_t>(atoms.size() + 1, 0), budget, 0, false,
                    std::vector<char>(spec.order(), 0), {}, {}};
  for (std::size_t i = atoms.size(); i-- > 0;) {
    search.suffix_capacity[i] = search.suffix_capacity[i + 1] + atoms[i].size();
  }
  search.run(0);
  return {subset_of(spec, search.best), !search.exhausted, search.exhausted, search.steps};
}

}  // namespace flipforge
