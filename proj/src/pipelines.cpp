#include "flipforge/pipelines.hpp"

#include <algorithm>
#include <numeric>

#include "flipforge/error.hpp"

namespace flipforge {

std::string to_string(ParityCase c) {
  switch (c) {
    case ParityCase::BothEven:
      return "i";
    case ParityCase::OneOdd:
      return "ii";
    case ParityCase::BothOdd:
      return "iii";
  }
  return "?";
}

namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

void expect(bool condition, const std::string& what) {
  if (!condition) throw VerificationError(what);
}

// {0} x A inside Z_2 x Z_n.
GroupSubset lift(const GroupSubset& a, const GroupSpec& target) {
  std::vector<GroupElement> out;
  for (auto x : a.residues()) out.push_back(make_element(target, {0, x}));
  return GroupSubset(target, std::move(out));
}

GroupSubset with_element(const GroupSubset& a, GroupElement x) {
  auto elements = a.elements();
  elements.push_back(std::move(x));
  return GroupSubset(a.spec(), std::move(elements));
}

bool profiles_uniform(const std::vector<VertexColourProfile>& profiles) {
  return std::all_of(profiles.begin(), profiles.end(),
                     [&](const VertexColourProfile& p) { return p.same_counts(profiles.front()); });
}

}  // namespace

ColouredConnectingSet BrPlan::connecting_set() const {
  return ColouredConnectingSet(group, {{1, blue}, {2, red}}, 2);
}

BrPlan plan_br(std::int64_t b, std::int64_t r) {
  if (b < 4) throw PreconditionError("b >= 4 required, got b = " + std::to_string(b));
  if (r <= b) {
    throw PreconditionError("b < r required, got b = " + std::to_string(b) +
                            ", r = " + std::to_string(r));
  }
  const auto s = (b + 2) / 6;
  const auto r_limit = b + 2 * s * s;
  if (r >= r_limit) {
    throw PreconditionError("r < b + 2*floor((b+2)/6)^2 = " + std::to_string(r_limit) +
                            " required, got r = " + std::to_string(r));
  }

  BrPlan plan;
  plan.b = b;
  plan.r = r;
  const auto r0_size = r / 2;
  const auto t0_size = (b + 2) / 2 - 2 * s;
  const auto n = 8 * (2 + r0_size + t0_size);
  plan.n = n;
  plan.lambda = parity_factor(b, r);
  plan.r0 = ResidueInterval(n, n / 8 + 1, n / 8 + r0_size);
  plan.t0 = ResidueInterval(n, n / 4 - t0_size, n / 4 - 1);
  plan.t2 = ResidueInterval(n, n / 4 - s, n / 4 - 1);
  expect(plan.r0.hi < plan.t0.lo, "placement infeasible: R0 and T0 overlap");
  expect(16 * plan.t2.lo >= 3 * n, "placement infeasible: min(T2) < 3n/16");

  const auto sums = interval_sumset_check(n, plan.r0, plan.t0, plan.t2);
  expect(sums.b1_hypothesis && sums.conclusions_hold(),
         "interval sumset checks fail for the chosen intervals");

  const auto r0_set = interval_elements(plan.r0);
  const auto t0_set = interval_elements(plan.t0);
  const auto t2_double = doubled(interval_elements(plan.t2));
  plan.r1 = set_union(r0_set, inverses(r0_set));
  plan.t1 = set_union(t0_set, inverses(t0_set));
  plan.b1 = set_union(plan.t1, set_union(t2_double, inverses(t2_double)));
  expect(plan.r1 == sums.a && plan.b1 == sums.b, "R1/B1 differ from the interval sets A/B");
  expect(static_cast<std::int64_t>(plan.r1.size()) == r - r % 2, "|R1| != r - (r mod 2)");
  expect(static_cast<std::int64_t>(plan.b1.size()) == b - b % 2, "|B1| != b - (b mod 2)");

  const auto zn = GroupSpec::cyclic(n);
  if (b % 2 == 0 && r % 2 == 0) {
    plan.parity_case = ParityCase::BothEven;
    plan.group = zn;
    plan.red = plan.r1;
    plan.blue = plan.b1;
  } else if (b % 2 == 1 && r % 2 == 1) {
    plan.parity_case = ParityCase::BothOdd;
    plan.group = GroupSpec({2, n});
    plan.blue = with_element(lift(plan.b1, plan.group), make_element(plan.group, {0, n / 2}));
    plan.red = with_element(lift(plan.r1, plan.group), make_element(plan.group, {1, 0}));
  } else {
    plan.parity_case = ParityCase::OneOdd;
    plan.group = zn;
    const auto half = make_element(zn, {n / 2});
    plan.red = r % 2 ? with_element(plan.r1, half) : plan.r1;
    plan.blue = b % 2 ? with_element(plan.b1, half) : plan.b1;
  }
  expect(plan.group.order() == static_cast<std::uint64_t>(plan.lambda * n), "|Γ| != λn");

  const auto id = identity(plan.group);
  expect(static_cast<std::int64_t>(plan.red.size()) == r, "|R| != r");
  expect(static_cast<std::int64_t>(plan.blue.size()) == b, "|B| != b");
  expect(is_sum_free(plan.red), "R is not sum-free");
  expect(is_inverse_closed(plan.red) && is_inverse_closed(plan.blue), "R or B not inverse-closed");
  expect(are_disjoint(plan.red, plan.blue), "R and B intersect");
  expect(!plan.red.contains(id) && !plan.blue.contains(id), "R or B contains the identity");
  expect(are_disjoint(sumset(plan.red, plan.blue), plan.red), "(R + B) meets R");
  return plan;
}

BrBuild build_br(const BrPlan& plan) {
  const auto& group = plan.group;
  const ColouredConnectingSet blue_set(group, {{1, plan.blue}}, 2);
  const ColouredConnectingSet red_set(group, {{2, plan.red}}, 2);
  BrBuild out{pack_cayley(group, blue_set, red_set), {}, 0, 0};
  out.report = verify_flip(out.graph, std::vector<std::int64_t>{plan.b, plan.r});

  const auto blue_profiles = all_profiles(cayley_build(blue_set));
  const auto red_profiles = all_profiles(cayley_build(red_set));
  expect(profiles_uniform(blue_profiles) && profiles_uniform(red_profiles),
         "Cayley factor profiles are not vertex-uniform");
  out.blue_closed = blue_profiles.front().e_closed[0];
  out.red_closed = red_profiles.front().e_closed[1];

  const auto s = (plan.b + 2) / 6;
  const auto prefix = "(" + std::to_string(plan.b) + "," + std::to_string(plan.r) + ") graph: ";
  expect(out.report.pass, prefix + "flip verification failed");
  expect(out.blue_closed >= plan.b + 2 * s * s, prefix + "e1^G[v] < b + 2*floor((b+2)/6)^2");
  expect(out.red_closed == plan.r, prefix + "e2^H[v] != r");
  expect(plan.r < plan.b + 2 * s * s, prefix + "r >= b + 2*floor((b+2)/6)^2");
  expect(out.graph.vertex_count() == new_bound(plan.b, plan.r), prefix + "order != new_bound");
  return out;
}

ColouredConnectingSet k_connecting_set(std::int64_t k, std::int64_t q, bool relaxed) {
  if (!relaxed) {
    if (q <= 1) throw PreconditionError("q > 1 required, got q = " + std::to_string(q));
    if (4 * q >= k) {
      throw PreconditionError("q < k/4 required, got q = " + std::to_string(q) +
                              ", k = " + std::to_string(k));
    }
  } else if (q < 1 || k - q - 1 < 1) {
    throw PreconditionError("need q >= 1 and k - q - 1 >= 1");
  }

  const auto class_count = k - q - 1;
  std::int64_t odd = 0;
  std::int64_t pairs_needed = 0;
  for (std::int64_t j = 1; j <= class_count; ++j) {
    odd += (k - q - j) % 2;
    pairs_needed += (k - q - j) / 2;
  }
  std::int64_t a = 0;
  while ((std::int64_t{1} << a) < odd) ++a;
  const auto cosets = std::int64_t{1} << a;

  // Smallest even m whose middle third (m/3, 2m/3) holds enough {y, -y} pairs.
  std::int64_t m = 2;
  auto lowest_y = [](std::int64_t m) { return m / 3 + 1; };
  while (cosets * std::max<std::int64_t>(0, m / 2 - lowest_y(m)) < pairs_needed) m += 2;

  std::vector<std::int64_t> factors(static_cast<std::size_t>(a), 2);
  factors.push_back(m);
  const GroupSpec spec(factors);

  auto element = [&](std::int64_t coset, std::int64_t y) {
    std::vector<std::int64_t> raw(static_cast<std::size_t>(a) + 1);
    for (std::int64_t bit = 0; bit < a; ++bit) raw[bit] = (coset >> (a - 1 - bit)) & 1;
    raw.back() = y;
    return make_element(spec, std::move(raw));
  };
  std::vector<GroupElement> involutions;
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  for (std::int64_t c = 0; c < cosets; ++c) {
    involutions.push_back(element(c, m / 2));
    for (auto y = lowest_y(m); y < m / 2; ++y) pairs.emplace_back(element(c, y), element(c, m - y));
  }

  std::map<Colour, GroupSubset> classes;
  std::size_t next_pair = 0;
  std::size_t next_involution = 0;
  for (std::int64_t j = 1; j <= class_count; ++j) {
    const auto size = k - q - j;
    std::vector<GroupElement> cls;
    for (std::int64_t p = 0; p < size / 2; ++p) {
      cls.push_back(pairs.at(next_pair).first);
      cls.push_back(pairs.at(next_pair).second);
      ++next_pair;
    }
    if (size % 2) cls.push_back(involutions.at(next_involution++));
    classes.emplace(static_cast<Colour>(q + j), GroupSubset(spec, std::move(cls)));
  }
  return ColouredConnectingSet(spec, std::move(classes), static_cast<Colour>(k));
}

EdgeColouredGraph build_K(std::int64_t k, std::int64_t q, bool relaxed) {
  const auto ccs = k_connecting_set(k, q, relaxed);
  auto all = GroupSubset(ccs.spec());
  for (const auto& [colour, cls] : ccs.classes()) all = set_union(all, cls);
  expect(is_sum_free(all), "K connecting set is not sum-free");

  auto graph = cayley_build(ccs);
  for (const auto& p : all_profiles(graph)) {
    for (std::int64_t c = 1; c <= k; ++c) {
      const auto want = (c > q && c < k) ? k - c : 0;
      const auto idx = static_cast<std::size_t>(c - 1);
      expect(p.deg[idx] == want && p.e_closed[idx] == want,
             "K vertex " + std::to_string(p.vertex) + " has the wrong colour-" +
                 std::to_string(c) + " counts");
    }
  }
  return graph;
}

MatchingColourPlan GapsPlan::matching_plan() const {
  std::vector<std::pair<Colour, std::int64_t>> counts;
  for (std::int64_t j = 1; j <= k - q; ++j) counts.emplace_back(static_cast<Colour>(q + j), t + j - 1);
  return MatchingColourPlan::from_counts(counts, static_cast<Colour>(k));
}

MonotonicityCertificate certify_chain(const GapsPlan& plan, std::int64_t t) {
  MonotonicityCertificate c;
  c.t = t;
  for (std::size_t j = 0; j < plan.predicted_deg.size(); ++j) {
    c.deg.push_back(plan.predicted_deg[j].at(t));
    c.e.push_back(plan.predicted_e[j].at(t));
  }
  for (std::size_t j = 0; j + 1 < c.deg.size(); ++j) {
    if (!c.first_deg_violation && !(c.deg[j] < c.deg[j + 1])) {
      c.first_deg_violation = static_cast<std::int64_t>(j + 1);
    }
    if (!c.first_e_violation && !(c.e[j] > c.e[j + 1])) {
      c.first_e_violation = static_cast<std::int64_t>(j + 1);
    }
  }
  c.deg_increasing = !c.first_deg_violation;
  c.e_decreasing = !c.first_e_violation;
  return c;
}

GapsPlan plan_gaps(std::int64_t q, std::int64_t k, const std::vector<std::int64_t>& d,
                   const std::vector<std::int64_t>& a_low, const GapsOptions& options) {
  GapsPlan plan;
  plan.q = q;
  plan.k = k;
  plan.d = d;
  plan.a_low = a_low;
  plan.relaxed = options.relaxed;

  const auto k_set = k_connecting_set(k, q, options.relaxed);  // enforces the q/k gate
  if (static_cast<std::int64_t>(d.size()) != q || static_cast<std::int64_t>(a_low.size()) != q) {
    throw PreconditionError("D and a_low must each have q = " + std::to_string(q) + " entries");
  }
  for (std::int64_t j = 0; j + 1 < q; ++j) {
    if (!(d[j] > d[j + 1])) throw PreconditionError("D must be strictly decreasing");
    if (!(a_low[j] < a_low[j + 1])) throw PreconditionError("a_low must be strictly increasing");
  }
  if (a_low.front() < 1) throw PreconditionError("a_1 must be >= 1");
  if (a_low.back() > d.back()) throw PreconditionError("a_q <= D_q required");

  const auto c = choose2(k - q);
  for (std::int64_t j = 0; j + 1 < q; ++j) plan.xi = std::max(plan.xi, d[j] - d[j + 1]);
  plan.mu = c + std::accumulate(a_low.begin(), a_low.end(), std::int64_t{0});
  plan.gap_lhs = d.back() * (k - 4 * q);
  plan.gap_rhs = 1 + plan.xi * q * (q - 1) + 5 * c;
  if (!options.relaxed && plan.gap_slack() <= 0) {
    throw PreconditionError("gap condition D_q(k-4q) > 1 + xi*q(q-1) + 5*C(k-q,2) fails: " +
                            std::to_string(plan.gap_lhs) + " <= " + std::to_string(plan.gap_rhs) +
                            " (slack " + std::to_string(plan.gap_slack()) + ")");
  }

  // D_i for i = 1..k: F's values, then k - i from K, with D_k = 0.
  std::vector<std::int64_t> d_full(d);
  for (auto i = q + 1; i <= k; ++i) d_full.push_back(k - i);
  plan.sum_d = std::accumulate(d_full.begin(), d_full.end(), std::int64_t{0});
  std::int64_t min_gap = -1;
  for (auto i = q + 1; i < k; ++i) {
    auto gap = d_full[i - 1] - d_full[i];
    min_gap = min_gap < 0 ? gap : std::min(min_gap, gap);
  }
  const auto growth = 1 + plan.mu + 2 * plan.sum_d;
  const auto denom = (k - q) * min_gap;
  plan.t_min = std::max<std::int64_t>(1, (growth + denom - 1) / denom);

  if (options.t_override) {
    if (*options.t_override < 1) throw PreconditionError("t must be >= 1");
    if (!options.relaxed && *options.t_override < plan.t_min) {
      throw PreconditionError("t = " + std::to_string(*options.t_override) +
                              " is below the minimum t = " + std::to_string(plan.t_min));
    }
    plan.t = *options.t_override;
  } else {
    plan.t = plan.t_min;
  }
  plan.rho = (k - q) * plan.t + c;
  const auto kn = plan.rho + 1;
  const auto kd = (k - q) * plan.t;
  const auto g = std::gcd(kn, kd);
  plan.kappa_num = kn / g;
  plan.kappa_den = kd / g;

  for (std::int64_t j = 1; j <= k - q - 1; ++j) plan.s_sizes.push_back(k - q - j);

  // deg_j = a_j + [j>q](t + j - q - 1)(1 + μ)
  // e_j   = D_j(ρ + 1) + [j>q](t + j - q - 1)(1 + μ + 2ΣD),  ρ + 1 = (k-q)t + C + 1
  for (std::int64_t j = 1; j <= k; ++j) {
    const auto a_j = j <= q ? a_low[j - 1] : k - j;
    const auto d_j = d_full[j - 1];
    AffineInt deg{0, a_j};
    AffineInt e{d_j * (k - q), d_j * (c + 1)};
    if (j > q) {
      deg.slope += 1 + plan.mu;
      deg.intercept += (j - q - 1) * (1 + plan.mu);
      e.slope += growth;
      e.intercept += (j - q - 1) * growth;
    }
    plan.predicted_deg.push_back(deg);
    plan.predicted_e.push_back(e);
  }

  plan.k_order = k_set.spec().order();
  plan.order_per_f_vertex = static_cast<std::uint64_t>(2 * plan.rho) * plan.k_order;
  if (options.f_order) plan.materialized_order_estimate = *options.f_order * plan.order_per_f_vertex;

  plan.certificate = certify_chain(plan, plan.t);
  if (!options.relaxed && !plan.certificate.holds()) {
    const bool deg_bad = !plan.certificate.deg_increasing;
    const auto j = deg_bad ? *plan.certificate.first_deg_violation : *plan.certificate.first_e_violation;
    throw PreconditionError(std::string("predicted ") + (deg_bad ? "degree" : "closed-count") +
                            " chain is not strictly monotone between colours " +
                            std::to_string(j) + " and " + std::to_string(j + 1) + " at t = " +
                            std::to_string(plan.t));
  }
  return plan;
}

GapsResult build_gaps(const GapsPlan& plan, const EdgeColouredGraph& f,
                      std::uint64_t materialize_limit) {
  const auto k = static_cast<Colour>(plan.k);
  if (f.colour_count() != plan.q) {
    throw PreconditionError("F must be coloured with exactly q = " + std::to_string(plan.q) +
                            " colours");
  }
  const auto f_profiles = all_profiles(f);
  if (f_profiles.empty() || !profiles_uniform(f_profiles)) {
    throw PreconditionError("F profile mismatch: F is not colour-uniform");
  }
  if (f_profiles.front().deg != plan.a_low || f_profiles.front().e_closed != plan.d) {
    throw PreconditionError("F profile mismatch: colour degrees / closed counts differ from plan");
  }

  const auto fw = widen_palette(f, k);
  GapsResult out;
  out.k_graph = build_K(plan.k, plan.q, plan.relaxed);
  out.m_graph = cartesian_product(fw, out.k_graph);

  const auto m_expected = predict_cartesian_profile(vertex_profile(fw, 0), vertex_profile(out.k_graph, 0));
  for (const auto& p : all_profiles(out.m_graph)) {
    expect(p.same_counts(m_expected),
           "F □ K vertex " + std::to_string(p.vertex) + " disagrees with the Cartesian formulas");
  }

  out.h_graph = bipartite_matching_graph(plan.matching_plan());
  const auto h_profiles = all_profiles(out.h_graph);
  expect(profiles_uniform(h_profiles), "H is not colour-uniform");

  out.predicted = predict_strong_profile(h_profiles.front(), m_expected);
  for (std::size_t j = 0; j < out.predicted.deg.size(); ++j) {
    expect(out.predicted.deg[j] == plan.predicted_deg[j].at(plan.t) &&
               out.predicted.e_closed[j] == plan.predicted_e[j].at(plan.t),
           "strong-product profile disagrees with the plan's predicted chain at colour " +
               std::to_string(j + 1));
  }
  out.certificate = certify_chain(plan, plan.t);
  out.order = static_cast<std::uint64_t>(out.h_graph.vertex_count()) *
              static_cast<std::uint64_t>(out.m_graph.vertex_count());

  if (out.order <= materialize_limit) {
    auto g = strong_product(out.h_graph, out.m_graph);
    for (const auto& p : all_profiles(g)) {
      expect(p.same_counts(out.predicted),
             "H ⊠ (F □ K) vertex " + std::to_string(p.vertex) + " disagrees with the prediction");
    }
    out.report = verify_flip(g);
    if (!plan.relaxed) expect(out.report->pass, "materialised graph fails flip verification");
    out.g_graph = std::move(g);
    out.materialized = true;
  }
  return out;
}

EdgeColouredGraph colour_merge(const EdgeColouredGraph& g,
                               const std::vector<std::vector<Colour>>& partition) {
  const auto k = g.colour_count();
  std::vector<Colour> part_of(static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t p = 0; p < partition.size(); ++p) {
    if (partition[p].empty()) throw PreconditionError("partition has an empty part");
    for (auto c : partition[p]) {
      if (c < 1 || c > k) throw PreconditionError("colour " + std::to_string(c) + " outside [1, k]");
      if (part_of[c]) throw PreconditionError("colour " + std::to_string(c) + " appears twice");
      part_of[c] = static_cast<Colour>(p + 1);
    }
  }
  for (Colour c = 1; c <= k; ++c) {
    if (!part_of[c]) throw PreconditionError("colour " + std::to_string(c) + " is not covered");
  }

  std::vector<ColouredEdge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, part_of[e.colour]});
  EdgeColouredGraph merged(g.vertex_count(), static_cast<Colour>(partition.size()), std::move(edges));

  const auto before = all_profiles(g);
  const auto after = all_profiles(merged);
  for (std::size_t v = 0; v < before.size(); ++v) {
    std::vector<std::int64_t> deg(partition.size(), 0);
    std::vector<std::int64_t> e(partition.size(), 0);
    for (Colour c = 1; c <= k; ++c) {
      deg[part_of[c] - 1] += before[v].deg[c - 1];
      e[part_of[c] - 1] += before[v].e_closed[c - 1];
    }
    expect(deg == after[v].deg && e == after[v].e_closed,
           "merged profile is not additive at vertex " + std::to_string(v));
  }
  return merged;
}

FlippingIntervalAdvice flipping_interval_advice(std::int64_t b, std::int64_t q) {
  FlippingIntervalAdvice advice;
  advice.b_large_enough = b >= 101;
  // ⌊(b² - 10 b^{3/2}) / 4⌋ >= q - 1  <=>  b² - 4(q-1) >= 10 b sqrt(b)
  const __int128 lhs = static_cast<__int128>(b) * b - 4 * static_cast<__int128>(q - 1);
  advice.floor_condition =
      b >= 0 && lhs >= 0 && lhs * lhs >= static_cast<__int128>(100) * b * b * b;
  return advice;
}

}  // namespace flipforge
