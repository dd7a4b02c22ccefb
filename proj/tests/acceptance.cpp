// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact integer equalities; the only tolerances are the wall-clock limits.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "flipforge/analysis.hpp"
#include "flipforge/error.hpp"
#include "flipforge/pipelines.hpp"
#include "oracles.hpp"

using namespace flipforge;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& ex) {
    o = {false, std::string("exception: ") + ex.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (pass ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << o.detail << " (" << secs
       << "s, limit " << limit_seconds << "s" << (in_time ? "" : ", over time") << ")";
  std::cout << line.str() << std::endl;
}

std::string vec(const std::vector<std::int64_t>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

// deg/e chain of H ⊠ (F □ K) evaluated from the displayed formulas.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> chain_at(
    std::int64_t q, std::int64_t k, const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& a,
    std::int64_t t) {
  std::vector<std::int64_t> deg, e;
  std::int64_t mu = choose2(k - q), sum_d = 0;
  for (std::int64_t i = 0; i < q; ++i) mu += a[i];
  auto dj = [&](std::int64_t j) { return j <= q ? d[j - 1] : (j < k ? k - j : 0); };
  auto aj = [&](std::int64_t j) { return j <= q ? a[j - 1] : (j < k ? k - j : 0); };
  for (std::int64_t j = 1; j <= k; ++j) sum_d += dj(j);
  const auto rho = (k - q) * t + choose2(k - q);
  for (std::int64_t j = 1; j <= k; ++j) {
    const std::int64_t m = j > q ? t + j - q - 1 : 0;
    deg.push_back(aj(j) + m * (1 + mu));
    e.push_back(dj(j) * (rho + 1) + m * (1 + mu + 2 * sum_d));
  }
  return {deg, e};
}

bool strictly_increasing(const std::vector<std::int64_t>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i - 1] >= xs[i]) return false;
  return true;
}

bool strictly_decreasing(const std::vector<std::int64_t>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i - 1] <= xs[i]) return false;
  return true;
}

std::int64_t expected_order(std::int64_t b, std::int64_t r) {
  const auto s = (b + 2) / 6;
  const std::int64_t lambda = std::max<std::int64_t>(1, b % 2 + r % 2);
  return 8 * lambda * (2 + r / 2 + (b + 2) / 2 - 2 * s);
}

Outcome sweep() {
  int graphs = 0;
  for (std::int64_t b = 4; b <= 14; ++b) {
    const auto s = (b + 2) / 6;
    for (std::int64_t r = b + 1; r < b + 2 * s * s; ++r) {
      const auto built = build_br(plan_br(b, r));
      const auto& g = built.graph;
      std::ostringstream where;
      where << "(b,r)=(" << b << "," << r << ")";
      if (g.vertex_count() != expected_order(b, r)) return {false, where.str() + " wrong order"};
      if (!built.report.pass) return {false, where.str() + " flip verification failed"};
      const auto m = oracle::to_matrix(g);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto p = oracle::profile(m, 2, v);
        if (p.deg != std::vector<std::int64_t>{b, r}) return {false, where.str() + " deg " + vec(p.deg)};
        if (!(p.e_closed[0] >= b + 2 * s * s && b + 2 * s * s > r && p.e_closed[1] == r)) {
          return {false, where.str() + " e " + vec(p.e_closed)};
        }
      }
      ++graphs;
    }
  }
  return {graphs == 41, std::to_string(graphs) + " graphs, every vertex checked by edge scan"};
}

Outcome landmark() {
  const auto built = build_br(plan_br(6, 7));
  return {built.graph.vertex_count() == 56 && built.report.pass,
          "order " + std::to_string(built.graph.vertex_count()) + ", e=" + vec(*built.report.uniform_e)};
}

Outcome products() {
  std::mt19937_64 rng(20240601);
  int pairs = 0;
  long long vertices = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int k = 1 + trial % 3;
    const auto g = oracle::random_graph(rng, 8, k);
    const auto h = oracle::random_graph(rng, 8, k);
    const auto sp = strong_product(g, h);
    const auto cp = cartesian_product(g, h);
    const auto mg = oracle::to_matrix(g), mh = oracle::to_matrix(h);
    if (oracle::to_matrix(sp) != oracle::strong_matrix(mg, mh)) return {false, "strong product edge set differs"};
    if (oracle::to_matrix(cp) != oracle::cartesian_matrix(mg, mh)) return {false, "cartesian edge set differs"};
    const auto ms = oracle::to_matrix(sp), mc = oracle::to_matrix(cp);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = 0; v < h.vertex_count(); ++v) {
        const auto pg = oracle::profile(mg, k, u), ph = oracle::profile(mh, k, v);
        const auto x = product_vertex(u, v, h.vertex_count());
        if (!(oracle::profile(ms, k, x) == oracle::strong_formula(pg, ph))) return {false, "strong counts differ"};
        if (!(oracle::profile(mc, k, x) == oracle::cartesian_formula(pg, ph))) {
          return {false, "cartesian counts differ"};
        }
        const auto lib = predict_strong_profile(vertex_profile(g, u), vertex_profile(h, v));
        const auto want = oracle::strong_formula(pg, ph);
        if (lib.deg != want.deg || lib.e_closed != want.e_closed) return {false, "library prediction differs"};
        ++vertices;
      }
    }
    ++pairs;
  }
  return {pairs >= 100, std::to_string(pairs) + " pairs, " + std::to_string(vertices) +
                            " product vertices, strong and cartesian"};
}

Outcome packing() {
  std::mt19937_64 rng(77);
  int pairs = 0, hypothesis = 0;
  while (pairs < 120) {
    std::uniform_int_distribution<std::int64_t> nd(5, 60);
    const auto n = nd(rng);
    oracle::Residues b, r;
    std::bernoulli_distribution coin(0.3);
    for (std::int64_t x = 1; x <= n / 2; ++x) {
      if (!coin(rng)) continue;
      auto& target = coin(rng) ? r : b;
      target.insert(x);
      target.insert(oracle::mod(-x, n));
    }
    const auto spec = GroupSpec::cyclic(n);
    const auto bs = GroupSubset::of_residues(spec, std::vector<std::int64_t>(b.begin(), b.end()));
    const auto rs = GroupSubset::of_residues(spec, std::vector<std::int64_t>(r.begin(), r.end()));
    const auto packed = oracle::cayley_matrix(n, {{1, b}, {2, r}});
    const auto blue = oracle::cayley_matrix(n, {{1, b}});
    const auto red = oracle::cayley_matrix(n, {{2, r}});
    auto check_at = [&](std::int64_t v) -> bool {
      const auto rep = packing_delta(spec, bs, rs, static_cast<Vertex>(v));
      const auto pp = oracle::profile(packed, 2, static_cast<int>(v));
      const auto e1g = oracle::profile(blue, 2, static_cast<int>(v)).e_closed[0];
      const auto e2h = oracle::profile(red, 2, static_cast<int>(v)).e_closed[1];
      auto inside = [&](const oracle::Matrix& m, const oracle::Matrix& nb, int colour) {
        std::vector<int> s{static_cast<int>(v)};
        for (int y = 0; y < n; ++y)
          if (nb[v][y]) s.push_back(y);
        std::int64_t c = 0;
        for (auto x : s)
          for (auto y : s)
            if (x < y && m[x][y] == colour) ++c;
        return c;
      };
      const auto red_on_blue = inside(red, blue, 2);
      const auto blue_on_red = inside(blue, red, 1);
      const auto lhs = pp.e_closed[0] - pp.e_closed[1];
      const auto rhs = (e1g - e2h) + (red_on_blue - blue_on_red);
      return lhs == rhs && rep.lhs == lhs && rep.rhs == rhs && rep.e1_blue == e1g && rep.e2_red == e2h &&
             rep.e2_red_on_blue == red_on_blue && rep.e1_blue_on_red == blue_on_red;
    };
    if (!check_at(0)) return {false, "identity fails at 0 for n=" + std::to_string(n)};
    std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
    for (int i = 0; i < 5; ++i) {
      if (!check_at(pick(rng))) return {false, "identity fails off 0 for n=" + std::to_string(n)};
    }
    const bool hyp = oracle::disjoint(oracle::plus(r, b, n), r) &&
                     oracle::profile(blue, 2, 0).e_closed[0] > oracle::profile(red, 2, 0).e_closed[1];
    if (hyp) {
      ++hypothesis;
      for (int v = 0; v < n; ++v) {
        const auto p = oracle::profile(packed, 2, v);
        if (!(p.e_closed[0] > p.e_closed[1])) return {false, "e1 <= e2 under the hypothesis, n=" + std::to_string(n)};
      }
    }
    ++pairs;
  }
  return {pairs >= 100 && hypothesis > 0, std::to_string(pairs) + " pairs, 6 vertices each; hypothesis held in " +
                                              std::to_string(hypothesis) + ", all with e1 > e2 everywhere"};
}

Outcome interval_sumset() {
  std::mt19937_64 rng(5150);
  int configs = 0, with_hyp = 0, empty_n = 0;
  for (std::int64_t n = 16; n <= 400; n += 16) {
    const std::int64_t lo = n / 8 + 1, hi = (n - 1) / 4;
    if (hi - lo + 1 < 2) {
      ++empty_n;  // fewer than two residues strictly inside (n/8, n/4)
      continue;
    }
    std::uniform_int_distribution<std::int64_t> split(lo, hi - 1);
    for (int trial = 0; trial < 20; ++trial) {
      const auto cut = split(rng);
      std::uniform_int_distribution<std::int64_t> a_pick(lo, cut), b_pick(cut + 1, hi);
      std::int64_t a_lo = a_pick(rng), a_hi = a_pick(rng), b_lo = b_pick(rng), b_hi = b_pick(rng);
      if (a_lo > a_hi) std::swap(a_lo, a_hi);
      if (b_lo > b_hi) std::swap(b_lo, b_hi);
      // half the draws push B1 above 3n/16 when B0 allows it
      std::int64_t c_floor = b_lo;
      const std::int64_t three16 = (3 * n + 15) / 16;
      if (trial % 2 == 0 && three16 <= b_hi) c_floor = std::max(b_lo, three16);
      std::uniform_int_distribution<std::int64_t> c_pick(c_floor, b_hi);
      std::int64_t c_lo = c_pick(rng), c_hi = c_pick(rng);
      if (c_lo > c_hi) std::swap(c_lo, c_hi);

      const auto rep = interval_sumset_check(n, {n, a_lo, a_hi}, {n, b_lo, b_hi}, {n, c_lo, c_hi});
      const auto a0 = oracle::range(a_lo, a_hi);
      const auto a = oracle::unite(a0, oracle::neg(a0, n));
      const auto b0 = oracle::range(b_lo, b_hi);
      const auto b1 = oracle::range(c_lo, c_hi);
      const auto two_b1 = oracle::plus(b1, b1, n);
      const auto b = oracle::unite(oracle::unite(b0, oracle::neg(b0, n)),
                                   oracle::unite(two_b1, oracle::neg(two_b1, n)));
      const oracle::Residues half{n / 2};
      const bool c1 = oracle::disjoint(oracle::plus(a, b, n), a);
      const bool c2 = oracle::disjoint(oracle::plus(a, half, n), a);
      const bool hyp = 16 * c_lo >= 3 * n;
      const bool c3 = !hyp || oracle::disjoint(oracle::plus(half, b, n), a);
      std::ostringstream where;
      where << "n=" << n << " A0=[" << a_lo << "," << a_hi << "] B0=[" << b_lo << "," << b_hi << "] B1=[" << c_lo
            << "," << c_hi << "]";
      if (!(c1 && c2 && c3)) return {false, "conclusion fails at " + where.str()};
      if (rep.sum_avoids_a != c1 || rep.involution_avoids_a != c2 || rep.b1_hypothesis != hyp ||
          (hyp && rep.involution_b_avoids_a != c3) || !rep.conclusions_hold()) {
        return {false, "library report disagrees at " + where.str()};
      }
      ++configs;
      with_hyp += hyp;
    }
  }
  return {configs > 0 && with_hyp > 0,
          std::to_string(configs) + " configurations over n=16..400 step 16 (" + std::to_string(with_hyp) +
              " with min(B1) >= 3n/16; " + std::to_string(empty_n) + " n with no valid configuration)"};
}

Outcome bounds() {
  const std::vector<std::int64_t> bs{11, 25};
  const auto rows = bounds_table(bs, RangePolicy::Common);
  std::vector<std::int64_t> r11, r25;
  for (const auto& row : rows) {
    if (!row.old_bound || !row.new_bound || !(*row.new_bound < *row.old_bound)) {
      return {false, "new >= old at b=" + std::to_string(row.b) + " r=" + std::to_string(row.r)};
    }
    (row.b == 11 ? r11 : r25).push_back(row.r);
  }
  bool ranges = r11.size() == 7 && r11.front() == 12 && r11.back() == 18 && r25.size() == 31 &&
                r25.front() == 26 && r25.back() == 56;
  const bool spots = old_bound(6, 7) == 80 && new_bound(6, 7) == 56;
  return {ranges && spots, std::to_string(rows.size()) + " common rows, new < old on all; old(6,7)=" +
                               std::to_string(old_bound(6, 7)) + " new(6,7)=" + std::to_string(new_bound(6, 7))};
}

Outcome gaps_plan_full_scale() {
  const auto f = build_br(plan_br(42, 135));
  const auto d = *f.report.uniform_e;
  const std::vector<std::int64_t> a{42, 135};
  try {
    const auto plan = plan_gaps(2, 9, d, a);
    for (std::int64_t t = plan.t; t <= plan.t + 2; ++t) {
      const auto [deg, e] = chain_at(2, 9, d, a, t);
      const auto cert = certify_chain(plan, t);
      if (cert.deg != deg || cert.e != e) return {false, "plan chain differs from direct evaluation"};
      if (!strictly_increasing(deg) || !strictly_decreasing(e)) return {false, "chain not monotone"};
      if (!(chain_at(2, 9, d, a, t + 1).first.back() > deg.back())) return {false, "a_k does not grow"};
    }
    return {true, "t=" + std::to_string(plan.t) + " rho=" + std::to_string(plan.rho)};
  } catch (const PreconditionError& ex) {
    return {false, "F profile e=" + vec(d) + "; " + ex.what()};
  }
}

Outcome gaps_small_materialized() {
  const auto f = build_br(plan_br(4, 5));
  std::string detail;
  for (std::int64_t t = 1; t <= 2; ++t) {
    GapsOptions options;
    options.t_override = t;
    options.relaxed = true;
    options.f_order = 40;
    const auto plan = plan_gaps(2, 4, *f.report.uniform_e, {4, 5}, options);
    const auto result = build_gaps(plan, f.graph);
    if (!result.g_graph) return {false, "not materialised at t=" + std::to_string(t)};
    const auto mh = oracle::to_matrix(result.h_graph);
    const auto mm = oracle::to_matrix(result.m_graph);
    const auto mg = oracle::to_matrix(*result.g_graph);
    if (mg != oracle::strong_matrix(mh, mm)) return {false, "G differs from H ⊠ M"};
    const auto m_profile = oracle::profile(mm, 4, 0);
    for (int v = 0; v < static_cast<int>(mm.size()); ++v) {
      if (!(oracle::profile(mm, 4, v) == m_profile)) return {false, "F □ K not uniform"};
    }
    const auto h_profile = oracle::profile(mh, 4, 0);
    const auto want = oracle::strong_formula(h_profile, m_profile);
    for (int v = 0; v < static_cast<int>(mg.size()); ++v) {
      if (!(oracle::profile(mg, 4, v) == want)) return {false, "vertex " + std::to_string(v) + " differs"};
    }
    if (result.predicted.deg != want.deg || result.predicted.e_closed != want.e_closed) {
      return {false, "library prediction differs"};
    }
    detail += (t > 1 ? "; " : "") + std::string("t=") + std::to_string(t) + " |G|=" + std::to_string(mg.size()) +
              " deg=" + vec(want.deg) + " e=" + vec(want.e_closed);
  }
  return {true, detail};
}

Outcome k_certification() {
  const auto ccs = k_connecting_set(9, 2);
  const auto& factors = ccs.spec().factors();
  // exhaustive sum-freeness with component-wise arithmetic
  std::vector<std::vector<std::int64_t>> all;
  std::vector<std::int64_t> sizes;
  for (const auto& [c, s] : ccs.classes()) {
    sizes.push_back(static_cast<std::int64_t>(s.size()));
    for (const auto& x : s.elements()) all.push_back(x.residues);
  }
  std::set<std::vector<std::int64_t>> members(all.begin(), all.end());
  for (const auto& x : all) {
    for (const auto& y : all) {
      std::vector<std::int64_t> z(x.size());
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = oracle::mod(x[i] + y[i], factors[i]);
      if (members.count(z)) return {false, "not sum-free"};
    }
  }
  if (sizes != std::vector<std::int64_t>{6, 5, 4, 3, 2, 1}) return {false, "class sizes " + vec(sizes)};
  const auto k = build_K(9, 2);
  const auto m = oracle::to_matrix(k);
  for (int v = 0; v < k.vertex_count(); ++v) {
    const auto p = oracle::profile(m, 9, v);
    for (int j = 1; j <= 6; ++j) {
      if (p.deg[1 + j] != 7 - j || p.e_closed[1 + j] != 7 - j) return {false, "vertex " + std::to_string(v)};
    }
    if (p.deg[0] || p.deg[1] || p.deg[8]) return {false, "stray colour at vertex " + std::to_string(v)};
  }
  return {true, "group " + ccs.spec().to_string() + " order " + std::to_string(ccs.spec().order()) + ", " +
                    std::to_string(all.size() * all.size()) + " sums checked, sizes " + vec(sizes)};
}

Outcome merge() {
  std::mt19937_64 rng(31337);
  int graphs = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto g = oracle::random_graph(rng, 10, 4, 0.5);
    const std::vector<std::vector<Colour>> partition{{2, 4}, {1}, {3}};
    const auto h = colour_merge(g, partition);
    const auto mg = oracle::to_matrix(g), mh = oracle::to_matrix(h);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto before = oracle::profile(mg, 4, v), after = oracle::profile(mh, 3, v);
      for (std::size_t p = 0; p < partition.size(); ++p) {
        std::int64_t deg = 0, e = 0;
        for (auto c : partition[p]) {
          deg += before.deg[c - 1];
          e += before.e_closed[c - 1];
        }
        if (after.deg[p] != deg || after.e_closed[p] != e) return {false, "additivity fails"};
      }
    }
    ++graphs;
  }
  return {graphs >= 100, std::to_string(graphs) + " random graphs, partition {2,4},{1},{3}"};
}

Outcome qk() {
  const auto a = qk_bounds(9), b = qk_bounds(6), c = qk_bounds(8);
  const bool ok = a.lower == 2 && a.upper_exclusive == 3 && b.lower == 1 && b.upper_exclusive == 2 &&
                  c.lower == 1 && c.upper_exclusive == 4;
  auto show = [](const QkBounds& x) { return "(" + std::to_string(x.lower) + "," + std::to_string(x.upper_exclusive) + ")"; };
  return {ok, "q(9) in " + show(a) + ", q(6) in " + show(b) + ", q(8) in " + show(c)};
}

Outcome search() {
  std::string detail;
  bool ok = true;
  for (auto [n, want] : {std::pair<std::int64_t, std::size_t>{7, 2}, {8, 4}}) {
    const auto r = search_sumfree_inverse_closed(GroupSpec::cyclic(n), SearchMode::Exhaustive);
    const auto brute = oracle::max_sumfree_inverse_closed(n);
    ok = ok && r.is_maximum && r.best.size() == want && brute == want && is_sum_free(r.best) &&
         is_inverse_closed(r.best);
    detail += "Z_" + std::to_string(n) + ": " + std::to_string(r.best.size()) + " (enumeration " +
              std::to_string(brute) + ") ";
  }
  return {ok, detail};
}

void supplementary() {
  try {
    const auto f = build_br(plan_br(42, 135));
    const auto plan = plan_gaps(2, 11, *f.report.uniform_e, {42, 135});
    std::cout << "INFO [7-alt] q=2, k=11 with the same F: slack " << plan.gap_slack() << ", t=" << plan.t
              << ", chain certified " << (plan.certificate.holds() ? "yes" : "no") << std::endl;
  } catch (const std::exception& ex) {
    std::cout << "INFO [7-alt] q=2, k=11 with the same F: " << ex.what() << std::endl;
  }
}

}  // namespace

int main() {
  criterion("1", "(b,r) constructive sweep, 4 <= b <= 14", 30, sweep);
  criterion("2", "(6,7) graph order", 1, landmark);
  criterion("3", "product counting formulas vs brute force", 10, products);
  criterion("4", "packing identity and dominance", 10, packing);
  criterion("5", "interval sumset conclusions", 10, interval_sumset);
  criterion("6", "bound comparison for b=11 and b=25", 1, bounds);
  criterion("7a", "gaps plan q=2, k=9, F=(42,135)", 60, gaps_plan_full_scale);
  criterion("7b", "materialised H ⊠ (F □ K) vs product formula", 60, gaps_small_materialized);
  criterion("8", "K connecting set for q=2, k=9", 5, k_certification);
  criterion("9", "colour merge additivity", 5, merge);
  criterion("10", "q(k) bounds", 1, qk);
  criterion("11", "sum-free inverse-closed maxima", 5, search);
  supplementary();
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
