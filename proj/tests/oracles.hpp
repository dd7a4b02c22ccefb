#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library's counting code; graphs are plain adjacency matrices.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "flipforge/ecgraph.hpp"

namespace oracle {

using flipforge::Colour;
using flipforge::ColouredEdge;
using flipforge::EdgeColouredGraph;
using flipforge::Vertex;

// colour[u][v], 0 = no edge
using Matrix = std::vector<std::vector<int>>;

struct Profile {
  std::vector<std::int64_t> deg;
  std::vector<std::int64_t> e_closed;
  std::vector<std::int64_t> e_open;
  bool operator==(const Profile&) const = default;
};

inline Matrix to_matrix(const EdgeColouredGraph& g) {
  Matrix m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = e.colour;
  return m;
}

inline Profile profile(const Matrix& m, int colours, int v) {
  const int n = static_cast<int>(m.size());
  Profile p{std::vector<std::int64_t>(colours, 0), std::vector<std::int64_t>(colours, 0),
            std::vector<std::int64_t>(colours, 0)};
  std::vector<bool> closed(n, false), open(n, false);
  closed[v] = true;
  for (int u = 0; u < n; ++u) {
    if (m[v][u]) {
      closed[u] = open[u] = true;
      p.deg[m[v][u] - 1]++;
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!m[x][y]) continue;
      if (closed[x] && closed[y]) p.e_closed[m[x][y] - 1]++;
      if (open[x] && open[y]) p.e_open[m[x][y] - 1]++;
    }
  }
  return p;
}

inline Profile profile(const EdgeColouredGraph& g, int v) {
  return profile(to_matrix(g), g.colour_count(), v);
}

inline EdgeColouredGraph random_graph(std::mt19937_64& rng, int max_vertices, int colours,
                                      double density = 0.5) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  std::uniform_int_distribution<int> col(1, colours);
  std::bernoulli_distribution keep(density);
  const int n = nv(rng);
  std::vector<ColouredEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (keep(rng)) edges.push_back({u, v, col(rng)});
    }
  }
  return EdgeColouredGraph(n, colours, edges);
}

// Strong product built from scratch: (u,v) ~ (u',v') when each coordinate is
// equal or adjacent and not both equal; the colour comes from the first
// factor whenever u != u'.
inline Matrix strong_matrix(const Matrix& g, const Matrix& h) {
  const int a = static_cast<int>(g.size()), b = static_cast<int>(h.size());
  Matrix m(a * b, std::vector<int>(a * b, 0));
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      for (int u2 = 0; u2 < a; ++u2)
        for (int v2 = 0; v2 < b; ++v2) {
          if (u == u2 && v == v2) continue;
          const bool cu = u == u2 || g[u][u2];
          const bool cv = v == v2 || h[v][v2];
          if (!cu || !cv) continue;
          m[u * b + v][u2 * b + v2] = u != u2 ? g[u][u2] : h[v][v2];
        }
  return m;
}

inline Matrix cartesian_matrix(const Matrix& g, const Matrix& h) {
  const int a = static_cast<int>(g.size()), b = static_cast<int>(h.size());
  Matrix m(a * b, std::vector<int>(a * b, 0));
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      for (int u2 = 0; u2 < a; ++u2)
        for (int v2 = 0; v2 < b; ++v2) {
          if (u == u2 && v != v2 && h[v][v2]) m[u * b + v][u2 * b + v2] = h[v][v2];
          if (v == v2 && u != u2 && g[u][u2]) m[u * b + v][u2 * b + v2] = g[u][u2];
        }
  return m;
}

inline std::int64_t sum(const std::vector<std::int64_t>& xs) {
  std::int64_t s = 0;
  for (auto x : xs) s += x;
  return s;
}

// Closed-form profile of the strong product vertex (u,v).
inline Profile strong_formula(const Profile& g, const Profile& h) {
  const auto k = g.deg.size();
  const auto deg_g = sum(g.deg), deg_h = sum(h.deg), e_h = sum(h.e_closed);
  Profile p{std::vector<std::int64_t>(k), std::vector<std::int64_t>(k), std::vector<std::int64_t>(k)};
  for (std::size_t j = 0; j < k; ++j) {
    p.deg[j] = h.deg[j] + g.deg[j] * (1 + deg_h);
    p.e_closed[j] = h.e_closed[j] * (1 + deg_g) + g.e_closed[j] * (1 + deg_h + 2 * e_h);
    p.e_open[j] = p.e_closed[j] - p.deg[j];
  }
  return p;
}

inline Profile cartesian_formula(const Profile& g, const Profile& h) {
  const auto k = g.deg.size();
  Profile p{std::vector<std::int64_t>(k), std::vector<std::int64_t>(k), std::vector<std::int64_t>(k)};
  for (std::size_t j = 0; j < k; ++j) {
    p.deg[j] = g.deg[j] + h.deg[j];
    p.e_closed[j] = g.e_closed[j] + h.e_closed[j];
    p.e_open[j] = g.e_open[j] + h.e_open[j];
  }
  return p;
}

// Z_n residue sets.
using Residues = std::set<std::int64_t>;

inline std::int64_t mod(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

inline Residues plus(const Residues& a, const Residues& b, std::int64_t n) {
  Residues out;
  for (auto x : a)
    for (auto y : b) out.insert(mod(x + y, n));
  return out;
}

inline Residues neg(const Residues& a, std::int64_t n) {
  Residues out;
  for (auto x : a) out.insert(mod(-x, n));
  return out;
}

inline Residues unite(Residues a, const Residues& b) {
  a.insert(b.begin(), b.end());
  return a;
}

inline bool disjoint(const Residues& a, const Residues& b) {
  for (auto x : a)
    if (b.count(x)) return false;
  return true;
}

inline Residues range(std::int64_t lo, std::int64_t hi) {
  Residues out;
  for (auto x = lo; x <= hi; ++x) out.insert(x);
  return out;
}

// Adjacency of a coloured Cayley graph on Z_n.
inline Matrix cayley_matrix(std::int64_t n, const std::vector<std::pair<int, Residues>>& classes) {
  Matrix m(n, std::vector<int>(n, 0));
  for (const auto& [colour, set] : classes)
    for (std::int64_t x = 0; x < n; ++x)
      for (auto s : set) m[x][mod(x + s, n)] = colour;
  return m;
}

// Largest sum-free inverse-closed subset of Z_n by plain subset enumeration.
inline std::size_t max_sumfree_inverse_closed(std::int64_t n) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    if (mask & 1ULL) continue;
    bool ok = true;
    std::size_t count = 0;
    for (std::int64_t x = 0; x < n && ok; ++x) {
      if (!(mask >> x & 1ULL)) continue;
      ++count;
      if (!(mask >> mod(-x, n) & 1ULL)) ok = false;
      for (std::int64_t y = 0; y < n && ok; ++y) {
        if ((mask >> y & 1ULL) && (mask >> mod(x + y, n) & 1ULL)) ok = false;
      }
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

}  // namespace oracle
