#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ilt/graph.hpp"
#include "ilt/rational.hpp"

namespace ilt {

/// Sum of pairwise distances over unordered pairs, exact, via all-pairs BFS.
/// Node cap for the all-pairs BFS metrics (Wiener index, diameter).
inline constexpr std::size_t kBfsBudget = 4096;

inline Int wiener_index(const Graph& g) {
  std::size_t n = g.node_count();
  Int total = 0;
  for (NodeId s = 0; s < n; ++s) {
    auto dist = bfs_distances(g, s);
    std::uint64_t row = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (dist[v] == kUnreachable) throw std::invalid_argument("wiener_index: graph disconnected");
      row += dist[v];
    }
    total += row;
  }
  return total / 2;
}

struct SeedStats {
  Int w0;  // Wiener index of G_0
  std::size_t e0;
  std::size_t n0;
};

/// W(G_t) = 4^t W_0 + (4^t - 3^t)(e_0 + n_0), exact.
inline Int predicted_wiener(const SeedStats& s, unsigned t) {
  Int p4 = ipow(4, t), p3 = ipow(3, t);
  return p4 * s.w0 + (p4 - p3) * (Int(s.e0) + Int(s.n0));
}

/// The displayed average-distance formula uses the ordered-pairs denominator
/// n_t^2 - n_t; the definitional one uses C(n_t, 2). Both are reported.
inline Rational average_distance_ordered(const Int& wiener, const Int& n) {
  return Rational(wiener, n * n - n);
}

inline Rational average_distance_unordered(const Int& wiener, const Int& n) {
  return Rational(2 * wiener, n * n - n);
}

struct UltimateAverage {
  Rational ul;                 // (W_0 + e_0 + n_0) / n_0^2
  bool decreases_from_start;   // UL <= L(G_0) iff W_0 >= (n_0 - 1)(e_0 + n_0)
};

inline UltimateAverage ultimate_average_distance(const SeedStats& s) {
  UltimateAverage u;
  u.ul = Rational(s.w0 + Int(s.e0) + Int(s.n0), Int(s.n0) * Int(s.n0));
  u.decreases_from_start = s.w0 >= Int(s.n0 - 1) * (Int(s.e0) + Int(s.n0));
  return u;
}

inline std::uint32_t diameter(const Graph& g) {
  std::size_t n = g.node_count();
  std::uint32_t diam = 0;
  for (NodeId s = 0; s < n; ++s) {
    auto dist = bfs_distances(g, s);
    for (auto d : dist) {
      if (d == kUnreachable) throw std::invalid_argument("diameter: graph disconnected");
      diam = std::max(diam, d);
    }
  }
  return diam;
}

/// Number of edges inside the open neighborhood of v (= triangles through v).
inline std::uint64_t neighbourhood_edges(const Graph& g, NodeId v) {
  auto nb = g.neighbors(v);
  std::uint64_t count = 0;
  for (NodeId u : nb)
    for (NodeId w : g.neighbors(u))
      if (w > u && std::binary_search(nb.begin(), nb.end(), w)) ++count;
  return count;
}

/// Per-node triangle counts: each edge intersected once from its
/// lower-degree endpoint (degrees in ILT graphs are highly skewed).
inline std::vector<std::uint64_t> triangle_counts(const Graph& g) {
  std::size_t n = g.node_count();
  std::vector<std::uint64_t> tri(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId w : g.neighbors(u)) {
      if (w <= u) continue;
      auto a = g.neighbors(u), b = g.neighbors(w);
      if (a.size() > b.size()) std::swap(a, b);
      for (NodeId x : a) {
        if (x <= w) continue;  // count each triangle once, at its top corner
        if (std::binary_search(b.begin(), b.end(), x)) {
          ++tri[u];
          ++tri[w];
          ++tri[x];
        }
      }
    }
  }
  return tri;
}

struct ClusteringResult {
  Rational mean;                  // C(G) = sum c(x) / n
  std::vector<Rational> per_node; // c(x), zero when deg <= 1
};

inline ClusteringResult clustering_coefficient(const Graph& g) {
  std::size_t n = g.node_count();
  ClusteringResult r;
  r.per_node.reserve(n);
  auto tri = triangle_counts(g);
  Rational sum;
  for (NodeId v = 0; v < n; ++v) {
    std::uint64_t d = g.degree(v);
    if (d <= 1) {
      r.per_node.emplace_back(0);
      continue;
    }
    Rational c(Int(tri[v]), Int(d) * Int(d - 1) / 2);
    sum += c;
    r.per_node.push_back(c);
  }
  r.mean = sum / Rational(Int(n));
  return r;
}

struct DegreeHistogram {
  std::map<std::uint64_t, Int> entries;  // degree -> node count
  Int total;
};

inline DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  h.total = Int(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) ++h.entries[g.degree(v)];
  return h;
}

/// Exact degree histogram of G_t without materializing the graph: iterate
/// the value-count map {d -> c} => {2d+1 -> +c, d+1 -> +c} t times.
inline DegreeHistogram degree_distribution_analytic(const Graph& g0, unsigned t,
                                                    std::size_t max_entries = std::size_t{1} << 24) {
  DegreeHistogram h = degree_histogram(g0);
  for (unsigned s = 0; s < t; ++s) {
    std::map<std::uint64_t, Int> next;
    for (const auto& [d, c] : h.entries) {
      next[2 * d + 1] += c;
      next[d + 1] += c;
    }
    if (next.size() > max_entries)
      throw std::length_error("degree_distribution_analytic: DP table exceeds budget");
    h.entries = std::move(next);
    h.total *= 2;
  }
  return h;
}

/// Count of nodes with degree >= j.
inline Int tail_count(const DegreeHistogram& h, std::uint64_t j) {
  Int c = 0;
  for (auto it = h.entries.lower_bound(j); it != h.entries.end(); ++it) c += it->second;
  return c;
}

/// Least-squares slope of log e against log n.
inline double densification_fit(const std::vector<std::pair<double, double>>& points_n_e) {
  if (points_n_e.size() < 3)
    throw std::invalid_argument("densification_fit: need at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  auto m = static_cast<double>(points_n_e.size());
  for (auto [n, e] : points_n_e) {
    if (!(n > 0) || !(e > 0)) throw std::invalid_argument("densification_fit: points must be positive");
    double x = std::log(n), y = std::log(e);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace ilt
