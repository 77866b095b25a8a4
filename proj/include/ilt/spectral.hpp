#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ilt/generator.hpp"
#include "ilt/graph.hpp"
#include "ilt/ilt_p.hpp"
#include "ilt/rng.hpp"

namespace ilt {

/// Dense symmetric matrix, row-major.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t dim() const { return n_; }
  double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  double max_asymmetry() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        m = std::max(m, std::abs(at(i, j) - at(j, i)));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
  }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

struct SymmetricSpectrum {
  std::vector<double> values;  // ascending
  double residual = 0.0;       // final off-diagonal Frobenius norm
};

inline constexpr std::size_t kDenseBudget = 2048;

/// Cyclic Jacobi rotation diagonalization. Sweeps until the off-diagonal
/// Frobenius norm drops below 1e-12 * ||M||_F.
inline SymmetricSpectrum symmetric_eigenvalues(SymMatrix m, unsigned max_sweeps = 64) {
  const std::size_t n = m.dim();
  if (n > kDenseBudget) throw ResourceError("symmetric_eigenvalues: matrix exceeds dense budget");
  if (m.max_asymmetry() > 1e-12)
    throw std::invalid_argument("symmetric_eigenvalues: matrix not symmetric");
  const double norm = m.frobenius_norm();
  const double target = 1e-12 * (norm > 0 ? norm : 1.0);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * m.at(i, j) * m.at(i, j);
    return std::sqrt(s);
  };

  double off = off_norm();
  unsigned sweep = 0;
  while (off > target) {
    if (sweep++ >= max_sweeps)
      throw std::runtime_error("symmetric_eigenvalues: no convergence after " +
                               std::to_string(max_sweeps) + " sweeps (off=" + std::to_string(off) +
                               ")");
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = m.at(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double app = m.at(p, p), aqq = m.at(q, q);
        m.at(p, p) = app - t * apq;
        m.at(q, q) = aqq + t * apq;
        m.at(p, q) = 0.0;
        m.at(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          double akp = m.at(k, p), akq = m.at(k, q);
          m.at(k, p) = c * akp - s * akq;
          m.at(p, k) = m.at(k, p);
          m.at(k, q) = s * akp + c * akq;
          m.at(q, k) = m.at(k, q);
        }
      }
    }
    off = off_norm();
  }

  SymmetricSpectrum spec;
  spec.residual = off;
  spec.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) spec.values.push_back(m.at(i, i));
  std::sort(spec.values.begin(), spec.values.end());
  return spec;
}

inline SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.neighbors(u)) m.at(u, v) = 1.0;
  return m;
}

/// L = I - D^{-1/2} A D^{-1/2}. Rejects isolated nodes.
inline SymMatrix normalized_laplacian(const Graph& g) {
  std::size_t n = g.node_count();
  std::vector<double> inv_sqrt_deg(n);
  for (NodeId v = 0; v < n; ++v) {
    auto d = g.degree(v);
    if (d == 0) throw std::invalid_argument("normalized_laplacian: isolated node " + std::to_string(v));
    inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(d));
  }
  SymMatrix m(n);
  for (NodeId u = 0; u < n; ++u) {
    m.at(u, u) = 1.0;
    for (NodeId v : g.neighbors(u)) m.at(u, v) = -inv_sqrt_deg[u] * inv_sqrt_deg[v];
  }
  return m;
}

struct GapReport {
  double lambda1 = 0.0;
  double lambda_max = 0.0;
  double lambda_gap = 0.0;       // max{|lambda1 - 1|, |lambda_{n-1} - 1|}
  double rho0 = 0.0;             // adjacency eigenvalues by |.| descending
  double rho1_abs = 0.0;
  double adjacency_ratio = 0.0;  // rho0 / |rho1|
};

/// Eigenvalues sorted by absolute value descending (ties: larger value first,
/// so the Perron value leads).
inline std::vector<double> by_abs_descending(std::vector<double> values) {
  std::sort(values.begin(), values.end(), [](double a, double b) {
    double aa = std::abs(a), ab = std::abs(b);
    return aa != ab ? aa > ab : a > b;
  });
  return values;
}

inline GapReport spectral_gap(const Graph& g) {
  if (g.node_count() < 2) throw std::invalid_argument("spectral_gap: need at least 2 nodes");
  GapReport r;
  auto lap = symmetric_eigenvalues(normalized_laplacian(g));
  r.lambda1 = lap.values[1];
  r.lambda_max = lap.values.back();
  r.lambda_gap = std::max(std::abs(r.lambda1 - 1.0), std::abs(r.lambda_max - 1.0));
  auto adj = by_abs_descending(symmetric_eigenvalues(adjacency_matrix(g)).values);
  r.rho0 = adj[0];
  r.rho1_abs = std::abs(adj[1]);
  r.adjacency_ratio = r.rho1_abs > 0 ? r.rho0 / r.rho1_abs : std::numeric_limits<double>::infinity();
  return r;
}

/// lambda_1(G_t) for t = 0..t_max. Rejects K_1 (no second eigenvalue).
inline std::vector<double> lambda1_sequence(const Graph& g0, unsigned t_max,
                                            const Budget& budget = {}) {
  if (g0.node_count() < 2)
    throw std::invalid_argument("lambda1_sequence: G_0 must have at least two nodes");
  std::vector<double> out;
  Graph g = g0;
  for (unsigned t = 0; t <= t_max; ++t) {
    out.push_back(symmetric_eigenvalues(normalized_laplacian(g)).values[1]);
    if (t < t_max) {
      if (g.node_count() * 2 > budget.max_nodes)
        throw ResourceError("lambda1_sequence: budget exceeded at t=" + std::to_string(t + 1));
      g = ilt_step(g);
    }
  }
  return out;
}

/// The two roots of x^2 - rho x - (rho+1)^2 = 0: the adjacency eigenvalues
/// of G_{t+1} spawned by eigenvalue rho of G_t.
inline std::pair<double, double> adjacency_children(double rho) {
  double disc = std::sqrt(rho * rho + 4.0 * (rho + 1.0) * (rho + 1.0));
  return {(rho + disc) / 2.0, (rho - disc) / 2.0};
}

struct RecurrenceCheck {
  bool ok = false;
  double max_deviation = 0.0;
};

/// Children of spec(A(G_t)) vs the computed spec(A(ilt_step(G_t))), both
/// sorted, compared entrywise.
inline RecurrenceCheck verify_adjacency_recurrence(const Graph& g, double tol = 1e-7) {
  auto parent = symmetric_eigenvalues(adjacency_matrix(g)).values;
  std::vector<double> predicted;
  predicted.reserve(2 * parent.size());
  for (double rho : parent) {
    auto [hi, lo] = adjacency_children(rho);
    predicted.push_back(hi);
    predicted.push_back(lo);
  }
  std::sort(predicted.begin(), predicted.end());
  auto actual = symmetric_eigenvalues(adjacency_matrix(ilt_step(g))).values;
  RecurrenceCheck r;
  for (std::size_t i = 0; i < predicted.size(); ++i)
    r.max_deviation = std::max(r.max_deviation, std::abs(predicted[i] - actual[i]));
  r.ok = r.max_deviation < tol;
  return r;
}

/// rho_0(t)/|rho_1(t)| for t = 1..t_max.
inline std::vector<double> adjacency_ratio_trend(const Graph& g0, unsigned t_max) {
  std::vector<double> out;
  Graph g = g0;
  for (unsigned t = 1; t <= t_max; ++t) {
    g = ilt_step(g);
    out.push_back(spectral_gap(g).adjacency_ratio);
  }
  return out;
}

/// Seeded G(n,p) on the counter-based stream; used for the random-graph
/// spectral contrast.
inline Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (rng.uniform(i, j) < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

struct IltPGap {
  double gap = 0.0;              // lambda(H_t), measured
  double analytic_floor = 0.0;   // (2 - delta - delta^2) / (2 (1 + delta))
};

inline double iltp_analytic_floor(double delta) {
  return (2.0 - delta - delta * delta) / (2.0 * (1.0 + delta));
}

inline IltPGap iltp_gap(const IltPConfig& cfg, unsigned t) {
  IltPConfig c = cfg;
  c.steps = t;
  auto seq = ilt_p_sequence(Graph::from_edges(1, {}), c);  // H_0 = K_1
  IltPGap r;
  r.gap = spectral_gap(seq.back()).lambda_gap;
  r.analytic_floor = iltp_analytic_floor(cfg.delta);
  return r;
}

}  // namespace ilt
