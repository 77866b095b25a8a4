#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ilt/generator.hpp"
#include "ilt/graph.hpp"
#include "ilt/rng.hpp"

namespace ilt {

struct IltPConfig {
  double delta = 0.0;       // in [0, 1]
  std::uint64_t seed = 0;   // RNG seed
  unsigned steps = 0;       // T
};

/// p(n) = delta * n^(log(3+delta)/log 2) / n^2, clamped to [0, 1].
inline double p_of_n(double delta, std::uint64_t n) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("p_of_n: delta must be in [0,1]");
  if (n < 1) throw std::invalid_argument("p_of_n: n must be >= 1");
  double expo = std::log2(3.0 + delta) - 2.0;
  double p = delta * std::exp(expo * std::log(static_cast<double>(n)));
  if (p < 0.0) p = 0.0;
  if (p > 1.0) p = 1.0;
  return p;
}

namespace detail {

// Appends the random G(n,p) edges among the new nodes [n, 2n). Each pair
// draws from the stream position (step, i, j), so the result is independent
// of enumeration order.
inline void sample_pairs_bernoulli(std::vector<std::pair<NodeId, NodeId>>& edges, NodeId n,
                                   double p, const CounterRng& rng, unsigned step) {
  for (NodeId i = n; i < 2 * n; ++i)
    for (NodeId j = i + 1; j < 2 * n; ++j)
      if (rng.uniform(step, i, j) < p) edges.emplace_back(i, j);
}

// Geometric skip sampling over the ranked pair sequence; distribution-equal
// to per-pair Bernoulli but O(expected edges) draws. Draws come from the
// dedicated stream (step, ~0, counter).
inline void sample_pairs_skip(std::vector<std::pair<NodeId, NodeId>>& edges, NodeId n, double p,
                              const CounterRng& rng, unsigned step) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const double log1mp = std::log1p(-p);
  std::uint64_t rank = 0, counter = 0;
  while (true) {
    double u = rng.uniform(step, ~std::uint64_t{0}, counter++);
    // number of failures before the next success
    double skip = std::floor(std::log1p(-u) / log1mp);
    if (skip >= static_cast<double>(pairs - rank)) break;
    rank += static_cast<std::uint64_t>(skip);
    if (rank >= pairs) break;
    // unrank pair (a, b) among 0 <= a < b < n
    std::uint64_t a = 0, remaining = rank;
    std::uint64_t row = n - 1;
    while (remaining >= row) {
      remaining -= row;
      --row;
      ++a;
    }
    std::uint64_t b = a + 1 + remaining;
    edges.emplace_back(static_cast<NodeId>(n + a), static_cast<NodeId>(n + b));
    ++rank;
    if (rank >= pairs) break;
  }
}

}  // namespace detail

/// One ILT(p) step: the deterministic clone step, then G(n,p) edges among
/// the n new nodes with p = p_of_n(delta, n). Deterministic given
/// (input, delta, rng seed, step index).
///
/// `skip_sampling_threshold`: pair counts above this with small p switch to
/// geometric skip sampling (distribution-identical, not draw-for-draw).
inline Graph ilt_p_step(const Graph& g, double delta, const CounterRng& rng, unsigned step,
                        std::uint64_t skip_sampling_threshold = std::uint64_t{1} << 24) {
  auto n = static_cast<NodeId>(g.node_count());
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(3 * g.edge_count() + n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
      edges.emplace_back(v, static_cast<NodeId>(u + n));
    }
    edges.emplace_back(u, static_cast<NodeId>(u + n));
  }
  if (delta > 0.0 && n >= 2) {
    double p = p_of_n(delta, n);
    if (p >= 1.0) {
      for (NodeId i = n; i < 2 * n; ++i)
        for (NodeId j = i + 1; j < 2 * n; ++j) edges.emplace_back(i, j);
    } else if (p > 0.0) {
      std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
      if (pairs > skip_sampling_threshold && p < 0.1)
        detail::sample_pairs_skip(edges, n, p, rng, step);
      else
        detail::sample_pairs_bernoulli(edges, n, p, rng, step);
    }
  }
  return Graph::from_edges(2 * static_cast<std::size_t>(n), std::move(edges));
}

/// [H_0 .. H_T] from a connected seed (the model's own H_0 is K_1).
inline std::vector<Graph> ilt_p_sequence(const Graph& h0, const IltPConfig& cfg,
                                         const Budget& budget = {}) {
  if (!(cfg.delta >= 0.0 && cfg.delta <= 1.0))
    throw std::invalid_argument("ilt_p_sequence: delta must be in [0,1]");
  CounterRng rng(cfg.seed);
  std::vector<Graph> seq;
  seq.reserve(cfg.steps + 1);
  seq.push_back(h0);
  for (unsigned s = 1; s <= cfg.steps; ++s) {
    std::size_t next_nodes = seq.back().node_count() * 2;
    if (next_nodes > budget.max_nodes)
      throw ResourceError("ilt_p_sequence: step " + std::to_string(s) + " exceeds node budget");
    seq.push_back(ilt_p_step(seq.back(), cfg.delta, rng, s));
    if (seq.back().edge_count() > budget.max_edges)
      throw ResourceError("ilt_p_sequence: step " + std::to_string(s) + " exceeds edge budget");
  }
  return seq;
}

}  // namespace ilt
