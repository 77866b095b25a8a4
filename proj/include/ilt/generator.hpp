#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ilt/graph.hpp"
#include "ilt/rational.hpp"

namespace ilt {

/// Exponential growth needs an explicit guardrail; `ilt_sequence` refuses
/// steps that would exceed these caps.
struct Budget {
  std::size_t max_nodes = std::size_t{1} << 25;
  std::size_t max_edges = std::size_t{1} << 30;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed-form node/edge/volume counts for G_t.
struct GrowthPrediction {
  unsigned t = 0;
  Int n_t;
  Int e_t;
  Int vol_t;
};

inline GrowthPrediction growth_prediction(std::size_t n0, std::size_t e0, unsigned t) {
  GrowthPrediction p;
  p.t = t;
  Int pow2 = ipow(2, t), pow3 = ipow(3, t);
  p.n_t = pow2 * n0;
  p.e_t = pow3 * (Int(e0) + Int(n0)) - p.n_t;
  p.vol_t = pow3 * Int(2 * e0) + 2 * Int(n0) * (pow3 - pow2);
  return p;
}

/// Average degree of G_t: (3/2)^t (vol0/n0 + 2) - 2, exact.
inline Rational predicted_average_degree(std::size_t n0, std::size_t e0, unsigned t) {
  Rational r(Int(2 * e0), Int(n0));
  return Rational(ipow(3, t), ipow(2, t)) * (r + Rational(2)) - Rational(2);
}

/// One ILT step: node i keeps index i, its clone gets index i + n and is
/// joined to the closed neighborhood of i. Clones form an independent set.
inline Graph ilt_step(const Graph& g) {
  auto n = static_cast<NodeId>(g.node_count());
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(3 * g.edge_count() + n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
      edges.emplace_back(v, static_cast<NodeId>(u + n));  // clone of u to each neighbor
    }
    edges.emplace_back(u, static_cast<NodeId>(u + n));
  }
  return Graph::from_edges(2 * static_cast<std::size_t>(n), std::move(edges));
}

/// [G_0 .. G_t]. Throws ResourceError naming the first step that would
/// exceed the budget.
inline std::vector<Graph> ilt_sequence(const Graph& g0, unsigned t, const Budget& budget = {}) {
  std::vector<Graph> seq;
  seq.reserve(t + 1);
  seq.push_back(g0);
  for (unsigned s = 1; s <= t; ++s) {
    GrowthPrediction p = growth_prediction(g0.node_count(), g0.edge_count(), s);
    if (p.n_t > budget.max_nodes || p.e_t > budget.max_edges) {
      std::ostringstream msg;
      msg << "ilt_sequence: step " << s << " exceeds budget (predicted n=" << p.n_t
          << ", e=" << p.e_t << ")";
      throw ResourceError(msg.str());
    }
    seq.push_back(ilt_step(seq.back()));
  }
  return seq;
}

/// Ancestry record for a node of G_t: its ancestor in G_0 plus one bit per
/// step, '1' for the step where the node appeared as a clone, '0' where it
/// survived, in chronological order.
struct Lineage {
  NodeId ancestor = 0;
  std::string bits;
  unsigned zero_count = 0;
};

/// Recovers the lineage purely from index arithmetic: at step s the clone of
/// node i received index i + n_{s-1}, so bit s is 1 iff the running index was
/// >= the then-current node count.
inline Lineage lineage_of(std::uint64_t v, unsigned t, std::size_t n0) {
  Int cap = ipow(2, t) * n0;
  if (v >= cap) throw std::out_of_range("lineage_of: node index out of range for G_t");
  Lineage l;
  l.bits.assign(t, '0');
  std::uint64_t idx = v;
  for (unsigned s = t; s >= 1; --s) {
    std::uint64_t prev_n = (n0 << (s - 1));
    if (idx >= prev_n) {
      l.bits[s - 1] = '1';
      idx -= prev_n;
    } else {
      ++l.zero_count;
    }
  }
  l.ancestor = static_cast<NodeId>(idx);
  return l;
}

/// Bounds on deg_t of a node with k zero bits in its lineage:
/// 2^k(deg0+1)+t-k-1 <= deg <= 2^k(deg0+t-k+1)-1.
inline std::pair<Int, Int> degree_bounds(const Lineage& l, std::uint32_t deg0, unsigned t) {
  if (l.bits.size() != t) throw std::invalid_argument("degree_bounds: lineage length != t");
  Int k2 = ipow(2, l.zero_count);
  Int lower = k2 * (Int(deg0) + 1) + Int(t) - Int(l.zero_count) - 1;
  Int upper = k2 * (Int(deg0) + Int(t) - Int(l.zero_count) + 1) - 1;
  return {lower, upper};
}

// Lineage sidecar format: header `ilt-lineage v1`, one line per node
// `index ancestor bitstring` ("-" for the empty bitstring at t=0).

inline void serialize_lineages(std::size_t n0, unsigned t, std::ostream& out) {
  out << "ilt-lineage v1\n";
  std::uint64_t n = static_cast<std::uint64_t>(n0) << t;
  for (std::uint64_t v = 0; v < n; ++v) {
    Lineage l = lineage_of(v, t, n0);
    out << v << " " << l.ancestor << " " << (l.bits.empty() ? "-" : l.bits) << "\n";
  }
}

}  // namespace ilt
