#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ilt/rational.hpp"

namespace ilt {

using NodeId = std::uint32_t;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Immutable simple undirected graph in CSR form: one contiguous sorted
/// neighbor array plus per-node offsets. Node indices are dense in
/// [0, node_count).
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds from an unordered edge list. Self-loops and duplicate edges are
  /// rejected, endpoints must be < n.
  static Graph from_edges(std::size_t n, std::vector<std::pair<NodeId, NodeId>> edges) {
    std::vector<std::uint64_t> keys;
    keys.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw std::invalid_argument("Graph: edge endpoint out of range");
      if (u == v) throw std::invalid_argument("Graph: self-loop not allowed");
      if (u > v) std::swap(u, v);
      keys.push_back(static_cast<std::uint64_t>(u) << 32 | v);
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
      throw std::invalid_argument("Graph: duplicate edge");

    Graph g;
    std::vector<std::uint32_t> deg(n, 0);
    for (auto k : keys) {
      ++deg[static_cast<NodeId>(k >> 32)];
      ++deg[static_cast<NodeId>(k & 0xffffffffu)];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.targets_.resize(2 * keys.size());
    std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto k : keys) {
      auto u = static_cast<NodeId>(k >> 32);
      auto v = static_cast<NodeId>(k & 0xffffffffu);
      g.targets_[cursor[u]++] = v;
      g.targets_[cursor[v]++] = u;
    }
    // keys were sorted by (u,v); per-node lists come out sorted for u-side
    // entries but v-side entries need a final pass.
    for (std::size_t i = 0; i < n; ++i)
      std::sort(g.targets_.begin() + g.offsets_[i], g.targets_.begin() + g.offsets_[i + 1]);
    return g;
  }

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::size_t volume() const { return targets_.size(); }

  std::uint32_t degree(NodeId v) const {
    check_node(v);
    return offsets_[v + 1] - offsets_[v];
  }

  std::span<const NodeId> neighbors(NodeId v) const {
    check_node(v);
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  bool has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool is_connected() const {
    std::size_t n = node_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t cnt = 1;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
    }
    return cnt == n;
  }

 private:
  void check_node(NodeId v) const {
    if (v >= node_count()) throw std::out_of_range("Graph: node out of range");
  }

  std::vector<std::uint32_t> offsets_;
  std::vector<NodeId> targets_;
};

/// Exact unweighted shortest-path distances from `source`; unreachable nodes
/// get kUnreachable (cannot happen for ILT outputs of a connected seed).
inline std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
  std::size_t n = g.node_count();
  if (source >= n) throw std::out_of_range("bfs_distances: source out of range");
  std::vector<std::uint32_t> dist(n, kUnreachable);
  std::vector<NodeId> frontier{source}, next;
  dist[source] = 0;
  std::uint32_t d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (NodeId u : frontier)
      for (NodeId w : g.neighbors(u))
        if (dist[w] == kUnreachable) {
          dist[w] = d;
          next.push_back(w);
        }
    frontier.swap(next);
  }
  return dist;
}

/// A node subset X with its volume bookkeeping against the host graph.
struct Partition {
  std::vector<char> member_flags;
  std::size_t vol_x = 0;
  std::size_t vol_xbar = 0;
  std::size_t e_xx = 0;  // unordered edges with both ends in X
};

inline Partition make_partition(const Graph& g, const std::vector<char>& member_flags) {
  if (member_flags.size() != g.node_count())
    throw std::invalid_argument("make_partition: flag vector size mismatch");
  Partition p;
  p.member_flags = member_flags;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    std::size_t d = g.degree(v);
    if (member_flags[v]) {
      p.vol_x += d;
      for (NodeId w : g.neighbors(v))
        if (w > v && member_flags[w]) ++p.e_xx;
    } else {
      p.vol_xbar += d;
    }
  }
  return p;
}

/// Certified lower bound on the normalized-Laplacian gap when X is an
/// independent set: vol(X)/vol(X̄), exact.
inline Rational mixing_bound(const Graph& g, const Partition& part) {
  (void)g;
  if (part.e_xx != 0) throw std::invalid_argument("mixing_bound: X must be independent");
  if (part.vol_x == 0) return Rational(0);
  if (part.vol_xbar == 0) throw std::domain_error("mixing_bound: complement has zero volume");
  return Rational(Int(part.vol_x), Int(part.vol_xbar));
}

}  // namespace ilt
