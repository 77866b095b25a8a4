#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ilt/generator.hpp"
#include "ilt/graph.hpp"

namespace ilt {

// ---------------------------------------------------------------------------
// Domination number: exact branch and bound.

struct DominationResult {
  std::uint32_t gamma = 0;
  std::vector<NodeId> dominating_set;
};

namespace detail {

struct DomSearch {
  const Graph& g;
  std::size_t n;
  std::vector<std::vector<NodeId>> closed;  // closed neighborhoods
  std::vector<std::uint32_t> cover_count;   // how many chosen dominators cover v
  std::vector<NodeId> chosen, best;
  std::size_t best_size;

  explicit DomSearch(const Graph& graph) : g(graph), n(graph.node_count()) {
    closed.resize(n);
    for (NodeId v = 0; v < n; ++v) {
      closed[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
      closed[v].push_back(v);
    }
    cover_count.assign(n, 0);
    best_size = n + 1;
  }

  std::size_t greedy_upper_bound() {
    std::vector<char> covered(n, 0);
    std::size_t uncovered = n, picks = 0;
    while (uncovered > 0) {
      NodeId best_v = 0;
      std::size_t best_gain = 0;
      for (NodeId v = 0; v < n; ++v) {
        std::size_t gain = 0;
        for (NodeId w : closed[v])
          if (!covered[w]) ++gain;
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
        }
      }
      for (NodeId w : closed[best_v])
        if (!covered[w]) {
          covered[w] = 1;
          --uncovered;
        }
      ++picks;
    }
    return picks;
  }

  void add(NodeId v) {
    chosen.push_back(v);
    for (NodeId w : closed[v]) ++cover_count[w];
  }
  void remove(NodeId v) {
    chosen.pop_back();
    for (NodeId w : closed[v]) --cover_count[w];
  }

  void run() {
    best_size = greedy_upper_bound();
    {  // greedy set kept as incumbent certificate
      std::vector<char> covered(n, 0);
      std::size_t uncovered = n;
      while (uncovered > 0) {
        NodeId bv = 0;
        std::size_t bg = 0;
        for (NodeId v = 0; v < n; ++v) {
          std::size_t gain = 0;
          for (NodeId w : closed[v])
            if (!covered[w]) ++gain;
          if (gain > bg) {
            bg = gain;
            bv = v;
          }
        }
        best.push_back(bv);
        for (NodeId w : closed[bv])
          if (!covered[w]) {
            covered[w] = 1;
            --uncovered;
          }
      }
    }
    dfs();
  }

  void dfs() {
    // pick the undominated node of minimum degree; branch on its closed
    // neighborhood as candidate dominators
    NodeId target = kUnreachable;
    std::size_t target_deg = n + 1;
    std::size_t undominated = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (cover_count[v] == 0) {
        ++undominated;
        if (closed[v].size() < target_deg) {
          target_deg = closed[v].size();
          target = v;
        }
      }
    }
    if (undominated == 0) {
      if (chosen.size() < best_size) {
        best_size = chosen.size();
        best = chosen;
      }
      return;
    }
    // lower bound: every dominator covers at most (max closed nbhd) nodes
    std::size_t max_cover = 0;
    for (NodeId v = 0; v < n; ++v) max_cover = std::max(max_cover, closed[v].size());
    std::size_t lb = chosen.size() + (undominated + max_cover - 1) / max_cover;
    if (lb >= best_size) return;
    for (NodeId cand : closed[target]) {
      add(cand);
      dfs();
      remove(cand);
    }
  }
};

}  // namespace detail

inline DominationResult domination_number(const Graph& g, std::size_t max_n_exact = 64) {
  if (g.node_count() > max_n_exact)
    throw ResourceError("domination_number: graph exceeds exact-search budget");
  if (g.node_count() == 0) throw std::invalid_argument("domination_number: empty graph");
  detail::DomSearch s(g);
  s.run();
  std::sort(s.best.begin(), s.best.end());
  return {static_cast<std::uint32_t>(s.best.size()), s.best};
}

// ---------------------------------------------------------------------------
// Cops and robbers: exact game-state fixpoint.
//
// Positions are (cop multiset, robber node, side to move). Cops place first,
// the robber then picks any start; a round is a cop team move followed by a
// robber move, and both sides may pass. Capture = a cop on the robber's node.

struct CopResult {
  std::uint32_t cop_number = 0;  // meaningful when bounded
  bool bounded = false;          // false: > k_max
  std::vector<NodeId> winning_start;
};

namespace detail {

// combinations with repetition, lexicographically sorted tuples
inline std::vector<std::vector<NodeId>> cop_multisets(std::size_t n, unsigned k) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> cur(k, 0);
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[i] == n - 1) --i;
    if (i < 0) break;
    NodeId v = cur[i] + 1;
    for (unsigned j = i; j < k; ++j) cur[j] = v;
  }
  return out;
}

struct CopGame {
  const Graph& g;
  unsigned k;
  std::size_t n;
  std::vector<std::vector<NodeId>> sets;         // all sorted cop k-multisets
  std::map<std::vector<NodeId>, std::uint32_t> set_index;
  // win[side][set][robber]: cops force capture; side 0 = cops to move
  std::vector<std::vector<char>> win[2];

  CopGame(const Graph& graph, unsigned cops) : g(graph), k(cops), n(graph.node_count()) {
    sets = cop_multisets(n, k);
    for (std::uint32_t i = 0; i < sets.size(); ++i) set_index[sets[i]] = i;
    win[0].assign(sets.size(), std::vector<char>(n, 0));
    win[1].assign(sets.size(), std::vector<char>(n, 0));
  }

  static bool captures(const std::vector<NodeId>& cops, NodeId r) {
    return std::binary_search(cops.begin(), cops.end(), r);
  }

  // enumerate team moves: each cop moves to a closed-neighborhood node
  template <typename F>
  void for_each_team_move(const std::vector<NodeId>& cops, F&& fn) const {
    std::vector<NodeId> move(k);
    enumerate(cops, 0, move, fn);
  }

  template <typename F>
  void enumerate(const std::vector<NodeId>& cops, unsigned i, std::vector<NodeId>& move,
                 F& fn) const {
    if (i == k) {
      std::vector<NodeId> sorted = move;
      std::sort(sorted.begin(), sorted.end());
      fn(sorted);
      return;
    }
    move[i] = cops[i];  // pass
    enumerate(cops, i + 1, move, fn);
    for (NodeId w : g.neighbors(cops[i])) {
      move[i] = w;
      enumerate(cops, i + 1, move, fn);
    }
  }

  // Monotone fixpoint: W_0 = capture positions, then alternate cop/robber
  // closure sweeps until no position flips.
  void solve() {
    for (int side = 0; side < 2; ++side)
      for (std::uint32_t ci = 0; ci < sets.size(); ++ci)
        for (NodeId r = 0; r < n; ++r)
          if (captures(sets[ci], r)) win[side][ci][r] = 1;

    bool changed = true;
    while (changed) {
      changed = false;
      // cops to move: win if some team move captures or reaches a winning
      // robber-to-move position
      for (std::uint32_t ci = 0; ci < sets.size(); ++ci) {
        for (NodeId r = 0; r < n; ++r) {
          if (win[0][ci][r]) continue;
          bool w = false;
          for_each_team_move(sets[ci], [&](const std::vector<NodeId>& mv) {
            if (w) return;
            if (captures(mv, r) || win[1][set_index.at(mv)][r]) w = true;
          });
          if (w) {
            win[0][ci][r] = 1;
            changed = true;
          }
        }
      }
      // robber to move: cops win if every robber move (incl. pass) lands in
      // a cop-to-move winning position
      for (std::uint32_t ci = 0; ci < sets.size(); ++ci) {
        const auto& cops = sets[ci];
        for (NodeId r = 0; r < n; ++r) {
          if (win[1][ci][r]) continue;
          bool all = win[0][ci][r] != 0;  // pass
          if (all)
            for (NodeId w2 : g.neighbors(r))
              if (!captures(cops, w2) && !win[0][ci][w2]) {
                all = false;
                break;
              }
          if (all) {
            win[1][ci][r] = 1;
            changed = true;
          }
        }
      }
    }
  }

  // cops pick a start, robber replies with any surviving start
  bool cops_win_from_some_start(std::vector<NodeId>* start_out) const {
    for (std::uint32_t ci = 0; ci < sets.size(); ++ci) {
      bool all = true;
      for (NodeId r = 0; r < n && all; ++r)
        if (!captures(sets[ci], r) && !win[0][ci][r]) all = false;
      if (all) {
        if (start_out) *start_out = sets[ci];
        return true;
      }
    }
    return false;
  }
};

}  // namespace detail

inline CopResult cop_number(const Graph& g, unsigned k_max,
                            std::size_t state_budget = std::size_t{1} << 24) {
  if (!g.is_connected()) throw std::invalid_argument("cop_number: graph must be connected");
  CopResult result;
  for (unsigned k = 1; k <= k_max; ++k) {
    // state count: multisets * robber positions * 2 sides
    double states = 2.0 * static_cast<double>(g.node_count());
    double ms = 1.0;
    for (unsigned i = 0; i < k; ++i) ms = ms * (g.node_count() + i) / (i + 1);
    if (states * ms > static_cast<double>(state_budget))
      throw ResourceError("cop_number: state space for k=" + std::to_string(k) +
                          " exceeds budget");
    detail::CopGame game(g, k);
    game.solve();
    std::vector<NodeId> start;
    if (game.cops_win_from_some_start(&start)) {
      result.cop_number = k;
      result.bounded = true;
      result.winning_start = start;
      return result;
    }
  }
  result.bounded = false;
  return result;
}

/// Fast c = 1 test: iterated corner removal (a corner is a node whose closed
/// neighborhood is contained in another's). Cop-win iff reducible to K_1.
inline bool is_cop_win(const Graph& g) {
  std::size_t n = g.node_count();
  if (n == 0) return false;
  std::vector<char> alive(n, 1);
  std::size_t alive_count = n;

  auto closed_contains = [&](NodeId u, NodeId dominator) {
    // closed nbhd of u within alive nodes must be inside closed nbhd of dominator
    if (u != dominator && !g.has_edge(u, dominator)) return false;
    for (NodeId w : g.neighbors(u)) {
      if (!alive[w] || w == dominator) continue;
      if (!g.has_edge(dominator, w)) return false;
    }
    return true;
  };

  bool progress = true;
  while (alive_count > 1 && progress) {
    progress = false;
    for (NodeId u = 0; u < n && alive_count > 1; ++u) {
      if (!alive[u]) continue;
      for (NodeId d = 0; d < n; ++d) {
        if (d == u || !alive[d]) continue;
        if (closed_contains(u, d)) {
          alive[u] = 0;
          --alive_count;
          progress = true;
          break;
        }
      }
    }
  }
  return alive_count == 1;
}

// ---------------------------------------------------------------------------
// Automorphisms.

using Permutation = std::vector<NodeId>;

inline bool is_automorphism(const Graph& g, const Permutation& f) {
  std::size_t n = g.node_count();
  if (f.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (NodeId v : f) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : g.neighbors(u))
      if (!g.has_edge(f[u], f[v])) return false;
  return true;
}

namespace detail {

// iterated neighborhood-color refinement; stops once the class count is stable
inline std::vector<std::uint32_t> refine_colors(const Graph& g) {
  std::size_t n = g.node_count();
  std::vector<std::uint32_t> color(n);
  for (NodeId v = 0; v < n; ++v) color[v] = g.degree(v);
  std::size_t classes = 0;
  for (std::size_t round = 0; round <= n; ++round) {
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> relabel;
    std::vector<std::uint32_t> next(n);
    for (NodeId v = 0; v < n; ++v) {
      std::vector<std::uint32_t> sig;
      sig.reserve(g.degree(v));
      for (NodeId w : g.neighbors(v)) sig.push_back(color[w]);
      std::sort(sig.begin(), sig.end());
      auto [it, inserted] = relabel.try_emplace(std::make_pair(color[v], std::move(sig)),
                                                static_cast<std::uint32_t>(relabel.size()));
      next[v] = it->second;
    }
    color = std::move(next);
    if (relabel.size() == classes) break;
    classes = relabel.size();
  }
  return color;
}

struct AutSearch {
  const Graph& g;
  std::size_t n;
  std::vector<std::uint32_t> color;
  std::vector<NodeId> order;  // nodes in search order
  Permutation image;
  std::vector<char> used;
  std::vector<Permutation> found;

  explicit AutSearch(const Graph& graph) : g(graph), n(graph.node_count()) {
    color = refine_colors(g);
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    // small color classes first shrinks the branching factor
    std::vector<std::size_t> class_size(n + 1, 0);
    for (auto c : color) ++class_size[c];
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      return class_size[color[a]] < class_size[color[b]];
    });
    image.assign(n, 0);
    used.assign(n, 0);
  }

  void dfs(std::size_t depth) {
    if (depth == n) {
      found.push_back(image);
      return;
    }
    NodeId u = order[depth];
    for (NodeId cand = 0; cand < n; ++cand) {
      if (used[cand] || color[cand] != color[u]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        NodeId prev = order[i];
        if (g.has_edge(u, prev) != g.has_edge(cand, image[prev])) ok = false;
      }
      if (!ok) continue;
      image[u] = cand;
      used[cand] = 1;
      dfs(depth + 1);
      used[cand] = 0;
    }
  }
};

}  // namespace detail

/// Full automorphism group by backtracking over the refined color partition.
inline std::vector<Permutation> automorphisms(const Graph& g, std::size_t max_n = 64) {
  if (g.node_count() > max_n) throw ResourceError("automorphisms: graph exceeds backtracking budget");
  if (g.node_count() == 0) return {};
  detail::AutSearch s(g);
  s.dfs(0);
  return s.found;
}

/// Stepwise lift of an automorphism of G_0 to G_t per the rule
/// f_{t+1}(i + n_s) = f_t(i) + n_s.
inline Permutation extend_automorphism(const Permutation& f0, unsigned t, std::size_t n0) {
  if (f0.size() != n0) throw std::invalid_argument("extend_automorphism: |f0| != n0");
  Permutation f = f0;
  for (unsigned s = 0; s < t; ++s) {
    std::size_t ns = f.size();
    Permutation next(2 * ns);
    for (std::size_t i = 0; i < ns; ++i) {
      next[i] = f[i];
      next[i + ns] = static_cast<NodeId>(f[i] + ns);
    }
    f = std::move(next);
  }
  return f;
}

/// Closed-form version of the same lift: v maps to v - ancestor + f0(ancestor).
inline Permutation extend_automorphism_direct(const Permutation& f0, unsigned t, std::size_t n0) {
  std::size_t nt = n0 << t;
  Permutation f(nt);
  for (std::size_t v = 0; v < nt; ++v) {
    Lineage l = lineage_of(v, t, n0);
    f[v] = static_cast<NodeId>(v - l.ancestor + f0[l.ancestor]);
  }
  return f;
}

struct EmbeddingReport {
  bool injective = false;
  bool homomorphism = false;
  bool lifts_are_automorphisms = false;
  std::size_t aut_g0 = 0;
  std::size_t aut_gt = 0;
  bool order_divides = false;
  bool ok = false;
};

/// Checks the Aut(G_0) -> Aut(G_t) embedding: injectivity, the homomorphism
/// law on all pairs, automorphy of every lift, and |Aut(G_0)| dividing
/// |Aut(G_t)|.
inline EmbeddingReport verify_embedding(const Graph& g0, unsigned t, std::size_t max_n = 64) {
  EmbeddingReport rep;
  auto aut0 = automorphisms(g0, max_n);
  auto gt_seq = ilt_sequence(g0, t);
  const Graph& gt = gt_seq.back();
  auto autt = automorphisms(gt, max_n);
  rep.aut_g0 = aut0.size();
  rep.aut_gt = autt.size();

  std::vector<Permutation> lifts;
  lifts.reserve(aut0.size());
  for (const auto& f : aut0) lifts.push_back(extend_automorphism(f, t, g0.node_count()));

  rep.injective = true;
  std::sort(lifts.begin(), lifts.end());
  for (std::size_t i = 0; i + 1 < lifts.size(); ++i)
    if (lifts[i] == lifts[i + 1]) rep.injective = false;

  auto compose = [](const Permutation& f, const Permutation& g) {
    Permutation h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
    return h;
  };
  rep.homomorphism = true;
  for (const auto& f : aut0)
    for (const auto& g : aut0) {
      auto lhs = extend_automorphism(compose(f, g), t, g0.node_count());
      auto rhs = compose(extend_automorphism(f, t, g0.node_count()),
                         extend_automorphism(g, t, g0.node_count()));
      if (lhs != rhs) {
        rep.homomorphism = false;
        break;
      }
    }

  rep.lifts_are_automorphisms = true;
  for (const auto& f : aut0)
    if (!is_automorphism(gt, extend_automorphism(f, t, g0.node_count())))
      rep.lifts_are_automorphisms = false;

  rep.order_divides = rep.aut_g0 > 0 && rep.aut_gt % rep.aut_g0 == 0;
  rep.ok = rep.injective && rep.homomorphism && rep.lifts_are_automorphisms && rep.order_divides;
  return rep;
}

struct GamesReport {
  DominationResult domination;
  CopResult cops;
};

}  // namespace ilt
