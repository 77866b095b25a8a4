#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ilt/graph.hpp"

namespace ilt {

// Text format: header `ilt-graph v1 <n> <m>`, then one `u v` line per edge
// with u < v. Lines starting with '#' are ignored on input.

inline Graph parse_graph(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (out.empty() || out[0] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw std::invalid_argument("parse_graph: empty input");
  std::istringstream hdr(line);
  std::string magic, version;
  std::size_t n = 0, m = 0;
  hdr >> magic >> version >> n >> m;
  if (magic != "ilt-graph" || version != "v1" || hdr.fail())
    throw std::invalid_argument("parse_graph: bad header: " + line);
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line(line)) throw std::invalid_argument("parse_graph: truncated edge list");
    std::istringstream ls(line);
    std::uint64_t u = 0, v = 0;
    ls >> u >> v;
    if (ls.fail()) throw std::invalid_argument("parse_graph: bad edge line: " + line);
    if (u >= v) throw std::invalid_argument("parse_graph: edges must satisfy u < v: " + line);
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  return Graph::from_edges(n, std::move(edges));
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline void serialize_graph(const Graph& g, std::ostream& out) {
  out << "ilt-graph v1 " << g.node_count() << " " << g.edge_count() << "\n";
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.neighbors(u))
      if (u < v) out << u << " " << v << "\n";
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  serialize_graph(g, out);
  return out.str();
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(0, static_cast<NodeId>(n - 1));
  return Graph::from_edges(n, std::move(e));
}

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(e));
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, std::move(e));
}

inline Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(static_cast<NodeId>(5 + i), static_cast<NodeId>(5 + (i + 2) % 5));
    e.emplace_back(i, static_cast<NodeId>(i + 5));
  }
  return Graph::from_edges(10, std::move(e));
}

/// Built-in seed graphs accepted anywhere a graph file is accepted.
inline Graph named_seed(const std::string& name) {
  if (name == "k1") return complete_graph(1);
  if (name == "k2") return complete_graph(2);
  if (name == "k3") return complete_graph(3);
  if (name == "c4") return cycle_graph(4);
  if (name == "c5") return cycle_graph(5);
  if (name == "p4") return path_graph(4);
  if (name == "p5") return path_graph(5);
  if (name == "petersen") return petersen_graph();
  throw std::invalid_argument("named_seed: unknown seed graph '" + name + "'");
}

inline bool is_named_seed(const std::string& name) {
  for (const char* s : {"k1", "k2", "k3", "c4", "c5", "p4", "p5", "petersen"})
    if (name == s) return true;
  return false;
}

}  // namespace ilt
