#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "ilt/graph.hpp"
#include "ilt/graph_io.hpp"
#include "ilt/rational.hpp"
#include "ilt/rng.hpp"

using namespace ilt;

TEST_CASE("rational arithmetic normalizes") {
  Rational a(Int(2), Int(4));
  CHECK(a == Rational(Int(1), Int(2)));
  CHECK(a.str() == "1/2");
  CHECK(Rational(Int(-3), Int(-6)) == a);
  CHECK(Rational(Int(3), Int(-6)) == Rational(Int(-1), Int(2)));
  CHECK(a + a == Rational(1));
  CHECK(a * Rational(Int(2), Int(3)) == Rational(Int(1), Int(3)));
  CHECK(Rational(1) - a == a);
  CHECK(a / Rational(Int(1), Int(4)) == Rational(2));
  CHECK(a < Rational(Int(2), Int(3)));
  CHECK(a.to_double() == 0.5);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK(ipow(3, 4) == 81);
  CHECK(ipow(2, 0) == 1);
}

TEST_CASE("csr construction and queries") {
  Graph g = named_seed("c4");
  REQUIRE(g.node_count() == 4);
  REQUIRE(g.edge_count() == 4);
  CHECK(g.volume() == 8);
  CHECK(g.degree(0) == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  auto nb = g.neighbors(0);
  CHECK(std::vector<NodeId>(nb.begin(), nb.end()) == std::vector<NodeId>{1, 3});
  CHECK(g.is_connected());
  CHECK(!Graph::from_edges(2, {}).is_connected());
}

TEST_CASE("from_edges validation") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("bfs distances on a path") {
  Graph g = named_seed("p5");
  auto d = bfs_distances(g, 0);
  CHECK(d == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
  auto d2 = bfs_distances(Graph::from_edges(3, {{0, 1}}), 0);
  CHECK(d2[2] == kUnreachable);
}

TEST_CASE("graph text format round-trips") {
  Graph g = named_seed("petersen");
  std::string text = serialize_graph(g);
  CHECK(text.rfind("ilt-graph v1 10 15", 0) == 0);
  Graph back = parse_graph(text);
  CHECK(serialize_graph(back) == text);
}

TEST_CASE("graph parser skips comments and rejects malformed input") {
  Graph g = parse_graph("# a comment\nilt-graph v1 2 1\n# another\n0 1\n");
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(parse_graph("ilt-graph v2 2 1\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("ilt-graph v1 2 1\n1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("ilt-graph v1 2 2\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph(""), std::invalid_argument);
}

TEST_CASE("named seeds") {
  CHECK(named_seed("k3").edge_count() == 3);
  CHECK(named_seed("c5").node_count() == 5);
  CHECK(named_seed("p4").edge_count() == 3);
  CHECK(is_named_seed("petersen"));
  CHECK(!is_named_seed("q7"));
  CHECK_THROWS_AS(named_seed("q7"), std::invalid_argument);
  // petersen: 3-regular, girth 5 (no triangles, no 4-cycles through an edge)
  Graph p = named_seed("petersen");
  for (NodeId v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
}

TEST_CASE("partition volumes and mixing bound") {
  // one ILT step of c4: clones 4..7 form an independent set of volume 12
  Graph g = parse_graph(
      "ilt-graph v1 8 16\n0 1\n0 3\n0 4\n0 5\n0 7\n1 2\n1 4\n1 5\n1 6\n2 3\n2 5\n2 6\n2 7\n"
      "3 4\n3 6\n3 7\n");
  std::vector<char> flags(8, 0);
  for (int v = 4; v < 8; ++v) flags[v] = 1;
  auto part = make_partition(g, flags);
  CHECK(part.e_xx == 0);
  CHECK(part.vol_x == 12);
  CHECK(part.vol_xbar == 20);
  CHECK(mixing_bound(g, part) == Rational(Int(3), Int(5)));
  flags[0] = 1;  // not independent anymore
  CHECK_THROWS_AS(mixing_bound(g, make_partition(g, flags)), std::invalid_argument);
}

TEST_CASE("counter rng is a pure function of its arguments") {
  CounterRng a(42), b(42), c(43);
  CHECK(a.bits(1, 2, 3) == b.bits(1, 2, 3));
  CHECK(a.bits(1, 2, 3) != c.bits(1, 2, 3));
  CHECK(a.bits(1, 2, 3) != a.bits(1, 3, 2));
  double u = a.uniform(7, 7, 7);
  CHECK((u >= 0.0 && u < 1.0));
}
