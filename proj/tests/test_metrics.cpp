#include <catch2/catch_amalgamated.hpp>

#include "ilt/generator.hpp"
#include "ilt/graph_io.hpp"
#include "ilt/metrics.hpp"

using namespace ilt;

TEST_CASE("wiener index frozen values") {
  CHECK(wiener_index(named_seed("c4")) == 8);
  CHECK(wiener_index(named_seed("p4")) == 10);
  CHECK(wiener_index(named_seed("k3")) == 3);
  CHECK(wiener_index(named_seed("petersen")) == 75);  // 15 pairs at 1, 30 at 2
  CHECK_THROWS_AS(wiener_index(Graph::from_edges(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("wiener identity at small t") {
  // from c4 at t=1: 4*8 + (4-3)*(4+4) = 40
  SeedStats c4{Int(8), 4, 4};
  CHECK(predicted_wiener(c4, 1) == 40);
  CHECK(wiener_index(ilt_step(named_seed("c4"))) == 40);
  // from k2 at t=2 -> 16*1 + 7*3 = 37
  SeedStats k2{Int(1), 1, 2};
  CHECK(predicted_wiener(k2, 2) == 37);
  CHECK(wiener_index(ilt_step(ilt_step(named_seed("k2")))) == 37);
}

TEST_CASE("average distance normalizations") {
  // p4: W = 10, n = 4
  CHECK(average_distance_unordered(Int(10), Int(4)) == Rational(Int(10), Int(6)));
  CHECK(average_distance_ordered(Int(10), Int(4)) == Rational(Int(10), Int(12)));
}

TEST_CASE("ultimate average distance") {
  // c4: UL = (8 + 4 + 4)/16 = 1; above L(c4) = 8/12, and indeed
  // W0 = 8 < (n0-1)(e0+n0) = 24
  auto ul = ultimate_average_distance({Int(8), 4, 4});
  CHECK(ul.ul == Rational(1));
  CHECK(!ul.decreases_from_start);
  // p5: W0 = 20, (n0-1)(e0+n0) = 4*9 = 36, still increasing case
  auto ul2 = ultimate_average_distance({Int(20), 4, 5});
  CHECK(ul2.ul == Rational(Int(29), Int(25)));
  CHECK(!ul2.decreases_from_start);
  // long path p9 computed by hand: W0 = 120 >= 8*(8+9) = 136? no (120 < 136).
  // a graph with large W0: p16 would qualify; use a synthetic stats row instead
  auto ul3 = ultimate_average_distance({Int(200), 8, 9});
  CHECK(ul3.decreases_from_start);  // 200 >= 8*17 = 136
}

TEST_CASE("diameter values and clique behavior") {
  CHECK(diameter(named_seed("p5")) == 4);
  CHECK(diameter(named_seed("petersen")) == 2);
  CHECK(diameter(ilt_step(named_seed("k3"))) == 2);
  auto seq = ilt_sequence(named_seed("p5"), 4);
  for (unsigned t = 0; t < seq.size(); ++t) CHECK(diameter(seq[t]) == 4);
}

TEST_CASE("triangle counts match a cubic brute force") {
  auto brute = [](const Graph& g) {
    std::vector<std::uint64_t> tri(g.node_count(), 0);
    for (NodeId a = 0; a < g.node_count(); ++a)
      for (NodeId b = a + 1; b < g.node_count(); ++b)
        for (NodeId c = b + 1; c < g.node_count(); ++c)
          if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
            ++tri[a];
            ++tri[b];
            ++tri[c];
          }
    return tri;
  };
  for (const Graph& g : {ilt_sequence(named_seed("c4"), 3).back(), named_seed("petersen"),
                         named_seed("k3"), ilt_sequence(named_seed("k2"), 3).back()}) {
    CHECK(triangle_counts(g) == brute(g));
  }
  Graph k3 = named_seed("k3");
  for (NodeId v = 0; v < 3; ++v) CHECK(neighbourhood_edges(k3, v) == 1);
}

TEST_CASE("clustering coefficient exact values") {
  CHECK(clustering_coefficient(named_seed("k3")).mean == Rational(1));
  CHECK(clustering_coefficient(named_seed("c4")).mean == Rational(0));
  CHECK(clustering_coefficient(named_seed("k2")).mean == Rational(0));  // deg <= 1
  // G_1 of k2 is k4 minus one edge; the clones see 1 of 1 neighbor pair,
  // the originals 2 of 3 -> mean (1 + 1 + 2/3 + 2/3)/4 = 5/6
  CHECK(clustering_coefficient(ilt_step(named_seed("k2"))).mean == Rational(Int(5), Int(6)));
}

TEST_CASE("analytic degree distribution equals the brute-force histogram") {
  for (const std::string name : {"k1", "c4"}) {
    Graph g0 = named_seed(name);
    auto seq = ilt_sequence(g0, 7);
    for (unsigned t = 0; t < seq.size(); ++t) {
      auto dp = degree_distribution_analytic(g0, t);
      auto brute = degree_histogram(seq[t]);
      CHECK(dp.entries == brute.entries);
      CHECK(dp.total == brute.total);
    }
  }
}

TEST_CASE("degree distribution tail at large t") {
  auto h = degree_distribution_analytic(named_seed("k1"), 20);
  Int n = ipow(2, 20);
  CHECK(h.total == n);
  auto j = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(1 << 20)));
  Rational frac(tail_count(h, j), n);
  CHECK(frac >= Rational(Int(2), Int(5)));
  CHECK(tail_count(h, 1) == n);  // min degree at t >= 1 is at least 1
  CHECK_THROWS_AS(degree_distribution_analytic(named_seed("k1"), 20, 100), std::length_error);
}

TEST_CASE("densification fit recovers exact power laws") {
  std::vector<std::pair<double, double>> pts;
  for (int k = 1; k <= 6; ++k) {
    double n = std::pow(2.0, k);
    pts.emplace_back(n, 3.0 * n * n);  // slope exactly 2
  }
  CHECK(densification_fit(pts) == Catch::Approx(2.0).margin(1e-12));
  CHECK_THROWS_AS(densification_fit({{1.0, 1.0}, {2.0, 2.0}}), std::invalid_argument);
  // ILT itself: slope -> log 3 / log 2, fitting past the pre-asymptotic prefix
  pts.clear();
  auto seq = ilt_sequence(named_seed("c4"), 12);
  for (unsigned t = 4; t < seq.size(); ++t)
    pts.emplace_back(static_cast<double>(seq[t].node_count()),
                     static_cast<double>(seq[t].edge_count()));
  CHECK(std::abs(densification_fit(pts) - std::log(3.0) / std::log(2.0)) < 0.05);
}
