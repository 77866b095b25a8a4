#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>

#include "ilt/generator.hpp"
#include "ilt/graph_io.hpp"
#include "ilt/ilt_p.hpp"

using namespace ilt;

TEST_CASE("one step from c4 yields the frozen edge list") {
  Graph g1 = ilt_step(named_seed("c4"));
  // originals plus each clone u+4 joined to u and N(u)
  Graph expect = Graph::from_edges(
      8, {{0, 1}, {1, 2}, {2, 3}, {0, 3},
          {0, 4}, {1, 4}, {3, 4},
          {1, 5}, {0, 5}, {2, 5},
          {2, 6}, {1, 6}, {3, 6},
          {3, 7}, {0, 7}, {2, 7}});
  CHECK(serialize_graph(g1) == serialize_graph(expect));
}

TEST_CASE("growth identities hold for several seeds") {
  for (const std::string name : {"k1", "k2", "c4", "p5", "petersen"}) {
    Graph g0 = named_seed(name);
    auto seq = ilt_sequence(g0, 8);
    for (unsigned t = 0; t < seq.size(); ++t) {
      auto p = growth_prediction(g0.node_count(), g0.edge_count(), t);
      CHECK(Int(seq[t].node_count()) == p.n_t);
      CHECK(Int(seq[t].edge_count()) == p.e_t);
      CHECK(Int(seq[t].volume()) == p.vol_t);
      CHECK(Rational(p.vol_t, p.n_t) ==
            predicted_average_degree(g0.node_count(), g0.edge_count(), t));
    }
  }
}

TEST_CASE("clones form an independent set") {
  Graph g = named_seed("petersen");
  Graph g1 = ilt_step(g);
  auto n = static_cast<NodeId>(g.node_count());
  for (NodeId u = n; u < 2 * n; ++u)
    for (NodeId v = u + 1; v < 2 * n; ++v) CHECK(!g1.has_edge(u, v));
}

TEST_CASE("node budget violations name the failing step") {
  Budget tight;
  tight.max_nodes = 10;
  CHECK_THROWS_AS(ilt_sequence(named_seed("c4"), 3, tight), ResourceError);
  try {
    ilt_sequence(named_seed("c4"), 3, tight);
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("lineage matches a forward-simulation oracle") {
  const std::size_t n0 = 4;
  const unsigned t_max = 6;
  // oracle: rebuild bitstrings the way the generator assigns indices
  std::vector<std::pair<NodeId, std::string>> oracle(n0);
  for (NodeId v = 0; v < n0; ++v) oracle[v] = {v, ""};
  for (unsigned s = 1; s <= t_max; ++s) {
    std::size_t n = oracle.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto clone = oracle[i];
      clone.second += "1";
      oracle.push_back(clone);
      oracle[i].second += "0";
    }
  }
  for (std::uint64_t v = 0; v < oracle.size(); ++v) {
    Lineage l = lineage_of(v, t_max, n0);
    CHECK(l.ancestor == oracle[v].first);
    CHECK(l.bits == oracle[v].second);
    CHECK(l.zero_count ==
          static_cast<unsigned>(std::count(l.bits.begin(), l.bits.end(), '0')));
  }
  CHECK_THROWS_AS(lineage_of(oracle.size(), t_max, n0), std::out_of_range);
}

TEST_CASE("degree bounds from lineage hold on generated graphs") {
  Graph g0 = named_seed("c4");
  auto seq = ilt_sequence(g0, 5);
  for (unsigned t = 0; t < seq.size(); ++t)
    for (NodeId v = 0; v < seq[t].node_count(); ++v) {
      Lineage l = lineage_of(v, t, g0.node_count());
      auto [lo, hi] = degree_bounds(l, g0.degree(l.ancestor), t);
      Int d(seq[t].degree(v));
      CHECK(d >= lo);
      CHECK(d <= hi);
    }
}

TEST_CASE("edge classes by ancestor pair have the predicted sizes") {
  Graph g0 = named_seed("c4");
  auto seq = ilt_sequence(g0, 5);
  for (unsigned t = 0; t < seq.size(); ++t) {
    std::map<std::pair<NodeId, NodeId>, Int> cls;
    for (NodeId u = 0; u < seq[t].node_count(); ++u)
      for (NodeId v : seq[t].neighbors(u))
        if (u < v) {
          NodeId a = lineage_of(u, t, 4).ancestor, b = lineage_of(v, t, 4).ancestor;
          auto key = std::minmax(a, b);
          ++cls[{key.first, key.second}];
        }
    for (const auto& [key, count] : cls) {
      if (key.first == key.second)
        CHECK(count == ipow(3, t) - ipow(2, t));
      else
        CHECK(count == ipow(3, t));
    }
  }
}

TEST_CASE("lineage sidecar format") {
  std::ostringstream out;
  serialize_lineages(2, 2, out);
  CHECK(out.str() ==
        "ilt-lineage v1\n"
        "0 0 00\n"
        "1 1 00\n"
        "2 0 10\n"   // cloned at step 1, survived step 2
        "3 1 10\n"
        "4 0 01\n"   // cloned at step 2
        "5 1 01\n"
        "6 0 11\n"   // clone (step 2) of the step-1 clone
        "7 1 11\n");
}

TEST_CASE("p_of_n values") {
  // delta=1: exponent log2(4) - 2 = 0, so p = 1 at every n
  CHECK(p_of_n(1.0, 1) == 1.0);
  CHECK(p_of_n(1.0, 1024) == 1.0);
  CHECK(p_of_n(0.0, 64) == 0.0);
  CHECK(p_of_n(0.5, 1) == 0.5);
  double p = p_of_n(0.5, 256);
  CHECK(p == Catch::Approx(0.5 * std::pow(256.0, std::log2(3.5) - 2.0)));
  CHECK_THROWS_AS(p_of_n(1.5, 4), std::invalid_argument);
  CHECK_THROWS_AS(p_of_n(0.5, 0), std::invalid_argument);
}

TEST_CASE("ilt(p) runs are deterministic in the seed") {
  Graph k1 = Graph::from_edges(1, {});
  auto a = ilt_p_sequence(k1, {0.5, 7, 8});
  auto b = ilt_p_sequence(k1, {0.5, 7, 8});
  auto c = ilt_p_sequence(k1, {0.5, 8, 8});
  CHECK(serialize_graph(a.back()) == serialize_graph(b.back()));
  CHECK(serialize_graph(a.back()) != serialize_graph(c.back()));
}

TEST_CASE("ilt(p) with delta=1 doubles into a complete graph") {
  auto seq = ilt_p_sequence(Graph::from_edges(1, {}), {1.0, 3, 5});
  const Graph& h = seq.back();
  CHECK(h.node_count() == 32);
  CHECK(h.edge_count() == 32 * 31 / 2);
}

TEST_CASE("random extra edges match the binomial count within 4 sigma") {
  auto base = ilt_sequence(Graph::from_edges(1, {}), 8).back();  // n = 256
  auto n = static_cast<NodeId>(base.node_count());
  double p = p_of_n(0.5, n);
  double pairs = static_cast<double>(n) * (n - 1) / 2.0;
  double mean = pairs * p;
  double sigma = std::sqrt(pairs * p * (1 - p));
  std::size_t deterministic = 3 * base.edge_count() + n;
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    Graph h = ilt_p_step(base, 0.5, CounterRng(seed), 1);
    double extra = static_cast<double>(h.edge_count() - deterministic);
    CHECK(std::abs(extra - mean) < 4.0 * sigma);
  }
}

TEST_CASE("skip sampler matches per-pair bernoulli marginals") {
  const NodeId n = 12;
  const double p = 0.3;
  const int trials = 1500;
  std::map<std::pair<NodeId, NodeId>, int> hits_b, hits_s;
  for (int trial = 0; trial < trials; ++trial) {
    CounterRng rng(1000 + trial);
    std::vector<std::pair<NodeId, NodeId>> eb, es;
    detail::sample_pairs_bernoulli(eb, n, p, rng, 1);
    detail::sample_pairs_skip(es, n, p, rng, 1);
    for (auto e : eb) ++hits_b[e];
    for (auto e : es) ++hits_s[e];
  }
  double sigma = std::sqrt(trials * p * (1 - p));
  for (NodeId i = n; i < 2 * n; ++i)
    for (NodeId j = i + 1; j < 2 * n; ++j) {
      CHECK(std::abs(hits_b[{i, j}] - trials * p) < 4.5 * sigma);
      CHECK(std::abs(hits_s[{i, j}] - trials * p) < 4.5 * sigma);
    }
}
