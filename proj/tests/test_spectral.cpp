#include <catch2/catch_amalgamated.hpp>

#include "ilt/generator.hpp"
#include "ilt/graph_io.hpp"
#include "ilt/spectral.hpp"

using namespace ilt;

namespace {
bool close(double a, double b, double tol = 1e-9) { return std::abs(a - b) < tol; }
}  // namespace

TEST_CASE("eigensolver on known spectra") {
  // c4 adjacency: {-2, 0, 0, 2}
  auto c4 = symmetric_eigenvalues(adjacency_matrix(named_seed("c4")));
  REQUIRE(c4.values.size() == 4);
  CHECK(close(c4.values[0], -2.0));
  CHECK(close(c4.values[1], 0.0));
  CHECK(close(c4.values[2], 0.0));
  CHECK(close(c4.values[3], 2.0));
  // k2 normalized laplacian: {0, 2}
  auto k2 = symmetric_eigenvalues(normalized_laplacian(named_seed("k2")));
  CHECK(close(k2.values[0], 0.0));
  CHECK(close(k2.values[1], 2.0));
  // k3 normalized laplacian: {0, 3/2, 3/2}
  auto k3 = symmetric_eigenvalues(normalized_laplacian(named_seed("k3")));
  CHECK(close(k3.values[1], 1.5));
  CHECK(close(k3.values[2], 1.5));
  // petersen adjacency: {3, 1 (x5), -2 (x4)}
  auto pet = symmetric_eigenvalues(adjacency_matrix(named_seed("petersen")));
  CHECK(close(pet.values.back(), 3.0));
  CHECK(close(pet.values[0], -2.0));
  CHECK(close(pet.values[4], 1.0));
}

TEST_CASE("solver guardrails") {
  SymMatrix m(2);
  m.at(0, 1) = 1.0;  // asymmetric: m(1,0) stays 0
  CHECK_THROWS_AS(symmetric_eigenvalues(m), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_eigenvalues(SymMatrix(kDenseBudget + 1)), ResourceError);
  auto spec = symmetric_eigenvalues(adjacency_matrix(ilt_sequence(named_seed("c4"), 4).back()));
  CHECK(spec.residual < 1e-10);
}

TEST_CASE("trace identities on a generated graph") {
  Graph g = ilt_sequence(named_seed("c4"), 2).back();
  auto adj = symmetric_eigenvalues(adjacency_matrix(g)).values;
  auto lap = symmetric_eigenvalues(normalized_laplacian(g)).values;
  double sum_adj = 0, sum_sq = 0, sum_lap = 0;
  for (double v : adj) {
    sum_adj += v;
    sum_sq += v * v;
  }
  for (double v : lap) sum_lap += v;
  CHECK(close(sum_adj, 0.0, 1e-8));
  CHECK(close(sum_sq, static_cast<double>(g.volume()), 1e-7));
  CHECK(close(sum_lap, static_cast<double>(g.node_count()), 1e-8));
}

TEST_CASE("adjacency child closed form for k2") {
  // spec(k2) = {1, -1}; children: (1 +/- sqrt(17))/2 and {0, -1}
  auto [hi1, lo1] = adjacency_children(1.0);
  CHECK(close(hi1, (1.0 + std::sqrt(17.0)) / 2.0));
  CHECK(close(lo1, (1.0 - std::sqrt(17.0)) / 2.0));
  auto [hi2, lo2] = adjacency_children(-1.0);
  CHECK(close(hi2, 0.0));
  CHECK(close(lo2, -1.0));
  auto actual = symmetric_eigenvalues(adjacency_matrix(ilt_step(named_seed("k2")))).values;
  std::vector<double> predicted{lo1, lo2, hi2, hi1};
  std::sort(predicted.begin(), predicted.end());
  for (std::size_t i = 0; i < 4; ++i) CHECK(close(actual[i], predicted[i], 1e-7));
}

TEST_CASE("adjacency recurrence holds across a step") {
  for (const std::string name : {"k1", "k2", "c4", "petersen"}) {
    auto check = verify_adjacency_recurrence(named_seed(name));
    CHECK(check.ok);
    CHECK(check.max_deviation < 1e-7);
  }
}

TEST_CASE("spectral gap report") {
  Graph g1 = ilt_step(named_seed("c4"));
  auto r = spectral_gap(g1);
  CHECK(r.lambda_gap == std::max(std::abs(r.lambda1 - 1.0), std::abs(r.lambda_max - 1.0)));
  CHECK(r.lambda_gap > 0.5);
  CHECK(r.rho0 > 0.0);
  CHECK(r.adjacency_ratio >= 1.0);
  CHECK_THROWS_AS(spectral_gap(Graph::from_edges(1, {})), std::invalid_argument);
}

TEST_CASE("lambda1 decreases along the sequence") {
  auto l1 = lambda1_sequence(named_seed("c4"), 4);
  REQUIRE(l1.size() == 5);
  for (std::size_t i = 0; i + 1 < l1.size(); ++i) CHECK(l1[i + 1] < l1[i] - 1e-9);
}

TEST_CASE("gnp graphs are seed-deterministic") {
  Graph a = gnp_graph(64, 0.2, 5);
  Graph b = gnp_graph(64, 0.2, 5);
  Graph c = gnp_graph(64, 0.2, 6);
  CHECK(a.edge_count() == b.edge_count());
  CHECK(a.has_edge(0, 1) == b.has_edge(0, 1));
  CHECK(a.edge_count() != c.edge_count());
  double mean = 0.2 * 64 * 63 / 2;
  CHECK(std::abs(static_cast<double>(a.edge_count()) - mean) < 5 * std::sqrt(mean));
}

TEST_CASE("iltp analytic floor") {
  CHECK(close(iltp_analytic_floor(0.0), 1.0));
  CHECK(close(iltp_analytic_floor(1.0), 0.0));
  CHECK(close(iltp_analytic_floor(0.5), (2.0 - 0.5 - 0.25) / 3.0));
}
