#pragma once

#include <nlohmann/json.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "ilt/generator.hpp"
#include "ilt/graph.hpp"
#include "ilt/metrics.hpp"
#include "ilt/spectral.hpp"

namespace ilt {

using json = nlohmann::json;

// Exact integers serialize as decimal strings, rationals as {"num","den"}.

inline json to_json(const Int& v) { return v.str(); }

inline json to_json(const Rational& r) {
  return json{{"num", r.num().str()}, {"den", r.den().str()}};
}

struct MetricsReport {
  unsigned t = 0;
  std::size_t n = 0;
  std::size_t e = 0;
  std::size_t vol = 0;
  Int wiener;
  Rational avg_dist_unordered;   // W / C(n,2)
  Rational avg_dist_paper;       // W / (n^2 - n)
  Rational ultimate_avg_dist;    // (W0 + e0 + n0) / n0^2, from the seed stats
  std::uint32_t diameter = 0;
  Rational clustering;
  std::map<std::uint64_t, Int> degree_histogram;
  double densification_exponent = 0.0;  // NaN-free only when a fit was run
  bool has_fit = false;
  bool has_distances = true;  // false above the all-pairs BFS budget
};

inline MetricsReport compute_metrics(const Graph& g, const SeedStats& seed_stats, unsigned t) {
  MetricsReport r;
  r.t = t;
  r.n = g.node_count();
  r.e = g.edge_count();
  r.vol = g.volume();
  r.has_distances = g.node_count() <= kBfsBudget;
  if (r.has_distances) {
    r.wiener = wiener_index(g);
    Int n(g.node_count());
    r.avg_dist_unordered = average_distance_unordered(r.wiener, n);
    r.avg_dist_paper = average_distance_ordered(r.wiener, n);
    r.diameter = diameter(g);
  }
  r.ultimate_avg_dist = ultimate_average_distance(seed_stats).ul;
  r.clustering = clustering_coefficient(g).mean;
  r.degree_histogram = degree_histogram(g).entries;
  return r;
}

inline json to_json(const MetricsReport& r) {
  json h = json::object();
  for (const auto& [d, c] : r.degree_histogram) h[std::to_string(d)] = c.str();
  json j{{"t", r.t},
         {"n", r.n},
         {"e", r.e},
         {"vol", r.vol},
         {"ultimate_avg_dist", to_json(r.ultimate_avg_dist)},
         {"clustering", to_json(r.clustering)},
         {"degree_histogram", h}};
  if (r.has_distances) {
    j["wiener"] = to_json(r.wiener);
    j["avg_dist_unordered"] = to_json(r.avg_dist_unordered);
    j["avg_dist_paper"] = to_json(r.avg_dist_paper);
    j["diameter"] = r.diameter;
  }
  if (r.has_fit) j["densification_exponent"] = r.densification_exponent;
  return j;
}

inline std::string format_double(double v, int sig = 12) {
  std::ostringstream s;
  s << std::setprecision(sig) << v;
  return s.str();
}

struct SpectrumReport {
  std::vector<double> laplacian_values;
  std::vector<double> adjacency_values;
  GapReport gap;
  double laplacian_residual = 0.0;
  double adjacency_residual = 0.0;
};

inline SpectrumReport compute_spectrum(const Graph& g) {
  SpectrumReport r;
  auto lap = symmetric_eigenvalues(normalized_laplacian(g));
  auto adj = symmetric_eigenvalues(adjacency_matrix(g));
  r.laplacian_values = lap.values;
  r.adjacency_values = adj.values;
  r.laplacian_residual = lap.residual;
  r.adjacency_residual = adj.residual;
  r.gap = spectral_gap(g);
  return r;
}

inline json to_json(const SpectrumReport& r) {
  auto arr = [](const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(format_double(x));
    return a;
  };
  return json{{"laplacian", arr(r.laplacian_values)},
              {"adjacency", arr(r.adjacency_values)},
              {"lambda1", format_double(r.gap.lambda1)},
              {"lambda_max", format_double(r.gap.lambda_max)},
              {"gap", format_double(r.gap.lambda_gap)},
              {"rho0", format_double(r.gap.rho0)},
              {"rho1_abs", format_double(r.gap.rho1_abs)},
              {"ratio", format_double(r.gap.adjacency_ratio)},
              {"laplacian_residual", format_double(r.laplacian_residual)},
              {"adjacency_residual", format_double(r.adjacency_residual)}};
}

// CSV sweep rows: t, n, e, vol, avg_deg, W, L_unordered, L_paper, diam, C, a_fit
inline std::string metrics_csv_header() {
  return "t,n,e,vol,avg_deg,W,L_unordered,L_paper,diam,C,a_fit";
}

inline std::string metrics_csv_row(const MetricsReport& r) {
  std::ostringstream s;
  s << r.t << "," << r.n << "," << r.e << "," << r.vol << ","
    << format_double(static_cast<double>(r.vol) / static_cast<double>(r.n)) << ","
    << (r.has_distances ? r.wiener.str() : "") << ","
    << (r.has_distances ? format_double(r.avg_dist_unordered.to_double()) : "") << ","
    << (r.has_distances ? format_double(r.avg_dist_paper.to_double()) : "") << ","
    << (r.has_distances ? std::to_string(r.diameter) : "") << ","
    << format_double(r.clustering.to_double()) << ","
    << (r.has_fit ? format_double(r.densification_exponent) : "");
  return s.str();
}

inline std::string spectral_csv_header() {
  return "t,lambda1,lambda_max,gap,rho0,rho1_abs,ratio";
}

inline std::string spectral_csv_row(unsigned t, const GapReport& g) {
  std::ostringstream s;
  s << t << "," << format_double(g.lambda1) << "," << format_double(g.lambda_max) << ","
    << format_double(g.lambda_gap) << "," << format_double(g.rho0) << ","
    << format_double(g.rho1_abs) << "," << format_double(g.adjacency_ratio);
  return s.str();
}

}  // namespace ilt
