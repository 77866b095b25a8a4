// ilt: experiment runner for the iterated-local-transitivity graph model.
//
// Subcommands: generate, metrics, spectral, games, verify, sweep, degree-dist.
// Exit codes: 0 all pass, 1 theorem-check failure, 2 usage error, 3 resource
// budget exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ilt/report.hpp"
#include "ilt/svg.hpp"
#include "ilt/verify.hpp"

namespace {

using namespace ilt;

struct CommonConfig {
  std::string seed_graph = "k1";
  unsigned t = 0;
  double delta = -1.0;  // < 0 means deterministic ILT
  std::uint64_t rng_seed = 1;
  unsigned seeds_count = 10;
  std::string out_dir = ".";
  Budget budget;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Canonical "key = value" dump of the resolved config; its FNV-1a hash tags
/// every file output so artifacts can be traced back to the exact run.
std::string config_hash(const std::string& cmd, const CommonConfig& c,
                        const std::string& extra = "") {
  std::ostringstream s;
  s << "cmd = " << cmd << "\nseed_graph = " << c.seed_graph << "\nt = " << c.t
    << "\ndelta = " << format_double(c.delta) << "\nrng_seed = " << c.rng_seed
    << "\nseeds_count = " << c.seeds_count << "\nbudget_nodes = " << c.budget.max_nodes
    << "\nbudget_edges = " << c.budget.max_edges << "\n" << extra;
  std::ostringstream hex;
  hex << std::hex << fnv1a(s.str());
  return hex.str();
}

/// Densification slope fitted past the pre-asymptotic prefix (the first few
/// steps sit well off the limiting power law).
double densification_fit_tail(const std::vector<std::pair<double, double>>& pts) {
  std::size_t skip = pts.size() > 7 ? 4 : (pts.size() > 3 ? pts.size() - 3 : 0);
  return densification_fit({pts.begin() + static_cast<std::ptrdiff_t>(skip), pts.end()});
}

Graph load_seed(const std::string& name) {
  if (is_named_seed(name)) return named_seed(name);
  std::ifstream in(name);
  if (!in) throw std::invalid_argument("cannot open seed graph file: " + name);
  return parse_graph(in);
}

void write_file(const std::filesystem::path& path, const std::string& hash,
                const std::string& body, bool hash_comment = true) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  if (hash_comment) out << "# config " << hash << "\n";
  out << body;
}

std::vector<Graph> build_sequence(const CommonConfig& c) {
  Graph g0 = load_seed(c.seed_graph);
  if (c.delta >= 0.0)
    return ilt_p_sequence(g0, IltPConfig{c.delta, c.rng_seed, c.t}, c.budget);
  return ilt_sequence(g0, c.t, c.budget);
}

void add_common(CLI::App* cmd, CommonConfig& c, bool with_delta = true) {
  cmd->add_option("--seed-graph", c.seed_graph, "named seed (k1,k2,k3,c4,c5,p4,p5,petersen) or graph file");
  cmd->add_option("--t", c.t, "number of steps");
  if (with_delta) cmd->add_option("--delta", c.delta, "run the randomized ILT(p) variant with this delta");
  cmd->add_option("--rng-seed", c.rng_seed, "64-bit RNG seed");
  cmd->add_option("--seeds", c.seeds_count, "number of RNG seeds for sweeps");
  cmd->add_option("--out-dir", c.out_dir, "output directory");
  cmd->add_option("--budget-nodes", c.budget.max_nodes, "node cap");
  cmd->add_option("--budget-edges", c.budget.max_edges, "edge cap");
}

int cmd_generate(const CommonConfig& c) {
  auto seq = build_sequence(c);
  std::string hash = config_hash("generate", c);
  std::filesystem::create_directories(c.out_dir);
  const char* prefix = c.delta >= 0.0 ? "h" : "g";
  std::size_t n0 = seq[0].node_count();
  for (unsigned t = 0; t < seq.size(); ++t) {
    auto base = std::filesystem::path(c.out_dir) / (prefix + std::to_string(t));
    write_file(base.string() + ".graph", hash, serialize_graph(seq[t]));
    std::ostringstream lin;
    serialize_lineages(n0, t, lin);
    write_file(base.string() + ".lineage", hash, lin.str());
  }
  std::cout << "wrote " << seq.size() << " graphs to " << c.out_dir << " (config " << hash << ")\n";
  return 0;
}

int cmd_metrics(const CommonConfig& c, bool as_json) {
  auto seq = build_sequence(c);
  SeedStats stats{wiener_index(seq[0]), seq[0].edge_count(), seq[0].node_count()};
  std::vector<MetricsReport> rows;
  std::vector<std::pair<double, double>> fit_points;
  for (unsigned t = 0; t < seq.size(); ++t) {
    rows.push_back(compute_metrics(seq[t], stats, t));
    fit_points.emplace_back(static_cast<double>(seq[t].node_count()),
                            static_cast<double>(seq[t].edge_count()));
  }
  if (fit_points.size() >= 3) {
    double a = densification_fit_tail(fit_points);
    for (auto& r : rows) {
      r.densification_exponent = a;
      r.has_fit = true;
    }
  }
  std::string hash = config_hash("metrics", c);
  if (as_json) {
    json j = json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    std::cout << json{{"config", hash}, {"rows", j}}.dump(2) << "\n";
  } else {
    std::cout << "# config " << hash << "\n" << metrics_csv_header() << "\n";
    for (const auto& r : rows) std::cout << metrics_csv_row(r) << "\n";
  }
  return 0;
}

int cmd_spectral(const CommonConfig& c, bool as_json) {
  auto seq = build_sequence(c);
  if (seq.back().node_count() > kDenseBudget)
    throw ResourceError("dense eigensolver budget exceeded at t=" + std::to_string(c.t));
  std::string hash = config_hash("spectral", c);
  if (as_json) {
    json j = json::array();
    for (unsigned t = 0; t < seq.size(); ++t) {
      json row = to_json(compute_spectrum(seq[t]));
      row["t"] = t;
      j.push_back(row);
    }
    std::cout << json{{"config", hash}, {"rows", j}}.dump(2) << "\n";
  } else {
    std::cout << "# config " << hash << "\n" << spectral_csv_header() << "\n";
    for (unsigned t = 0; t < seq.size(); ++t)
      std::cout << spectral_csv_row(t, spectral_gap(seq[t])) << "\n";
  }
  return 0;
}

int cmd_games(const CommonConfig& c, std::size_t max_n_exact, unsigned k_max) {
  auto seq = build_sequence(c);
  std::string hash = config_hash("games", c);
  json rows = json::array();
  for (unsigned t = 0; t < seq.size(); ++t) {
    auto dom = domination_number(seq[t], max_n_exact);
    auto cop = cop_number(seq[t], k_max);
    json row{{"t", t},
             {"gamma", dom.gamma},
             {"dominating_set", dom.dominating_set},
             {"cop_number_bounded", cop.bounded},
             {"cop_win_by_corners", is_cop_win(seq[t])}};
    if (cop.bounded) {
      row["cop_number"] = cop.cop_number;
      row["winning_cop_start"] = cop.winning_start;
    } else {
      row["cop_number_lower_bound"] = k_max + 1;
    }
    rows.push_back(row);
  }
  std::cout << json{{"config", hash}, {"rows", rows}}.dump(2) << "\n";
  return 0;
}

int cmd_verify(const CommonConfig& c, const std::vector<std::string>& only,
               const std::string& perturb, bool seed_set, bool t_set, bool as_json) {
  VerifyOptions opt;
  opt.only = only;
  opt.rng_seed = c.rng_seed;
  opt.seeds_count = c.seeds_count;
  opt.budget = c.budget;
  if (seed_set) opt.seed_override = {c.seed_graph};
  if (t_set) {
    opt.t_growth = c.t;
    opt.t_wiener = c.t;
    opt.t_spectral = c.t;
    opt.t_games = std::min(c.t, 3u);
  }
  if (perturb == "add-edge")
    opt.perturb = Perturb::add_edge;
  else if (!perturb.empty())
    throw CLI::ValidationError("--perturb", "unknown mode: " + perturb);

  auto results = run_verification(opt);
  bool any_fail = false;
  if (as_json) {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back(json{{"id", r.id},
                          {"scope", r.scope},
                          {"predicted", r.predicted},
                          {"observed", r.observed},
                          {"tolerance", r.tolerance},
                          {"pass", r.pass},
                          {"skipped", r.skipped},
                          {"note", r.note}});
      if (!r.pass && !r.skipped) any_fail = true;
    }
    std::cout << json{{"config", config_hash("verify", c)}, {"checks", rows}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      const char* status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
      if (!r.pass && !r.skipped) any_fail = true;
      std::cout << status << "  " << r.id << "  [" << r.scope << "]\n"
                << "      predicted: " << r.predicted << "\n"
                << "      observed:  " << r.observed << "\n"
                << "      tolerance: " << r.tolerance << "\n";
      if (!r.note.empty()) std::cout << "      note:      " << r.note << "\n";
    }
  }
  return any_fail ? 1 : 0;
}

int cmd_sweep(const CommonConfig& c, const std::string& plot) {
  std::filesystem::create_directories(c.out_dir);
  auto out_path = [&](const std::string& name) {
    return (std::filesystem::path(c.out_dir) / name).string();
  };
  std::string hash = config_hash("sweep", c, "plot = " + plot + "\n");

  if (c.delta >= 0.0) {
    // ILT(p) volume sweep: per-seed vol(H_T) and ratio to (3+delta)^T
    std::ostringstream csv;
    csv << "rng_seed,vol_T,ratio_to_pow\n";
    double target = std::pow(3.0 + c.delta, c.t);
    Graph g0 = load_seed(c.seed_graph);
    for (unsigned s = 0; s < c.seeds_count; ++s) {
      auto seq = ilt_p_sequence(g0, IltPConfig{c.delta, c.rng_seed + s, c.t}, c.budget);
      double vol = static_cast<double>(seq.back().volume());
      csv << (c.rng_seed + s) << "," << format_double(vol) << ","
          << format_double(vol / target) << "\n";
    }
    write_file(out_path("sweep.csv"), hash, csv.str());
    std::cout << "wrote " << out_path("sweep.csv") << " (config " << hash << ")\n";
    return 0;
  }

  if (plot == "degree-dist") {
    Graph g0 = load_seed(c.seed_graph);
    auto h = degree_distribution_analytic(g0, c.t);
    std::vector<std::pair<double, double>> pts;
    for (const auto& [d, cnt] : h.entries)
      if (d > 0) pts.emplace_back(static_cast<double>(d), cnt.convert_to<double>());
    SvgPlot p("degree distribution, t=" + std::to_string(c.t), "degree", "count", true, true);
    p.add_points(pts, "#1f6fb2");
    p.annotate("config " + hash);
    std::ofstream svg(out_path("degree-dist.svg"));
    svg << "<!-- config " << hash << " -->\n" << p.render();
    std::cout << "wrote " << out_path("degree-dist.svg") << " (config " << hash << ")\n";
    return 0;
  }

  // default: per-t metrics CSV plus densification scatter
  auto seq = build_sequence(c);
  SeedStats stats{wiener_index(seq[0]), seq[0].edge_count(), seq[0].node_count()};
  std::ostringstream csv;
  csv << metrics_csv_header() << "\n";
  std::vector<std::pair<double, double>> pts;
  for (unsigned t = 0; t < seq.size(); ++t)
    pts.emplace_back(static_cast<double>(seq[t].node_count()),
                     static_cast<double>(seq[t].edge_count()));
  double a = pts.size() >= 3 ? densification_fit_tail(pts) : 0.0;
  for (unsigned t = 0; t < seq.size(); ++t) {
    auto r = compute_metrics(seq[t], stats, t);
    if (pts.size() >= 3) {
      r.densification_exponent = a;
      r.has_fit = true;
    }
    csv << metrics_csv_row(r) << "\n";
  }
  write_file(out_path("sweep.csv"), hash, csv.str());
  if (plot == "densification") {
    SvgPlot p("densification, seed " + c.seed_graph, "n_t", "e_t", true, true);
    p.add_points(pts, "#1f6fb2");
    p.add_line(pts, "#c23b22");
    std::ostringstream slope;
    slope << "fitted slope " << format_double(a, 6) << " | config " << hash;
    p.annotate(slope.str());
    std::ofstream svg(out_path("densification.svg"));
    svg << "<!-- config " << hash << " -->\n" << p.render();
    std::cout << "fitted slope " << format_double(a, 6) << "\n";
    std::cout << "wrote " << out_path("densification.svg") << "\n";
  }
  std::cout << "wrote " << out_path("sweep.csv") << " (config " << hash << ")\n";
  return 0;
}

int cmd_degree_dist(const CommonConfig& c, bool as_json) {
  Graph g0 = load_seed(c.seed_graph);
  auto h = degree_distribution_analytic(g0, c.t);
  std::string hash = config_hash("degree-dist", c);
  if (as_json) {
    json entries = json::object();
    for (const auto& [d, cnt] : h.entries) entries[std::to_string(d)] = cnt.str();
    std::cout << json{{"config", hash}, {"t", c.t}, {"total", h.total.str()},
                      {"histogram", entries}}.dump(2)
              << "\n";
  } else {
    std::cout << "# config " << hash << "\ndegree,count\n";
    for (const auto& [d, cnt] : h.entries) std::cout << d << "," << cnt.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iterated-local-transitivity graph model laboratory"};
  app.require_subcommand(1);
  app.set_config("--config", "", "config file with `key = value` lines");
  app.allow_config_extras(true);

  CommonConfig cfg;
  if (const char* env = std::getenv("ILT_BUDGET_NODES")) cfg.budget.max_nodes = std::stoull(env);

  bool as_json = false;
  std::size_t max_n_exact = 64;
  unsigned k_max = 3;
  std::vector<std::string> only;
  std::string perturb, plot;

  auto* gen = app.add_subcommand("generate", "write G_0..G_t graph files with lineage sidecars");
  add_common(gen, cfg);

  auto* met = app.add_subcommand("metrics", "distance/clustering/densification metrics per step");
  add_common(met, cfg);
  met->add_flag("--json", as_json, "JSON output instead of CSV");

  auto* spec = app.add_subcommand("spectral", "normalized Laplacian and adjacency spectra per step");
  add_common(spec, cfg);
  spec->add_flag("--json", as_json, "JSON output instead of CSV");

  auto* games = app.add_subcommand("games", "domination and cops-and-robber numbers per step");
  add_common(games, cfg);
  games->add_option("--max-n-exact", max_n_exact, "exact-search node budget");
  games->add_option("--k-max", k_max, "largest cop team size to try");

  auto* ver = app.add_subcommand("verify", "run the theorem-verification suite");
  add_common(ver, cfg, false);
  ver->add_option("--only", only, "restrict to these check ids (e.g. thm6)");
  ver->add_option("--perturb", perturb, "fault injection mode: add-edge");
  ver->add_flag("--json", as_json, "JSON report instead of the table");

  auto* sweep = app.add_subcommand("sweep", "CSV + SVG experiment sweeps");
  add_common(sweep, cfg);
  sweep->add_option("--plot", plot, "degree-dist or densification");

  auto* dd = app.add_subcommand("degree-dist", "analytic degree distribution of G_t");
  add_common(dd, cfg, false);
  dd->add_flag("--json", as_json, "JSON output instead of CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(cfg);
    if (met->parsed()) return cmd_metrics(cfg, as_json);
    if (spec->parsed()) return cmd_spectral(cfg, as_json);
    if (games->parsed()) return cmd_games(cfg, max_n_exact, k_max);
    if (ver->parsed())
      return cmd_verify(cfg, only, perturb, ver->count("--seed-graph") > 0,
                        ver->count("--t") > 0, as_json);
    if (sweep->parsed()) return cmd_sweep(cfg, plot);
    if (dd->parsed()) return cmd_degree_dist(cfg, as_json);
  } catch (const ilt::ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
