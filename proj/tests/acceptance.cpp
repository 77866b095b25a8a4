// Acceptance gate: one pass/fail line per criterion, exit nonzero if any
// criterion fails. Tolerances are pinned here and must not drift.

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "ilt/verify.hpp"

using namespace ilt;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!pass) ++failures;
}

bool all_pass(const std::vector<CheckResult>& rs, std::string& detail) {
  if (rs.empty()) {
    detail = "no checks ran";
    return false;
  }
  for (const auto& r : rs)
    if (!r.pass || r.skipped) {
      detail = r.id + " [" + r.scope + "]: " + (r.skipped ? "skipped: " + r.note : r.observed);
      return false;
    }
  detail = rs.back().observed;
  return true;
}

VerifyOptions base_options() {
  VerifyOptions opt;
  opt.seeds = {"c4", "p5", "k3", "petersen"};
  opt.rng_seed = 1;
  opt.seeds_count = 10;
  opt.t_growth = 10;
  opt.t_wiener = 6;
  opt.t_spectral = 6;
  opt.t_games = 3;
  return opt;
}

}  // namespace

int main() {
  VerifyOptions opt = base_options();
  std::vector<CheckResult> rs;
  std::string d;

  // 1. exact growth identities, t <= 10, exact integer equality
  rs.clear();
  check_growth(opt, rs);
  report(1, "exact growth identities (n_t, e_t, vol_t), t <= 10", all_pass(rs, d), d);

  // 2. Wiener identity + average-distance formulas, t <= 6, exact
  rs.clear();
  check_wiener(opt, rs);
  report(2, "Wiener identity and average-distance formulas, t <= 6", all_pass(rs, d), d);

  // 3. distance preservation and constant diameter, exact
  rs.clear();
  check_distances(opt, rs);
  report(3, "distance structure: pair preservation + constant diameter", all_pass(rs, d), d);

  // 4. clustering slope log(7/8) within ±0.015, t in [4,12] from k1
  rs.clear();
  check_clustering_trend(opt, rs);
  report(4, "clustering trend slope -> log(7/8) within 0.015", all_pass(rs, d), d);

  // 5. spectral gap > 0.5 (margin 1e-9) + certified mixing bound
  rs.clear();
  check_spectral_gap(opt, rs);
  report(5, "spectral gap > 1/2 with certified lower bound", all_pass(rs, d), d);

  // 6. lambda_1 strictly decreasing, pairwise margin 1e-9
  rs.clear();
  check_lambda1_decreasing(opt, rs);
  report(6, "lambda_1 strictly decreasing, t in [0,5]", all_pass(rs, d), d);

  // 7. adjacency recurrence within 1e-7 per sorted entry, incl. k2 closed form
  rs.clear();
  check_adjacency_recurrence(opt, rs);
  bool c7 = all_pass(rs, d);
  {
    auto actual = symmetric_eigenvalues(adjacency_matrix(ilt_step(named_seed("k2")))).values;
    std::vector<double> closed{(1.0 - std::sqrt(17.0)) / 2.0, -1.0, 0.0,
                               (1.0 + std::sqrt(17.0)) / 2.0};
    for (std::size_t i = 0; i < 4; ++i)
      if (std::abs(actual[i] - closed[i]) >= 1e-7) {
        c7 = false;
        d = "k2 closed-form entry " + std::to_string(i) + " off";
      }
  }
  report(7, "adjacency eigenvalue recurrence within 1e-7", c7, d);

  // 8. bounded ratio in [1,4] + matched-G(n,p) contrast (factor 2)
  rs.clear();
  check_adjacency_ratio(opt, rs);
  report(8, "adjacency ratio in [1,4] and G(n,p) contrast", all_pass(rs, d), d);

  // 9. gamma and cop number invariance, exact, t <= 3
  rs.clear();
  check_games(opt, rs);
  report(9, "domination and cop number invariance, t <= 3", all_pass(rs, d), d);

  // 10. automorphism embedding, t <= 3 (petersen t <= 2)
  rs.clear();
  check_embedding(opt, rs);
  report(10, "automorphism group embedding", all_pass(rs, d), d);

  // 11. ILT(p) volume ratio in [0.8,1.2] per seed + exponent within 0.05
  rs.clear();
  check_iltp_densification(opt, rs);
  report(11, "ILT(p) densification: volume ratio and exponent", all_pass(rs, d), d);

  // 12. ILT(p) gap >= 0.1 (delta < 1), > 0 (delta = 1), 10 seeds
  rs.clear();
  check_iltp_gap(opt, rs);
  report(12, "ILT(p) spectral gap floor", all_pass(rs, d), d);

  // 13. degree distribution: DP exact, tail >= 0.4 n, log-log non-linear
  rs.clear();
  check_degree_distribution(opt, rs);
  report(13, "degree distribution: DP, heavy tail, power-law rejection", all_pass(rs, d), d);

  // 14. harness self-test: fault injection flips criteria 1, 2 and 7
  {
    VerifyOptions bad = base_options();
    bad.perturb = Perturb::add_edge;
    auto flips = [&](void (*check)(const VerifyOptions&, std::vector<CheckResult>&)) {
      std::vector<CheckResult> r;
      check(bad, r);
      for (const auto& c : r)
        if (!c.pass && !c.skipped) return true;
      return false;
    };
    bool ok = flips(check_growth) && flips(check_wiener) && flips(check_adjacency_recurrence);
    report(14, "fault injection flips the exact-identity checks", ok);
  }

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
