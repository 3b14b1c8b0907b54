// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "iotrelay/analytic/interference.hpp"
#include "iotrelay/analytic/laws.hpp"
#include "iotrelay/analytic/optimizer.hpp"
#include "iotrelay/analytic/performance.hpp"
#include "iotrelay/app/experiment.hpp"
#include "iotrelay/app/validate.hpp"
#include "iotrelay/numerics/ks.hpp"
#include "iotrelay/numerics/quadrature.hpp"
#include "iotrelay/sim/estimators.hpp"
#include "iotrelay/units.hpp"

using namespace iotrelay;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

NetworkParams with_ranges(double lambda, double rt, double rs) {
  NetworkParams p = default_params();
  p.device_density = lambda;
  p.detect_min_w = threshold_for_range(p.tx_power_w, p.fading_rate, rt, p.path_loss_exp);
  p.cst_w = threshold_for_range(p.tx_power_w, p.fading_rate, rs, p.path_loss_exp);
  return p;
}

double quad(const std::function<double(double)>& f, double lo, double hi) {
  return numerics::integrate(f, lo, hi, {1e-13, 1e-11, 5000}).value;
}

// 1. Matern intensity, lambda = 0.5, R_s = 10, L = 200, 100 patterns, 2%.
Outcome matern_intensity() {
  const NetworkParams p = default_params();
  sim::IntensityOptions opts;
  opts.window_side_m = 200.0;
  const auto est = sim::estimate_intensity(p, 100, 1, opts);
  const double analytic = active_density(p);
  const double rel = std::abs(est.estimate - analytic) / analytic;
  return {rel <= 0.02 && std::abs(analytic - 3.1831e-3) < 5e-8,
          fmt("estimate %.6e", est.estimate) + fmt(" analytic %.6e", analytic) +
              fmt(" rel err %.4f", rel)};
}

// 2. All six pdfs integrate to 1 +- 1e-6 over lambda in {0.1,0.5,2} x R_t in {5,10}.
Outcome pdf_normalisation() {
  double worst = 0.0;
  for (double lambda : {0.1, 0.5, 2.0}) {
    for (double rt : {5.0, 10.0}) {
      const NetworkParams p = with_ranges(lambda, rt, rt);
      for (Strategy s : kAllStrategies) {
        worst = std::max(worst, std::abs(quad([&](double r) { return pdf_distance(s, r, p); },
                                              0.0, rt) - 1.0));
        worst = std::max(worst, std::abs(quad([&](double z) { return pdf_progress(s, z, p); },
                                              0.0, rt) - 1.0));
      }
    }
  }
  return {worst <= 1e-6, fmt("max |mass - 1| = %.2e", worst)};
}

// 3. KS < 0.01 at n = 1e5 for the six laws; as-printed NFP law KS > 0.05.
Outcome law_validation() {
  const NetworkParams p = default_params();
  const std::size_t n = 100000;
  double worst = 0.0;
  double control = 0.0;
  std::string detail;
  for (Strategy s : kAllStrategies) {
    auto samples = sim::sample_hop_laws(s, p, n, 2024);
    std::sort(samples.distance_m.begin(), samples.distance_m.end());
    std::sort(samples.progress_m.begin(), samples.progress_m.end());
    const double kd = numerics::ks_statistic(
        samples.distance_m, [&](double r) { return cdf_distance(s, r, p); });
    const double kz = numerics::ks_statistic(
        samples.progress_m, [&](double z) { return cdf_progress(s, z, p); });
    worst = std::max({worst, kd, kz});
    detail += std::string(to_string(s)) + fmt(" r %.4f", kd) + fmt(" z %.4f; ", kz);
    if (s == Strategy::kNfp) {
      control = numerics::ks_statistic(samples.distance_m, [&](double r) {
        return cdf_distance(s, r, p, NfpLaw::kAsPrinted);
      });
    }
  }
  return {worst < 0.01 && control > 0.05, detail + fmt("as-printed NFP %.4f", control)};
}

// 4. Analytic success <= MC + 2 CI, every strategy, 10-point grid, n = 1e4.
Outcome lower_bound() {
  const NetworkParams base = default_params();
  const auto window = default_cst_window(base);
  const auto grid = log_grid(window.lo_w, window.hi_w, 10);
  double worst_margin = INFINITY;
  for (double cst : grid) {
    NetworkParams p = base;
    p.cst_w = cst;
    sim::SuccessOptions opts;
    opts.n_trials = 10000;
    opts.seed = 1;
    const auto mc = sim::estimate_success_paired(kAllStrategies, p, opts);
    for (const auto& e : mc) {
      const double margin = e.summary.estimate + 2.0 * e.summary.ci_halfwidth_95 -
                            success_probability(e.strategy, p);
      worst_margin = std::min(worst_margin, margin);
    }
  }
  return {worst_margin >= 0.0, fmt("min (MC + 2 CI - analytic) = %.5f", worst_margin)};
}

// 5. Success and NAFP orderings, monotonicity, NAFP cap.
Outcome orderings() {
  const NetworkParams p = default_params();
  const auto grid = default_cst_grid(p);
  const std::vector<Strategy> order{Strategy::kNfp, Strategy::kRfp, Strategy::kMfr};
  const auto table = sweep(p, grid, order);
  const std::size_t n = grid.size();
  int violations = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pn = table[i].success_prob;
    const double pr = table[n + i].success_prob;
    const double pm = table[2 * n + i].success_prob;
    if (pn < pr || pr < pm) ++violations;
    if (i > 0) {
      for (std::size_t k = 0; k < 3; ++k) {
        if (table[k * n + i].success_prob > table[k * n + i - 1].success_prob + 1e-9) ++violations;
      }
      if (table[i].active_density < table[i - 1].active_density) ++violations;
    }
  }
  for (double lambda : {0.1, 0.5, 1.0, 2.0}) {
    NetworkParams q = p;
    q.device_density = lambda;
    const double nm = nafp(Strategy::kMfr, q);
    const double nr = nafp(Strategy::kRfp, q);
    const double nn = nafp(Strategy::kNfp, q);
    const double cap = derive_ranges(q).avg_tx_range_m * std::sqrt(lambda);
    if (nm < nr || nr < nn || nm > cap || nr > cap || nn > cap) ++violations;
  }
  return {violations == 0, std::to_string(n) + " grid points, " +
                               std::to_string(violations) + " violations"};
}

// 6. MFR progress CDF: quadrature of the density vs closed form at 50 points.
Outcome mfr_cdf_identity() {
  const NetworkParams p = default_params();
  double worst = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double z = 10.0 * i / 50.0;
    const double q = quad([&](double t) { return pdf_progress(Strategy::kMfr, t, p); }, 0.0, z);
    worst = std::max(worst, std::abs(q - mfr_progress_cdf(z, p)));
  }
  return {worst <= 1e-8, fmt("max diff %.2e", worst)};
}

// 7. eta = 4 closed-form LT factor vs general quadrature at 20 (r, rho_th) points.
Outcome lt_paths() {
  NetworkParams p = default_params();
  double worst = 0.0;
  const auto window = default_cst_window(p);
  for (double cst : log_grid(window.lo_w, window.hi_w, 4)) {
    p.cst_w = cst;
    for (double r : {0.5, 2.5, 5.0, 7.5, 10.0}) {
      const double s = p.fading_rate * p.sinr_threshold_lin * std::pow(r, 4.0) / p.tx_power_w;
      worst = std::max(worst, std::abs(lt_lower_bound_eta4(s, r, p) -
                                       lt_lower_bound_numeric(s, r, p)));
    }
  }
  return {worst <= 1e-6, fmt("max diff %.2e", worst)};
}

// 8. RFP mean progress = 4 R_t / (3 pi).
Outcome rfp_mean() {
  const NetworkParams p = default_params();
  const double rt = derive_ranges(p).avg_tx_range_m;
  const double expected = 4.0 * rt / (3.0 * pi);
  const double rel = std::abs(mean_progress(Strategy::kRfp, p) - expected) / expected;
  return {rel <= 1e-9, fmt("rel err %.2e", rel)};
}

// 9. beta = 0 dB selects RFP, beta = 10 dB selects NFP; some strategy is
// flagged infeasible at both ends of the grid.
Outcome optimizer_reproduction() {
  std::string detail;
  bool pass = true;
  bool flagged_both_ends = false;
  for (auto [beta_db, want] : {std::pair{0.0, Strategy::kRfp}, std::pair{10.0, Strategy::kNfp}}) {
    NetworkParams p = default_params();
    p.sinr_threshold_lin = db_to_lin(beta_db);
    const auto grid = default_cst_grid(p);
    const auto res = optimize(p, grid, kAllStrategies);
    const std::string got = res.best ? std::string(to_string(res.best->strategy)) : "none";
    detail += fmt("beta %.0f dB -> ", beta_db) + got + " (want " +
              std::string(to_string(want)) + "); ";
    if (!res.best || res.best->strategy != want) pass = false;
    const std::size_t n = grid.size();
    for (std::size_t k = 0; k < 3; ++k) {
      if (!res.table[k * n].feasible && !res.table[k * n + n - 1].feasible) {
        flagged_both_ends = true;
      }
    }
  }
  detail += std::string("infeasible at both grid ends: ") + (flagged_both_ends ? "yes" : "no");
  return {pass && flagged_both_ends, detail};
}

// 10. validate reports are byte-identical across runs and thread counts.
Outcome validate_determinism() {
  cli::ExperimentConfig cfg;
  cfg.mc.seed = 7;
  cfg.threads = 0;
  const std::string a = cli::run_validation(cfg).to_jsonl();
  const std::string b = cli::run_validation(cfg).to_jsonl();
  cfg.threads = 1;
  const std::string c = cli::run_validation(cfg).to_jsonl();
  cfg.threads = 4;
  const std::string d = cli::run_validation(cfg).to_jsonl();
  const bool same = a == b && a == c && a == d;
  return {same, std::to_string(a.size()) + " bytes, " + (same ? "identical" : "different")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {"C1 Matern intensity within 2%", matern_intensity},
      {"C2 pdf normalisation within 1e-6", pdf_normalisation},
      {"C3 hop-law KS < 0.01, as-printed NFP rejected", law_validation},
      {"C4 analytic success is a lower bound (MC + 2 CI)", lower_bound},
      {"C5 success/density/NAFP orderings", orderings},
      {"C6 MFR progress CDF closed form within 1e-8", mfr_cdf_identity},
      {"C7 closed-form vs quadrature LT within 1e-6", lt_paths},
      {"C8 RFP mean progress 4R/(3pi) within 1e-9", rfp_mean},
      {"C9 optimizer picks RFP at 0 dB and NFP at 10 dB", optimizer_reproduction},
      {"C10 validate report deterministic across runs/threads", validate_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s  %s  [%s] (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
