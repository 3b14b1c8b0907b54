#include "iotrelay/app/validate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "iotrelay/analytic/interference.hpp"
#include "iotrelay/analytic/optimizer.hpp"
#include "iotrelay/analytic/performance.hpp"
#include "iotrelay/errors.hpp"
#include "iotrelay/numerics/ks.hpp"
#include "iotrelay/sim/estimators.hpp"
#include "iotrelay/units.hpp"

namespace iotrelay::cli {
namespace {

constexpr double kIntensityRelTol = 0.02;
constexpr double kKsThreshold = 0.01;
constexpr double kKsControlThreshold = 0.05;
constexpr double kKsAlpha = 0.01;
constexpr std::size_t kMinHopSamples = 1000;
constexpr std::size_t kMinTrials = 100;
constexpr std::size_t kMinPatterns = 10;
// Slack for comparisons between quadrature results that may tie.
constexpr double kOrderSlack = 1e-9;

CheckResult inconclusive(std::string name, std::string reason) {
  CheckResult r{std::move(name), CheckStatus::kInconclusive, {}};
  r.detail["reason"] = std::move(reason);
  return r;
}

CheckResult check_intensity(const ExperimentConfig& cfg) {
  const std::string name = "intensity";
  if (cfg.mc.n_patterns < kMinPatterns) {
    return inconclusive(name, "fewer than 10 patterns");
  }
  const double analytic = active_density(cfg.params);
  sim::IntensityOptions opts;
  opts.threads = cfg.threads;
  sim::EstimatorSummary est;
  try {
    est = sim::estimate_intensity(cfg.params, cfg.mc.n_patterns, cfg.mc.seed, opts);
  } catch (const ResourceError& e) {
    return inconclusive(name, e.what());
  }
  const double rel = (est.estimate - analytic) / analytic;
  CheckResult r{name, std::abs(rel) <= kIntensityRelTol ? CheckStatus::kPass
                                                         : CheckStatus::kFail, {}};
  r.detail["analytic"] = analytic;
  r.detail["estimate"] = est.estimate;
  r.detail["ci_halfwidth_95"] = est.ci_halfwidth_95;
  r.detail["n_patterns"] = est.n_trials;
  r.detail["rel_error"] = rel;
  r.detail["tolerance"] = kIntensityRelTol;
  return r;
}

CheckResult ks_check(std::string name, std::vector<double> samples,
                     const std::function<double(double)>& cdf, bool expect_reject) {
  std::sort(samples.begin(), samples.end());
  const double stat = numerics::ks_statistic(samples, cdf);
  const double crit = numerics::ks_critical_value(samples.size(), kKsAlpha);
  CheckResult r{std::move(name), CheckStatus::kFail, {}};
  r.detail["ks"] = stat;
  r.detail["n"] = samples.size();
  r.detail["critical_value_1pct"] = crit;
  if (expect_reject) {
    r.detail["threshold_min"] = kKsControlThreshold;
    if (stat > kKsControlThreshold) r.status = CheckStatus::kPass;
  } else {
    r.detail["threshold"] = kKsThreshold;
    if (stat < kKsThreshold) {
      r.status = CheckStatus::kPass;
    } else if (crit >= kKsThreshold) {
      // Sampling noise alone can exceed the threshold at this sample size.
      r.status = CheckStatus::kInconclusive;
      r.detail["reason"] = "sample too small to resolve the KS threshold";
    }
  }
  return r;
}

void add_ks_checks(const ExperimentConfig& cfg, const ValidateOptions& opt,
                   std::vector<CheckResult>& out) {
  const std::size_t n = cfg.mc.n_hop_samples;
  for (Strategy s : kAllStrategies) {
    const std::string tag(to_string(s));
    if (n < kMinHopSamples) {
      out.push_back(inconclusive("ks_distance_" + tag, "fewer than 1000 hop samples"));
      out.push_back(inconclusive("ks_progress_" + tag, "fewer than 1000 hop samples"));
      if (s == Strategy::kNfp) {
        out.push_back(inconclusive("ks_distance_NFP_as_printed_rejected",
                                   "fewer than 1000 hop samples"));
      }
      continue;
    }
    const auto& params = cfg.params;
    sim::HopLawSamples samples;
    try {
      samples = sim::sample_hop_laws(s, params, n, cfg.mc.seed, cfg.threads);
    } catch (const ResourceError& e) {
      out.push_back(inconclusive("ks_distance_" + tag, e.what()));
      out.push_back(inconclusive("ks_progress_" + tag, e.what()));
      continue;
    }
    const NfpLaw law = s == Strategy::kNfp ? opt.nfp_law : NfpLaw::kCorrected;
    out.push_back(ks_check(
        "ks_distance_" + tag, samples.distance_m,
        [&](double r) { return cdf_distance(s, r, params, law); }, false));
    out.push_back(ks_check(
        "ks_progress_" + tag, samples.progress_m,
        [&](double z) { return cdf_progress(s, z, params); }, false));
    if (s == Strategy::kNfp) {
      out.push_back(ks_check(
          "ks_distance_NFP_as_printed_rejected", samples.distance_m,
          [&](double r) { return cdf_distance(s, r, params, NfpLaw::kAsPrinted); },
          true));
    }
  }
}

CheckResult check_success_bound(const ExperimentConfig& cfg,
                                std::span<const double> cst_grid) {
  const std::string name = "success_bound";
  if (cfg.mc.n_trials < kMinTrials) return inconclusive(name, "fewer than 100 trials");
  if (cfg.mc.bound_points == 0) return inconclusive(name, "no grid points");

  const auto grid = log_grid(cst_grid.front(), cst_grid.back(), cfg.mc.bound_points);
  CheckResult r{name, CheckStatus::kPass, {}};
  nlohmann::json points = nlohmann::json::array();
  bool any_inconclusive = false;
  for (double cst : grid) {
    NetworkParams p = cfg.params;
    p.cst_w = cst;
    sim::SuccessOptions opts;
    opts.n_trials = cfg.mc.n_trials;
    opts.seed = cfg.mc.seed;
    opts.threads = cfg.threads;
    std::vector<sim::SuccessEstimate> mc;
    try {
      mc = sim::estimate_success_paired(cfg.strategies, p, opts);
    } catch (const InsufficientDataError& e) {
      any_inconclusive = true;
      points.push_back({{"cst_dbm", w_to_dbm(cst)}, {"reason", e.what()}});
      continue;
    } catch (const ResourceError& e) {
      any_inconclusive = true;
      points.push_back({{"cst_dbm", w_to_dbm(cst)}, {"reason", e.what()}});
      continue;
    }
    for (const auto& est : mc) {
      const double analytic = success_probability(est.strategy, p);
      const double limit = est.summary.estimate + 2.0 * est.summary.ci_halfwidth_95;
      const bool ok = analytic <= limit;
      if (!ok) r.status = CheckStatus::kFail;
      points.push_back({{"cst_dbm", w_to_dbm(cst)},
                        {"strategy", std::string(to_string(est.strategy))},
                        {"analytic", analytic},
                        {"mc", est.summary.estimate},
                        {"ci_halfwidth_95", est.summary.ci_halfwidth_95},
                        {"n_trials", est.summary.n_trials},
                        {"ok", ok}});
    }
  }
  if (any_inconclusive && r.status == CheckStatus::kPass) {
    r.status = CheckStatus::kInconclusive;
  }
  r.detail["points"] = std::move(points);
  return r;
}

const SweepPoint& row(const std::vector<SweepPoint>& table, std::size_t strategy_idx,
                      std::size_t n_grid, std::size_t i) {
  return table[strategy_idx * n_grid + i];
}

void add_order_checks(const ExperimentConfig& cfg, std::span<const double> grid,
                      std::vector<CheckResult>& out) {
  // Rows in the order NFP, RFP, MFR.
  const std::vector<Strategy> order{Strategy::kNfp, Strategy::kRfp, Strategy::kMfr};
  const auto table = sweep(cfg.params, grid, order, cfg.threads);
  const std::size_t n = grid.size();

  {
    CheckResult r{"order_success_strategies", CheckStatus::kPass, {}};
    nlohmann::json bad = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
      const double pn = row(table, 0, n, i).success_prob;
      const double pr = row(table, 1, n, i).success_prob;
      const double pm = row(table, 2, n, i).success_prob;
      if (pn + kOrderSlack < pr || pr + kOrderSlack < pm) {
        bad.push_back({{"cst_dbm", w_to_dbm(grid[i])}, {"NFP", pn}, {"RFP", pr}, {"MFR", pm}});
      }
    }
    if (!bad.empty()) r.status = CheckStatus::kFail;
    r.detail["grid_points"] = n;
    r.detail["violations"] = std::move(bad);
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"order_success_monotone", CheckStatus::kPass, {}};
    nlohmann::json bad = nlohmann::json::array();
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t i = 1; i < n; ++i) {
        const double prev = row(table, k, n, i - 1).success_prob;
        const double cur = row(table, k, n, i).success_prob;
        if (cur > prev + kOrderSlack) {
          bad.push_back({{"strategy", std::string(to_string(order[k]))},
                         {"cst_dbm", w_to_dbm(grid[i])}, {"prev", prev}, {"cur", cur}});
        }
      }
    }
    if (!bad.empty()) r.status = CheckStatus::kFail;
    r.detail["violations"] = std::move(bad);
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"order_density_monotone", CheckStatus::kPass, {}};
    nlohmann::json bad = nlohmann::json::array();
    for (std::size_t i = 1; i < n; ++i) {
      const double prev = row(table, 0, n, i - 1).active_density;
      const double cur = row(table, 0, n, i).active_density;
      if (cur + kOrderSlack * prev < prev) {
        bad.push_back({{"cst_dbm", w_to_dbm(grid[i])}, {"prev", prev}, {"cur", cur}});
      }
    }
    if (!bad.empty()) r.status = CheckStatus::kFail;
    r.detail["violations"] = std::move(bad);
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"order_nafp", CheckStatus::kPass, {}};
    nlohmann::json rows = nlohmann::json::array();
    const double rt = derive_ranges(cfg.params).avg_tx_range_m;
    for (double lambda : cfg.lambda_grid) {
      NetworkParams p = cfg.params;
      p.device_density = lambda;
      const double nn = nafp(Strategy::kNfp, p);
      const double nr = nafp(Strategy::kRfp, p);
      const double nm = nafp(Strategy::kMfr, p);
      const double cap = rt * std::sqrt(lambda);
      const bool ok = nm + kOrderSlack >= nr && nr + kOrderSlack >= nn &&
                      std::max({nn, nr, nm}) <= cap * (1.0 + kOrderSlack);
      if (!ok) r.status = CheckStatus::kFail;
      rows.push_back({{"lambda", lambda}, {"MFR", nm}, {"RFP", nr}, {"NFP", nn},
                      {"nafp_max", cap}, {"ok", ok}});
    }
    r.detail["rows"] = std::move(rows);
    out.push_back(std::move(r));
  }
}

nlohmann::json strategy_names(std::span<const Strategy> strategies) {
  nlohmann::json names = nlohmann::json::array();
  for (Strategy s : strategies) names.push_back(std::string(to_string(s)));
  return names;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

bool ValidationReport::any_failed() const { return count(CheckStatus::kFail) > 0; }

std::size_t ValidationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

std::string ValidationReport::to_jsonl() const {
  std::string out = header.dump();
  out += '\n';
  for (const auto& c : checks) {
    nlohmann::json line = {{"check", c.name}, {"status", std::string(to_string(c.status))}};
    line["detail"] = c.detail;
    out += line.dump();
    out += '\n';
  }
  nlohmann::json summary = {{"summary",
                             {{"pass", count(CheckStatus::kPass)},
                              {"fail", count(CheckStatus::kFail)},
                              {"inconclusive", count(CheckStatus::kInconclusive)}}}};
  out += summary.dump();
  out += '\n';
  return out;
}

ValidationReport run_validation(const ExperimentConfig& config,
                                const ValidateOptions& options) {
  ValidationReport report;
  const auto grid = resolve_cst_grid(config);
  report.header = {
      {"report", "validate"},
      {"seed", config.mc.seed},
      {"nfp_law", options.nfp_law == NfpLaw::kCorrected ? "corrected" : "as_printed"},
      {"params", params_to_json(config.params)},
      {"strategies", strategy_names(config.strategies)},
      {"mc_trials", config.mc.n_trials},
      {"mc_patterns", config.mc.n_patterns},
      {"mc_hop_samples", config.mc.n_hop_samples},
      {"mc_bound_points", config.mc.bound_points},
      {"cst_grid_points", grid.size()},
  };
  report.checks.push_back(check_intensity(config));
  add_ks_checks(config, options, report.checks);
  report.checks.push_back(check_success_bound(config, grid));
  add_order_checks(config, grid, report.checks);
  return report;
}

}  // namespace iotrelay::cli
