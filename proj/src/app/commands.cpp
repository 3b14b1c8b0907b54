#include "iotrelay/app/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "iotrelay/analytic/optimizer.hpp"
#include "iotrelay/app/csv.hpp"
#include "iotrelay/app/svg.hpp"
#include "iotrelay/errors.hpp"
#include "iotrelay/sim/estimators.hpp"
#include "iotrelay/units.hpp"

namespace iotrelay::cli {
namespace {

// Analytic layers report bad grid points as DomainError; at the CLI they are
// configuration problems.
template <class F>
auto as_config_error(F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

std::vector<Panel> sweep_panels(const std::vector<SweepPoint>& table,
                                std::span<const Strategy> strategies) {
  std::vector<Panel> panels{
      {"Success probability", "CST (dBm)", "P", false, {}},
      {"Active density", "CST (dBm)", "Lambda (1/m^2)", true, {}},
      {"APP (dotted: delay budget violated)", "CST (dBm)", "APP", false, {}},
  };
  for (Strategy s : strategies) {
    Series ps{std::string(to_string(s)), {}, {}, {}};
    Series ls = ps, as = ps;
    for (const auto& p : table) {
      if (p.strategy != s) continue;
      const double x = w_to_dbm(p.cst_w);
      ps.x.push_back(x);
      ps.y.push_back(p.success_prob);
      ls.x.push_back(x);
      ls.y.push_back(p.active_density);
      as.x.push_back(x);
      as.y.push_back(p.app);
      as.valid.push_back(p.feasible);
    }
    panels[0].series.push_back(std::move(ps));
    panels[1].series.push_back(std::move(ls));
    panels[2].series.push_back(std::move(as));
  }
  return panels;
}

nlohmann::json point_json(const SweepPoint& p) {
  return {{"strategy", std::string(to_string(p.strategy))},
          {"cst_dbm", w_to_dbm(p.cst_w)},
          {"lambda_active", p.active_density},
          {"p_success", p.success_prob},
          {"mean_progress_m", p.mean_progress_m},
          {"nafp", p.nafp},
          {"app", p.app},
          {"delay_s", p.delay_s},
          {"slots_to_access", p.delay.slots_to_access},
          {"retransmissions", p.delay.retransmissions},
          {"hops", p.delay.hops},
          {"slot_s", p.delay.slot_s}};
}

}  // namespace

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory '" + path.parent_path().string() +
                    "': " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

int cmd_sweep(const ExperimentConfig& config, std::ostream& log) {
  const auto grid = resolve_cst_grid(config);
  const auto table = as_config_error(
      [&] { return sweep(config.params, grid, config.strategies, config.threads); });
  const auto csv_path = config.out_dir / "sweep.csv";
  write_text_file(csv_path, sweep_csv(table));
  log << "wrote " << csv_path.string() << " (" << table.size() << " rows)\n";
  if (config.emit_svg) {
    const auto svg_path = config.out_dir / "sweep.svg";
    write_text_file(svg_path, render_svg(sweep_panels(table, config.strategies)));
    log << "wrote " << svg_path.string() << "\n";
  }
  return kExitOk;
}

int cmd_nafp(const ExperimentConfig& config, std::ostream& log) {
  if (config.lambda_grid.empty()) throw ConfigError("lambda_grid must be non-empty");
  const double rt = as_config_error([&] { return derive_ranges(config.params).avg_tx_range_m; });
  std::vector<NafpRow> rows;
  for (double lambda : config.lambda_grid) {
    NetworkParams p = config.params;
    p.device_density = lambda;
    for (Strategy s : config.strategies) {
      const double v = as_config_error([&] { return nafp(s, p); });
      rows.push_back({lambda, s, v, rt * std::sqrt(lambda)});
    }
  }
  const auto csv_path = config.out_dir / "nafp.csv";
  write_text_file(csv_path, nafp_csv(rows));
  log << "wrote " << csv_path.string() << " (" << rows.size() << " rows)\n";
  if (config.emit_svg) {
    Panel panel{"NAFP vs device density", "lambda (1/m^2)", "NAFP", false, {}};
    for (Strategy s : config.strategies) {
      Series series{std::string(to_string(s)), {}, {}, {}};
      for (const auto& r : rows) {
        if (r.strategy != s) continue;
        series.x.push_back(r.lambda);
        series.y.push_back(r.nafp);
      }
      panel.series.push_back(std::move(series));
    }
    Series bound{"R_t sqrt(lambda)", {}, {}, {}};
    for (double lambda : config.lambda_grid) {
      bound.x.push_back(lambda);
      bound.y.push_back(rt * std::sqrt(lambda));
    }
    panel.series.push_back(std::move(bound));
    const auto svg_path = config.out_dir / "nafp.svg";
    write_text_file(svg_path, render_svg({panel}));
    log << "wrote " << svg_path.string() << "\n";
  }
  return kExitOk;
}

int cmd_optimize(const ExperimentConfig& config, std::ostream& log) {
  const auto grid = resolve_cst_grid(config);
  const auto result = as_config_error(
      [&] { return optimize(config.params, grid, config.strategies, config.threads); });

  nlohmann::json report = {{"grid_points", grid.size()},
                           {"delay_budget_s", config.params.delay_budget_s}};
  if (result.best) {
    report["status"] = "optimal";
    report["best"] = point_json(*result.best);
    log << "best: " << to_string(result.best->strategy) << " at CST "
        << format_double(w_to_dbm(result.best->cst_w)) << " dBm, APP "
        << format_double(result.best->app) << ", delay "
        << format_double(result.best->delay_s) << " s\n"
        << "  slots_to_access " << format_double(result.best->delay.slots_to_access)
        << ", retransmissions " << format_double(result.best->delay.retransmissions)
        << ", hops " << format_double(result.best->delay.hops) << ", slot_s "
        << format_double(result.best->delay.slot_s) << "\n";
  } else {
    report["status"] = "no feasible point";
    report["best"] = nullptr;
    log << "no feasible point: every (strategy, CST) pair exceeds the delay budget\n";
  }

  const auto csv_path = config.out_dir / "optimize.csv";
  const auto json_path = config.out_dir / "optimize.json";
  write_text_file(csv_path, optimize_csv(result.table));
  write_text_file(json_path, report.dump(2) + "\n");
  log << "wrote " << csv_path.string() << ", " << json_path.string() << "\n";
  if (config.emit_svg) {
    const auto svg_path = config.out_dir / "optimize.svg";
    auto panels = sweep_panels(result.table, config.strategies);
    write_text_file(svg_path, render_svg({panels[2]}));
    log << "wrote " << svg_path.string() << "\n";
  }
  return kExitOk;
}

int cmd_validate(const ExperimentConfig& config, const ValidateOptions& options,
                 std::ostream& log) {
  const auto report = run_validation(config, options);
  const auto path = config.out_dir / "validate.jsonl";
  write_text_file(path, report.to_jsonl());
  for (const auto& c : report.checks) {
    log << to_string(c.status) << "  " << c.name << "\n";
  }
  log << "pass " << report.count(CheckStatus::kPass) << ", fail "
      << report.count(CheckStatus::kFail) << ", inconclusive "
      << report.count(CheckStatus::kInconclusive) << "; wrote " << path.string() << "\n";
  return report.any_failed() ? kExitValidationFailed : kExitOk;
}

int cmd_export_samples(const ExperimentConfig& config, std::ostream& log) {
  sim::SuccessOptions opts;
  opts.n_trials = config.mc.n_trials;
  opts.seed = config.mc.seed;
  opts.threads = config.threads;
  opts.keep_trials = true;
  const auto estimates = as_config_error(
      [&] { return sim::estimate_success_paired(config.strategies, config.params, opts); });
  const auto path = config.out_dir / "samples.csv";
  write_text_file(path, samples_csv(estimates));
  for (const auto& e : estimates) {
    log << to_string(e.strategy) << ": success " << format_double(e.summary.estimate)
        << " +/- " << format_double(e.summary.ci_halfwidth_95) << " over "
        << e.summary.n_trials << " trials\n";
  }
  log << "wrote " << path.string() << "\n";
  return kExitOk;
}

}  // namespace iotrelay::cli
