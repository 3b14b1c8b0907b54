#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "iotrelay/analytic/laws.hpp"
#include "iotrelay/analytic/strategy.hpp"
#include "iotrelay/params.hpp"

namespace iotrelay::cli {

/// Carrier-sensing-threshold grid. Without explicit bounds the grid spans the
/// default window (R_s from 3 R_t down to R_t) at points_per_decade density.
struct CstGridSpec {
  std::optional<double> min_dbm;
  std::optional<double> max_dbm;
  std::size_t points = 0;  // explicit grids only
  std::size_t points_per_decade = 60;
};

struct McSettings {
  std::size_t n_trials = 10000;       // hop transmissions per success estimate
  std::size_t n_patterns = 100;       // patterns for the intensity estimate
  std::size_t n_hop_samples = 100000; // samples per hop law
  std::size_t bound_points = 10;      // thresholds in the lower-bound check
  std::uint64_t seed = 1;
};

struct ExperimentConfig {
  NetworkParams params = default_params();
  CstGridSpec cst_grid;
  std::vector<Strategy> strategies{kAllStrategies.begin(), kAllStrategies.end()};
  McSettings mc;
  std::vector<double> lambda_grid{0.1, 0.5, 1.0, 2.0};
  std::filesystem::path out_dir = "out";
  bool emit_svg = false;
  unsigned threads = 0;
};

/// Parses a flat JSON object: NetworkParams keys (see params_from_json) plus
/// cst_min_dbm, cst_max_dbm, cst_points, cst_points_per_decade, strategies,
/// mc_trials, mc_patterns, mc_hop_samples, mc_bound_points, seed, threads,
/// lambda_grid, out_dir, emit_svg. Unknown keys are a ConfigError.
ExperimentConfig config_from_json(const nlohmann::json& doc);

/// Reads and parses a config file; IoError when unreadable, ConfigError when
/// malformed.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Thresholds (watts, ascending) described by the grid spec.
std::vector<double> resolve_cst_grid(const ExperimentConfig& config);

}  // namespace iotrelay::cli
