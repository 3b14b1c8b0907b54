#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "iotrelay/app/experiment.hpp"
#include "iotrelay/app/validate.hpp"

namespace iotrelay::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailed = 1,
  kExitConfigError = 2,
  kExitIoError = 3,
};

/// Creates the parent directory if needed and writes `content`; IoError with
/// the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// Each command writes its outputs into config.out_dir and a short summary to
/// `log`, returning an exit code. Configuration problems raise ConfigError,
/// output problems IoError.

/// sweep.csv (+ sweep.svg): every strategy over the threshold grid.
int cmd_sweep(const ExperimentConfig& config, std::ostream& log);

/// nafp.csv (+ nafp.svg): NAFP per strategy over config.lambda_grid.
int cmd_nafp(const ExperimentConfig& config, std::ostream& log);

/// optimize.csv, optimize.json (+ optimize.svg): the full table with the delay
/// decomposition and the selected pair, or "no feasible point".
int cmd_optimize(const ExperimentConfig& config, std::ostream& log);

/// validate.jsonl: the oracle battery. Returns kExitValidationFailed when any
/// check fails; inconclusive checks alone do not fail the run.
int cmd_validate(const ExperimentConfig& config, const ValidateOptions& options,
                 std::ostream& log);

/// samples.csv: raw Monte-Carlo hop trials at params.cst_w.
int cmd_export_samples(const ExperimentConfig& config, std::ostream& log);

}  // namespace iotrelay::cli
