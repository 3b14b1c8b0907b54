#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "iotrelay/analytic/laws.hpp"
#include "iotrelay/app/experiment.hpp"

namespace iotrelay::cli {

enum class CheckStatus { kPass, kFail, kInconclusive };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kInconclusive;
  nlohmann::json detail = nlohmann::json::object();
};

struct ValidationReport {
  nlohmann::json header;  // seed, parameters and sample sizes
  std::vector<CheckResult> checks;

  bool any_failed() const;
  std::size_t count(CheckStatus s) const;
  /// Header line, one line per check, then a summary line.
  std::string to_jsonl() const;
};

struct ValidateOptions {
  // Debug switch: test NFP distance samples against this law. kAsPrinted
  // makes the NFP distance check fail on purpose.
  NfpLaw nfp_law = NfpLaw::kCorrected;
};

/// Runs the oracle battery for `config`:
///   intensity      Monte-Carlo transmitter density vs the analytic one (2%)
///   ks_*           KS distance < 0.01 for the six hop distance/progress laws,
///                  plus a control expecting the as-printed NFP law to be
///                  rejected (KS > 0.05)
///   success_bound  analytic success <= MC + 2 CI on a log-spaced threshold grid
///   order_*        success, density and NAFP orderings and monotonicity
/// Too few samples for a check give kInconclusive rather than kFail. The
/// report depends only on the config and seed, not on the thread count.
ValidationReport run_validation(const ExperimentConfig& config,
                                const ValidateOptions& options = {});

}  // namespace iotrelay::cli
