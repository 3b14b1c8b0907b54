#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "iotrelay/analytic/strategy.hpp"
#include "iotrelay/params.hpp"
#include "iotrelay/sim/point_pattern.hpp"
#include "iotrelay/sim/sinr.hpp"

namespace iotrelay::sim {

/// Monte-Carlo estimate with its 95% confidence half-width.
struct EstimatorSummary {
  double estimate = 0.0;
  std::size_t n_trials = 0;
  double ci_halfwidth_95 = 0.0;
  std::uint64_t seed = 0;
};

/// Wilson score interval for `successes` out of `n`; returns (low, high).
std::pair<double, double> wilson_interval(std::size_t successes, std::size_t n);

/// Success fraction with the Wilson half-width (high - low) / 2.
EstimatorSummary wilson_summary(std::size_t successes, std::size_t n,
                                std::uint64_t seed);

/// Default window side: 20 * max(R_s, R_t).
double default_window_side(const NetworkParams& params);

enum class TaggedMode {
  // Mark-0 devices added on a randomly shifted grid (spacing at least
  // 2 max(R_s, R_t)), each evaluated as if it were the only added device.
  kProbeGrid,
  // Every contention winner of each pattern serves as a tagged transmitter.
  kAllTransmitters,
  // One device added at the window centre with the smallest possible mark.
  kCenter,
};

enum class ReceiverPlacement {
  kRelaySelection,  // receiver chosen among devices by the strategy
  kDistanceReplay,  // receiver at a distance drawn from the analytic law
};

struct SuccessOptions {
  std::size_t n_trials = 10000;
  std::uint64_t seed = 1;
  double window_side_m = 0.0;  // 0 selects default_window_side
  TaggedMode tagged = TaggedMode::kProbeGrid;
  ReceiverPlacement placement = ReceiverPlacement::kRelaySelection;
  unsigned threads = 0;
  bool keep_trials = false;
  SampleLimits limits{};
};

struct SuccessEstimate {
  Strategy strategy = Strategy::kNfp;
  EstimatorSummary summary;
  std::vector<HopTrial> trials;  // filled when keep_trials is set
};

/// Paired estimate of the per-hop success probability: all strategies share
/// the same patterns, tagged transmitters and destination bearings, each with
/// its own fading draws. Trials with an empty forward half-disc are skipped.
/// Throws InsufficientDataError below 10 effective trials and DomainError when
/// n_trials < 100.
std::vector<SuccessEstimate> estimate_success_paired(
    std::span<const Strategy> strategies, const NetworkParams& params,
    const SuccessOptions& options);

EstimatorSummary estimate_success(Strategy strategy, const NetworkParams& params,
                                  std::size_t n_trials, std::uint64_t seed,
                                  SuccessOptions options = {});

struct IntensityOptions {
  double window_side_m = 0.0;  // 0 selects default_window_side
  unsigned threads = 0;
  SampleLimits limits{};
};

/// Mean density of contention winners over `n_patterns` (>= 10) thinned PPPs.
EstimatorSummary estimate_intensity(const NetworkParams& params,
                                    std::size_t n_patterns, std::uint64_t seed,
                                    const IntensityOptions& options = {});

struct HopLawSamples {
  std::vector<double> distance_m;
  std::vector<double> progress_m;
  std::vector<double> perp_offset_m;
};

/// Raw hop distances and progresses from `n_trials` (>= 1000) fresh PPPs, each
/// conditioned on a non-empty forward half-disc. Samples are in trial order.
HopLawSamples sample_hop_laws(Strategy strategy, const NetworkParams& params,
                              std::size_t n_trials, std::uint64_t seed,
                              unsigned threads = 0);

}  // namespace iotrelay::sim
