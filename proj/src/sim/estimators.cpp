#include "iotrelay/sim/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <optional>

#include "iotrelay/analytic/laws.hpp"
#include "iotrelay/errors.hpp"
#include "iotrelay/numerics/cumulative_table.hpp"
#include "iotrelay/parallel.hpp"

namespace iotrelay::sim {
namespace {

using std::numbers::pi;

constexpr double kZ95 = 1.959963984540054;
constexpr std::size_t kPatternBatch = 8;
constexpr std::size_t kHopChunk = 1024;
constexpr std::size_t kMinEffectiveTrials = 10;

std::uint64_t strategy_code(Strategy s) { return static_cast<std::uint64_t>(s); }

// Trials of one pattern; rows[k][j] is tagged transmitter k under strategy j.
using PatternTrials = std::vector<std::vector<HopTrial>>;

struct SuccessContext {
  std::span<const Strategy> strategies;
  const NetworkParams& params;
  const SuccessOptions& options;
  DerivedRanges ranges;
  double side;
  std::vector<std::unique_ptr<numerics::CumulativeTable>> replay_laws;
};

// Number of probes per side for TaggedMode::kProbeGrid: spacing of at least
// 2 max(R_s, R_t) keeps their contention and relay neighbourhoods disjoint.
std::size_t probes_per_side(double side, const DerivedRanges& ranges) {
  const double spacing =
      2.0 * std::max(ranges.avg_sense_range_m, ranges.avg_tx_range_m);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(side / spacing)));
}

PatternTrials run_pattern(const SuccessContext& ctx, std::size_t pattern_index) {
  const auto& opt = ctx.options;
  Rng rng = make_rng(opt.seed, Stream::kPattern, pattern_index);
  PointPattern pattern =
      sample_ppp(ctx.params.device_density, ctx.side, rng, opt.limits);
  std::optional<std::size_t> center;
  if (opt.tagged == TaggedMode::kCenter) {
    center = pattern.points.size();
    pattern.points.push_back({0.5 * ctx.side, 0.5 * ctx.side});
    pattern.marks.push_back(0.0);
    pattern.tx_flags.push_back(0);
  }
  const double rs = ctx.ranges.avg_sense_range_m;
  pattern = matern_thin(std::move(pattern), rs);
  const Window window = pattern.window();
  const std::vector<std::size_t> tx = pattern.transmitters();
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Tagged origins. A probe is a mark-0 device that is not part of the
  // pattern: adding it would only silence the devices within R_s of it, so
  // each probe sees the pattern's transmitters beyond R_s as interferers.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> tagged;  // pattern index, or kNone for probes
  std::vector<Point2> origins;
  if (center) {
    tagged.push_back(*center);
    origins.push_back(pattern.points[*center]);
  } else if (opt.tagged == TaggedMode::kAllTransmitters) {
    tagged = tx;
    for (std::size_t i : tx) origins.push_back(pattern.points[i]);
  } else {
    const std::size_t m = probes_per_side(ctx.side, ctx.ranges);
    Rng offset_rng = make_rng(opt.seed, Stream::kTrial, pattern_index, kNone);
    const double ox = ctx.side * unit(offset_rng);
    const double oy = ctx.side * unit(offset_rng);
    const double step = ctx.side / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        tagged.push_back(kNone);
        origins.push_back(window.wrap({ox + step * static_cast<double>(i),
                                       oy + step * static_cast<double>(j)}));
      }
    }
  }

  const double tx_range = ctx.ranges.avg_tx_range_m;
  const CellGrid grid(pattern.points, ctx.side, tx_range);

  PatternTrials out;
  std::vector<std::size_t> cand_index;
  std::vector<Point2> cand_points;
  std::vector<Point2> interferers;
  interferers.reserve(tx.size());

  for (std::size_t k = 0; k < tagged.size(); ++k) {
    const std::size_t me = tagged[k];
    const Point2 origin = origins[k];
    Rng trial_rng = make_rng(opt.seed, Stream::kTrial, pattern_index, k);
    const double bearing = 2.0 * pi * unit(trial_rng);
    // Probes silence the transmitters within R_s of themselves.
    auto active = [&](std::size_t j) {
      return pattern.tx_flags[j] != 0 &&
             (me != kNone || window.distance2(origin, pattern.points[j]) > rs * rs);
    };

    cand_index.clear();
    cand_points.clear();
    const double r2 = tx_range * tx_range;
    grid.for_each_candidate(origin, tx_range, [&](std::size_t j) {
      if (j != me && window.distance2(origin, pattern.points[j]) <= r2) {
        cand_index.push_back(j);
        cand_points.push_back(pattern.points[j]);
      }
      return true;
    });

    interferers.clear();
    for (std::size_t j : tx) {
      if (j != me && active(j)) interferers.push_back(pattern.points[j]);
    }

    std::vector<HopTrial> row;
    row.reserve(ctx.strategies.size());
    for (std::size_t si = 0; si < ctx.strategies.size(); ++si) {
      const Strategy s = ctx.strategies[si];
      Rng link_rng = make_rng(opt.seed, Stream::kFading, pattern_index,
                              (k << 4) | strategy_code(s));
      auto relay = select_relay(s, origin, cand_points, bearing, tx_range,
                                link_rng, window);
      if (!relay) break;  // empty half-disc: same for every strategy

      bool receiver_transmits = false;
      if (opt.placement == ReceiverPlacement::kDistanceReplay) {
        const double r = ctx.replay_laws[si]->quantile(unit(link_rng));
        const double theta = pi * (unit(link_rng) - 0.5);
        const Point2 rx = window.wrap({origin.x + r * std::cos(bearing + theta),
                                       origin.y + r * std::sin(bearing + theta)});
        relay = hop_geometry(origin, rx, bearing, window);
      } else {
        receiver_transmits = active(cand_index[relay->index]);
      }

      if (receiver_transmits) {
        // Half duplex: a contention winner cannot receive in the same slot.
        HopTrial t;
        t.hop_distance_m = relay->hop_distance_m;
        t.progress_m = relay->progress_m;
        t.perp_offset_m = relay->perp_offset_m;
        row.push_back(t);
      } else {
        row.push_back(evaluate_sinr(*relay, interferers, ctx.params, link_rng, window));
      }
    }
    if (row.size() == ctx.strategies.size()) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t n) {
  if (n == 0) throw DomainError("wilson_interval: no trials");
  const double nd = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nd;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / nd;
  const double center = (p + z2 / (2.0 * nd)) / denom;
  const double half =
      kZ95 * std::sqrt(p * (1.0 - p) / nd + z2 / (4.0 * nd * nd)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

EstimatorSummary wilson_summary(std::size_t successes, std::size_t n,
                                std::uint64_t seed) {
  const auto [lo, hi] = wilson_interval(successes, n);
  EstimatorSummary s;
  s.estimate = static_cast<double>(successes) / static_cast<double>(n);
  s.n_trials = n;
  s.ci_halfwidth_95 = 0.5 * (hi - lo);
  s.seed = seed;
  return s;
}

double default_window_side(const NetworkParams& params) {
  const DerivedRanges r = derive_ranges(params);
  return 20.0 * std::max(r.avg_sense_range_m, r.avg_tx_range_m);
}

std::vector<SuccessEstimate> estimate_success_paired(
    std::span<const Strategy> strategies, const NetworkParams& params,
    const SuccessOptions& options) {
  if (strategies.empty()) throw DomainError("estimate_success: no strategies");
  if (options.n_trials < 100) {
    throw DomainError("estimate_success: need at least 100 trials");
  }
  SuccessContext ctx{strategies, params, options, derive_ranges(params),
                     options.window_side_m > 0.0 ? options.window_side_m
                                                 : default_window_side(params),
                     {}};
  if (options.placement == ReceiverPlacement::kDistanceReplay) {
    for (Strategy s : strategies) {
      ctx.replay_laws.push_back(std::make_unique<numerics::CumulativeTable>(
          [&](double r) { return pdf_distance(s, r, params); }, 0.0,
          ctx.ranges.avg_tx_range_m));
    }
  }

  const double per_pattern =
      options.tagged == TaggedMode::kCenter ? 1.0
      : options.tagged == TaggedMode::kProbeGrid
          ? static_cast<double>(probes_per_side(ctx.side, ctx.ranges) *
                                probes_per_side(ctx.side, ctx.ranges))
          : std::max(1.0, ctx.side * ctx.side *
                              params.device_density *
                              -std::expm1(-ctx.ranges.mean_contention_count) /
                              std::max(ctx.ranges.mean_contention_count, 1e-12));
  const auto max_patterns = static_cast<std::size_t>(
      std::ceil(4.0 * static_cast<double>(options.n_trials) / per_pattern)) + 64;

  std::vector<SuccessEstimate> out(strategies.size());
  std::vector<std::size_t> successes(strategies.size(), 0);
  for (std::size_t j = 0; j < strategies.size(); ++j) out[j].strategy = strategies[j];

  std::size_t effective = 0;
  std::size_t next_pattern = 0;
  while (effective < options.n_trials && next_pattern < max_patterns) {
    const std::size_t batch = std::min(kPatternBatch, max_patterns - next_pattern);
    std::vector<PatternTrials> results(batch);
    parallel_for(batch, options.threads, [&](std::size_t b) {
      results[b] = run_pattern(ctx, next_pattern + b);
    });
    next_pattern += batch;
    for (const PatternTrials& pattern : results) {
      for (const auto& row : pattern) {
        if (effective == options.n_trials) break;
        ++effective;
        for (std::size_t j = 0; j < row.size(); ++j) {
          successes[j] += row[j].success ? 1 : 0;
          if (options.keep_trials) out[j].trials.push_back(row[j]);
        }
      }
    }
  }
  if (effective < kMinEffectiveTrials) {
    throw InsufficientDataError(
        "estimate_success: only " + std::to_string(effective) +
        " trials had a non-empty forward half-disc");
  }
  for (std::size_t j = 0; j < strategies.size(); ++j) {
    out[j].summary = wilson_summary(successes[j], effective, options.seed);
  }
  return out;
}

EstimatorSummary estimate_success(Strategy strategy, const NetworkParams& params,
                                  std::size_t n_trials, std::uint64_t seed,
                                  SuccessOptions options) {
  options.n_trials = n_trials;
  options.seed = seed;
  const Strategy one[] = {strategy};
  return estimate_success_paired(one, params, options).front().summary;
}

EstimatorSummary estimate_intensity(const NetworkParams& params,
                                    std::size_t n_patterns, std::uint64_t seed,
                                    const IntensityOptions& options) {
  if (n_patterns < 10) {
    throw DomainError("estimate_intensity: need at least 10 patterns");
  }
  const DerivedRanges ranges = derive_ranges(params);
  const double side = options.window_side_m > 0.0 ? options.window_side_m
                                                  : default_window_side(params);
  std::vector<double> density(n_patterns);
  parallel_for(n_patterns, options.threads, [&](std::size_t i) {
    Rng rng = make_rng(seed, Stream::kIntensity, i);
    const PointPattern thinned = matern_thin(
        sample_ppp(params.device_density, side, rng, options.limits),
        ranges.avg_sense_range_m);
    density[i] = static_cast<double>(thinned.transmitters().size()) / (side * side);
  });

  const double n = static_cast<double>(n_patterns);
  double mean = 0.0;
  for (double d : density) mean += d;
  mean /= n;
  double var = 0.0;
  for (double d : density) var += (d - mean) * (d - mean);
  var /= (n - 1.0);

  EstimatorSummary s;
  s.estimate = mean;
  s.n_trials = n_patterns;
  s.ci_halfwidth_95 = kZ95 * std::sqrt(var / n);
  s.seed = seed;
  return s;
}

HopLawSamples sample_hop_laws(Strategy strategy, const NetworkParams& params,
                              std::size_t n_trials, std::uint64_t seed,
                              unsigned threads) {
  if (n_trials < 1000) {
    throw DomainError("sample_hop_laws: need at least 1000 trials");
  }
  const double radius = derive_ranges(params).avg_tx_range_m;
  const double expected = params.device_density * pi * radius * radius;

  HopLawSamples out;
  out.distance_m.resize(n_trials);
  out.progress_m.resize(n_trials);
  out.perp_offset_m.resize(n_trials);

  const std::size_t chunks = (n_trials + kHopChunk - 1) / kHopChunk;
  parallel_for(chunks, threads, [&](std::size_t c) {
    std::poisson_distribution<std::size_t> count_dist(expected);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point2> disc;
    const std::size_t end = std::min(n_trials, (c + 1) * kHopChunk);
    for (std::size_t i = c * kHopChunk; i < end; ++i) {
      Rng rng = make_rng(seed, Stream::kHopLaw, i, strategy_code(strategy));
      std::optional<RelayChoice> relay;
      while (!relay) {
        const double bearing = 2.0 * pi * unit(rng);
        const std::size_t n = count_dist(rng);
        disc.resize(n);
        for (auto& p : disc) {
          const double r = radius * std::sqrt(unit(rng));
          const double phi = 2.0 * pi * unit(rng);
          p = {r * std::cos(phi), r * std::sin(phi)};
        }
        relay = select_relay(strategy, {0.0, 0.0}, disc, bearing, radius, rng);
      }
      out.distance_m[i] = relay->hop_distance_m;
      out.progress_m[i] = relay->progress_m;
      out.perp_offset_m[i] = relay->perp_offset_m;
    }
  });
  return out;
}

}  // namespace iotrelay::sim
