#pragma once

#include <optional>
#include <span>
#include <vector>

#include "iotrelay/analytic/performance.hpp"

namespace iotrelay {

struct CstWindow {
  double lo_w = 0.0;  // makes R_s = 3 R_t
  double hi_w = 0.0;  // makes R_s = R_t
};

/// Default sweep window: from the threshold giving R_s = 3 R_t up to the one
/// giving R_s = R_t.
CstWindow default_cst_window(const NetworkParams& params);

/// `points` log-spaced values from lo to hi inclusive (a single point is lo).
std::vector<double> log_grid(double lo, double hi, std::size_t points);

/// log_grid over the default window with `points_per_decade` density.
std::vector<double> default_cst_grid(const NetworkParams& params,
                                     std::size_t points_per_decade = 60);

/// Evaluates every (strategy, cst) pair. Rows are grouped by strategy in the
/// order given, each group in grid order. Grid points are evaluated
/// concurrently on up to `threads` workers (0 = hardware concurrency).
std::vector<SweepPoint> sweep(const NetworkParams& params,
                              std::span<const double> cst_grid,
                              std::span<const Strategy> strategies,
                              unsigned threads = 0);

struct OptimizeResult {
  std::vector<SweepPoint> table;
  std::optional<SweepPoint> best;  // empty when no pair meets the delay budget
};

/// Exhaustive search for the feasible (strategy, cst) pair maximising APP.
/// Ties go to the lower threshold, then to NFP < RFP < MFR.
/// Throws DomainError for an empty grid or strategy set, or for a grid point
/// above detect_min_w while range ordering is enforced.
OptimizeResult optimize(const NetworkParams& params,
                        std::span<const double> cst_grid,
                        std::span<const Strategy> strategies,
                        unsigned threads = 0);

}  // namespace iotrelay
