#include "iotrelay/analytic/optimizer.hpp"

#include <cmath>

#include "iotrelay/errors.hpp"
#include "iotrelay/parallel.hpp"

namespace iotrelay {

CstWindow default_cst_window(const NetworkParams& params) {
  const double tx_range = derive_ranges(params).avg_tx_range_m;
  CstWindow w;
  w.lo_w = threshold_for_range(params.tx_power_w, params.fading_rate,
                               3.0 * tx_range, params.path_loss_exp);
  w.hi_w = params.detect_min_w;
  return w;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  if (points == 0) throw DomainError("log_grid: need at least one point");
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw DomainError("log_grid: need 0 < lo <= hi");
  }
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = lo;
    return grid;
  }
  const double step = std::log(hi / lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = lo * std::exp(step * static_cast<double>(i));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> default_cst_grid(const NetworkParams& params,
                                     std::size_t points_per_decade) {
  const CstWindow w = default_cst_window(params);
  const double decades = std::log10(w.hi_w / w.lo_w);
  const auto points = static_cast<std::size_t>(
                          std::ceil(decades * static_cast<double>(points_per_decade))) +
                      1;
  return log_grid(w.lo_w, w.hi_w, points);
}

std::vector<SweepPoint> sweep(const NetworkParams& params,
                              std::span<const double> cst_grid,
                              std::span<const Strategy> strategies,
                              unsigned threads) {
  if (cst_grid.empty()) throw DomainError("sweep: empty threshold grid");
  if (strategies.empty()) throw DomainError("sweep: empty strategy set");
  for (double cst : cst_grid) {
    NetworkParams p = params;
    p.cst_w = cst;
    validate(p);
  }
  const std::size_t n_grid = cst_grid.size();
  std::vector<SweepPoint> rows(strategies.size() * n_grid);
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    NetworkParams p = params;
    p.cst_w = cst_grid[i % n_grid];
    rows[i] = evaluate_point(strategies[i / n_grid], p);
  });
  return rows;
}

OptimizeResult optimize(const NetworkParams& params,
                        std::span<const double> cst_grid,
                        std::span<const Strategy> strategies, unsigned threads) {
  OptimizeResult result;
  result.table = sweep(params, cst_grid, strategies, threads);
  for (const SweepPoint& pt : result.table) {
    if (!pt.feasible) continue;
    if (!result.best) {
      result.best = pt;
      continue;
    }
    const SweepPoint& b = *result.best;
    const bool better =
        pt.app > b.app ||
        (pt.app == b.app &&
         (pt.cst_w < b.cst_w ||
          (pt.cst_w == b.cst_w && tie_rank(pt.strategy) < tie_rank(b.strategy))));
    if (better) result.best = pt;
  }
  return result;
}

}  // namespace iotrelay
