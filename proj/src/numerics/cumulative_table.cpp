#include "iotrelay/numerics/cumulative_table.hpp"

#include <algorithm>
#include <cmath>

#include "iotrelay/errors.hpp"

namespace iotrelay::numerics {

CumulativeTable::CumulativeTable(const std::function<double(double)>& pdf,
                                 double lo, double hi, std::size_t cells,
                                 const QuadratureSpec& spec)
    : lo_(lo), hi_(hi), step_((hi - lo) / static_cast<double>(cells)) {
  if (!(hi > lo) || cells < 1) {
    throw DomainError("CumulativeTable: need hi > lo and at least one cell");
  }
  cum_.resize(cells + 1);
  slope_.resize(cells + 1);
  auto grid = [&](std::size_t i) {
    return i == cells ? hi_ : lo_ + step_ * static_cast<double>(i);
  };
  cum_[0] = 0.0;
  for (std::size_t i = 0; i < cells; ++i) {
    cum_[i + 1] = cum_[i] + integrate(pdf, grid(i), grid(i + 1), spec).value;
  }
  mass_ = cum_.back();
  if (!(mass_ > 0.0)) throw DomainError("CumulativeTable: density has no mass");
  for (std::size_t i = 0; i <= cells; ++i) {
    cum_[i] /= mass_;
    slope_[i] = pdf(grid(i)) / mass_;
  }
}

double CumulativeTable::cdf(double x) const {
  if (x <= lo_) return 0.0;
  if (x >= hi_) return 1.0;
  const double pos = (x - lo_) / step_;
  const std::size_t cells = cum_.size() - 1;
  const std::size_t i = std::min(static_cast<std::size_t>(pos), cells - 1);
  const double t = pos - static_cast<double>(i);
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  const double v = h00 * cum_[i] + h10 * step_ * slope_[i] +
                   h01 * cum_[i + 1] + h11 * step_ * slope_[i + 1];
  return std::clamp(v, 0.0, 1.0);
}

double CumulativeTable::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw DomainError("CumulativeTable::quantile: u must lie in [0, 1]");
  }
  // Bracket on the grid, then bisect on the interpolant.
  auto it = std::lower_bound(cum_.begin(), cum_.end(), u);
  if (it == cum_.begin()) return lo_;
  if (it == cum_.end()) return hi_;
  const std::size_t i = static_cast<std::size_t>(it - cum_.begin()) - 1;
  double a = lo_ + step_ * static_cast<double>(i);
  double b = std::min(hi_, a + step_);
  for (int iter = 0; iter < 60 && b - a > 1e-14 * (1.0 + std::abs(b)); ++iter) {
    const double mid = 0.5 * (a + b);
    if (cdf(mid) < u) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return b;
}

}  // namespace iotrelay::numerics
