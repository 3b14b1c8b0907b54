#include "iotrelay/numerics/ks.hpp"

#include <algorithm>
#include <cmath>

#include "iotrelay/errors.hpp"

namespace iotrelay::numerics {

double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf) {
  if (sorted_samples.empty()) {
    throw DomainError("ks_statistic: empty sample");
  }
  if (!std::is_sorted(sorted_samples.begin(), sorted_samples.end())) {
    throw DomainError("ks_statistic: samples must be sorted ascending");
  }
  const double n = static_cast<double>(sorted_samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
    const double f = cdf(sorted_samples[i]);
    const double below = static_cast<double>(i) / n;
    const double above = static_cast<double>(i + 1) / n;
    d = std::max({d, above - f, f - below});
  }
  return d;
}

double ks_critical_value(std::size_t n, double alpha) {
  if (n == 0 || !(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("ks_critical_value: need n >= 1 and alpha in (0, 1)");
  }
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) /
         std::sqrt(static_cast<double>(n));
}

}  // namespace iotrelay::numerics
