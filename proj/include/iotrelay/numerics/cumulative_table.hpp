#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "iotrelay/numerics/quadrature.hpp"

namespace iotrelay::numerics {

/// CDF of a density on [lo, hi], tabulated on a uniform grid by adaptive
/// quadrature per cell and evaluated by cubic Hermite interpolation (the
/// density supplies the slopes). Also inverts the CDF for sampling.
class CumulativeTable {
 public:
  CumulativeTable(const std::function<double(double)>& pdf, double lo,
                  double hi, std::size_t cells = 2048,
                  const QuadratureSpec& spec = {});

  /// Clamped to [0, 1] outside the support.
  double cdf(double x) const;

  /// Smallest x with cdf(x) >= u, for u in [0, 1].
  double quantile(double u) const;

  /// Integral of the density over the full support, before normalisation.
  double total_mass() const { return mass_; }

 private:
  double lo_;
  double hi_;
  double step_;
  double mass_;
  std::vector<double> cum_;    // normalised cumulative values at grid points
  std::vector<double> slope_;  // normalised density at grid points
};

}  // namespace iotrelay::numerics
