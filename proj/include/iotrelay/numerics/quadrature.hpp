#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace iotrelay::numerics {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  std::size_t max_subdivisions = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

using Integrand = std::function<double(double)>;

/// Global adaptive 21-point Gauss-Kronrod quadrature over [lo, hi].
///
/// Stops once the summed error estimate is below
/// max(abs_tol, rel_tol * |value|). Reversed limits negate the result.
/// Throws ConvergenceError (with the best estimate) when max_subdivisions is
/// exhausted first.
QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           const QuadratureSpec& spec = {});

/// Integral over [lo, inf) through v = lo + t/(1-t), t in [0, 1).
QuadratureResult integrate_to_infinity(const Integrand& f, double lo,
                                       const QuadratureSpec& spec = {});

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, computed by Newton iteration and cached.
const GaussLegendreRule& gauss_legendre(std::size_t n);

/// Fixed-order rule mapped onto [lo, hi].
double integrate_fixed(const Integrand& f, double lo, double hi,
                       const GaussLegendreRule& rule);

}  // namespace iotrelay::numerics
