#include "iotrelay/analytic/interference.hpp"

#include <cmath>
#include <numbers>

#include "iotrelay/errors.hpp"
#include "iotrelay/numerics/quadrature.hpp"

namespace iotrelay {
namespace {

using std::numbers::pi;

void check_arguments(double s, double hop_r) {
  if (!(s >= 0.0)) throw DomainError("lt_lower_bound: s must be >= 0");
  if (!(hop_r >= 0.0)) throw DomainError("lt_lower_bound: hop distance must be >= 0");
}

}  // namespace

double active_density(const NetworkParams& params) {
  const double contenders = derive_ranges(params).mean_contention_count;
  // (1 - e^-x)/x -> 1 as x -> 0.
  if (contenders < 1e-12) return params.device_density;
  return params.device_density * -std::expm1(-contenders) / contenders;
}

double exclusion_radius(double hop_r, const NetworkParams& params) {
  return std::max(0.0, derive_ranges(params).avg_sense_range_m - hop_r);
}

double lt_lower_bound_eta4(double s, double hop_r, const NetworkParams& params) {
  check_arguments(s, hop_r);
  if (params.path_loss_exp != 4.0) {
    throw DomainError("lt_lower_bound_eta4: path loss exponent must be 4");
  }
  if (s == 0.0) return 1.0;
  const double a = exclusion_radius(hop_r, params);
  const double root_c = std::sqrt(params.tx_power_w * s / params.fading_rate);
  return std::exp(-pi * active_density(params) * root_c *
                  std::atan2(root_c, a * a));
}

double lt_lower_bound_numeric(double s, double hop_r,
                              const NetworkParams& params) {
  check_arguments(s, hop_r);
  if (s == 0.0) return 1.0;
  const double a = exclusion_radius(hop_r, params);
  const double scale = params.fading_rate / (params.tx_power_w * s);
  const double eta = params.path_loss_exp;
  auto integrand = [&](double v) {
    return v / (1.0 + scale * std::pow(v, eta));
  };
  numerics::QuadratureSpec spec;
  spec.rel_tol = 1e-11;
  spec.abs_tol = 1e-12;
  const double tail = numerics::integrate_to_infinity(integrand, a, spec).value;
  return std::exp(-2.0 * pi * active_density(params) * tail);
}

double lt_lower_bound(double s, double hop_r, const NetworkParams& params) {
  if (params.path_loss_exp == 4.0) return lt_lower_bound_eta4(s, hop_r, params);
  return lt_lower_bound_numeric(s, hop_r, params);
}

}  // namespace iotrelay
