#include "iotrelay/analytic/laws.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "iotrelay/errors.hpp"
#include "iotrelay/numerics/quadrature.hpp"
#include "iotrelay/numerics/special.hpp"

namespace iotrelay {
namespace {

using std::numbers::pi;

constexpr std::size_t kAngleNodes = 64;

struct HalfDisc {
  double lambda;
  double radius;
  double norm;  // P(at least one device in the forward half-disc)
};

HalfDisc half_disc(const NetworkParams& params) {
  const double radius = derive_ranges(params).avg_tx_range_m;
  const double lambda = params.device_density;
  return {lambda, radius, -std::expm1(-lambda * pi * radius * radius / 2.0)};
}

void check_support(double x, double radius, const char* what) {
  if (!(x >= 0.0 && x <= radius)) {
    throw DomainError(std::string(what) + ": argument " + std::to_string(x) +
                      " outside [0, " + std::to_string(radius) + "]");
  }
}

double mfr_distance_density(double r, const HalfDisc& h) {
  const auto& rule = numerics::gauss_legendre(kAngleNodes);
  // Even in the angle: twice the integral over [0, pi/2].
  auto inner = [&](double theta) {
    return std::exp(-h.lambda * segment_area(r * std::cos(theta), h.radius));
  };
  return 2.0 * h.lambda * r * numerics::integrate_fixed(inner, 0.0, pi / 2.0, rule) /
         h.norm;
}

}  // namespace

double segment_area(double z, double radius) {
  const double q = std::clamp(z / radius, 0.0, 1.0);
  return radius * radius * (std::acos(q) - q * std::sqrt(1.0 - q * q));
}

double pdf_distance(Strategy s, double r, const NetworkParams& params,
                    NfpLaw nfp_law) {
  const HalfDisc h = half_disc(params);
  check_support(r, h.radius, "pdf_distance");
  switch (s) {
    case Strategy::kMfr:
      return mfr_distance_density(r, h);
    case Strategy::kNfp: {
      const double exponent = nfp_law == NfpLaw::kCorrected
                                  ? h.lambda * pi * r * r / 2.0
                                  : h.lambda * pi * r * r;
      return h.lambda * pi * r * std::exp(-exponent) / h.norm;
    }
    case Strategy::kRfp:
      return 2.0 * r / (h.radius * h.radius);
  }
  throw DomainError("pdf_distance: unknown strategy");
}

double cdf_distance(Strategy s, double r, const NetworkParams& params,
                    NfpLaw nfp_law) {
  const HalfDisc h = half_disc(params);
  if (r <= 0.0) return 0.0;
  if (r >= h.radius) {
    if (s == Strategy::kNfp && nfp_law == NfpLaw::kAsPrinted) {
      return std::min(1.0, -std::expm1(-h.lambda * pi * r * r) / h.norm);
    }
    return 1.0;
  }
  switch (s) {
    case Strategy::kMfr:
      return std::min(1.0, numerics::integrate(
                               [&](double x) { return mfr_distance_density(x, h); },
                               0.0, r)
                               .value);
    case Strategy::kNfp: {
      const double exponent = nfp_law == NfpLaw::kCorrected
                                  ? h.lambda * pi * r * r / 2.0
                                  : h.lambda * pi * r * r;
      return std::min(1.0, -std::expm1(-exponent) / h.norm);
    }
    case Strategy::kRfp:
      return r * r / (h.radius * h.radius);
  }
  throw DomainError("cdf_distance: unknown strategy");
}

double pdf_progress(Strategy s, double z, const NetworkParams& params) {
  const HalfDisc h = half_disc(params);
  check_support(z, h.radius, "pdf_progress");
  const double chord = std::sqrt(std::max(0.0, h.radius * h.radius - z * z));
  switch (s) {
    case Strategy::kMfr:
      return 2.0 * h.lambda * chord *
             std::exp(-h.lambda * segment_area(z, h.radius)) / h.norm;
    case Strategy::kNfp:
      return std::sqrt(2.0 * h.lambda) * std::exp(-h.lambda * pi * z * z / 2.0) *
             numerics::erf(std::sqrt(pi * h.lambda / 2.0) * chord) / h.norm;
    case Strategy::kRfp:
      return 4.0 * chord / (pi * h.radius * h.radius);
  }
  throw DomainError("pdf_progress: unknown strategy");
}

double mfr_progress_cdf(double z, const NetworkParams& params) {
  const HalfDisc h = half_disc(params);
  if (z <= 0.0) return 0.0;
  if (z >= h.radius) return 1.0;
  const double empty_half = std::exp(-h.lambda * pi * h.radius * h.radius / 2.0);
  return (std::exp(-h.lambda * segment_area(z, h.radius)) - empty_half) / h.norm;
}

double cdf_progress(Strategy s, double z, const NetworkParams& params) {
  const HalfDisc h = half_disc(params);
  if (z <= 0.0) return 0.0;
  if (z >= h.radius) return 1.0;
  switch (s) {
    case Strategy::kMfr:
      return mfr_progress_cdf(z, params);
    case Strategy::kNfp:
      return std::min(
          1.0, numerics::integrate(
                   [&](double x) { return pdf_progress(Strategy::kNfp, x, params); },
                   0.0, z)
                   .value);
    case Strategy::kRfp: {
      const double r2 = h.radius * h.radius;
      return 2.0 / (pi * r2) *
             (z * std::sqrt(r2 - z * z) + r2 * std::asin(z / h.radius));
    }
  }
  throw DomainError("cdf_progress: unknown strategy");
}

double mfr_joint_density(double z, double d, const NetworkParams& params) {
  const HalfDisc h = half_disc(params);
  if (z < 0.0 || z * z + d * d > h.radius * h.radius) return 0.0;
  return h.lambda * std::exp(-h.lambda * segment_area(z, h.radius)) / h.norm;
}

double mean_progress(Strategy s, const NetworkParams& params) {
  const double radius = derive_ranges(params).avg_tx_range_m;
  return numerics::integrate(
             [&](double z) { return z * pdf_progress(s, z, params); }, 0.0, radius)
      .value;
}

double nafp(Strategy s, const NetworkParams& params) {
  return mean_progress(s, params) * std::sqrt(params.device_density);
}

}  // namespace iotrelay
