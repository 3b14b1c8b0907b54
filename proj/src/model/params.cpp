#include "iotrelay/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "iotrelay/errors.hpp"

namespace iotrelay {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("invalid network parameters: " + what);
}

// Slack for cst_w == detect_min_w computed through two different roundings.
constexpr double kOrderingSlack = 1e-12;

}  // namespace

double avg_range(double power_w, double fading_rate, double threshold_w,
                 double path_loss_exp) {
  if (!(power_w > 0.0) || !(fading_rate > 0.0) || !(threshold_w > 0.0)) {
    throw DomainError("avg_range: power, fading rate and threshold must be > 0");
  }
  if (!(path_loss_exp > 2.0)) {
    throw DomainError("avg_range: path loss exponent must exceed 2");
  }
  const double inv_eta = 1.0 / path_loss_exp;
  return std::pow(power_w / (fading_rate * threshold_w), inv_eta) *
         std::tgamma(1.0 + inv_eta);
}

double threshold_for_range(double power_w, double fading_rate, double range_m,
                           double path_loss_exp) {
  if (!(power_w > 0.0) || !(fading_rate > 0.0) || !(range_m > 0.0)) {
    throw DomainError(
        "threshold_for_range: power, fading rate and range must be > 0");
  }
  if (!(path_loss_exp > 2.0)) {
    throw DomainError("threshold_for_range: path loss exponent must exceed 2");
  }
  const double g = std::tgamma(1.0 + 1.0 / path_loss_exp);
  return power_w / fading_rate * std::pow(g / range_m, path_loss_exp);
}

NetworkParams default_params() {
  NetworkParams p;
  p.detect_min_w =
      threshold_for_range(p.tx_power_w, p.fading_rate, 10.0, p.path_loss_exp);
  p.cst_w = p.detect_min_w;
  return p;
}

void validate(const NetworkParams& p) {
  require(p.tx_power_w > 0.0, "tx_power_w must be > 0");
  require(p.device_density > 0.0, "device_density must be > 0");
  require(p.path_loss_exp > 2.0, "path_loss_exp must exceed 2");
  require(p.fading_rate > 0.0, "fading_rate must be > 0");
  require(p.noise_w >= 0.0, "noise_w must be >= 0");
  require(p.sinr_threshold_lin > 0.0, "sinr_threshold_lin must be > 0");
  require(p.detect_min_w > 0.0, "detect_min_w must be > 0");
  require(p.detect_min_w <= p.tx_power_w, "detect_min_w must not exceed tx_power_w");
  require(p.cst_w > 0.0, "cst_w must be > 0");
  if (p.enforce_range_ordering) {
    require(p.cst_w <= p.detect_min_w * (1.0 + kOrderingSlack),
            "cst_w must not exceed detect_min_w while range ordering is enforced");
  }
  require(p.dest_distance_m > 0.0, "dest_distance_m must be > 0");
  require(p.delay_budget_s > 0.0, "delay_budget_s must be > 0");
  require(p.slot_duration_s > 0.0, "slot_duration_s must be > 0");
}

DerivedRanges derive_ranges(const NetworkParams& p) {
  validate(p);
  DerivedRanges r;
  r.avg_tx_range_m =
      avg_range(p.tx_power_w, p.fading_rate, p.detect_min_w, p.path_loss_exp);
  r.avg_sense_range_m =
      avg_range(p.tx_power_w, p.fading_rate, p.cst_w, p.path_loss_exp);
  r.mean_contention_count = p.device_density * std::numbers::pi *
                            r.avg_sense_range_m * r.avg_sense_range_m;
  return r;
}

bool exclusion_clamped(const DerivedRanges& ranges) {
  return ranges.avg_sense_range_m <
         ranges.avg_tx_range_m * (1.0 - kOrderingSlack);
}

}  // namespace iotrelay
