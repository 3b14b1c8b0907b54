#pragma once

#include <set>
#include <string>

#include <json.hpp>

namespace iotrelay {

/// Physical and protocol constants of the network, in linear SI units.
///
/// Channel gains are exponential with mean 1/fading_rate. The carrier sensing
/// threshold (cst_w) sets the average contention range; detect_min_w sets the
/// average transmission range.
struct NetworkParams {
  double tx_power_w = 0.1;
  double device_density = 0.5;  // devices per m^2
  double path_loss_exp = 4.0;
  double fading_rate = 1.0;
  double noise_w = 0.0;
  double sinr_threshold_lin = 10.0;
  double detect_min_w = 0.0;
  double cst_w = 0.0;
  double dest_distance_m = 100.0;
  double delay_budget_s = 0.2;
  double slot_duration_s = 1e-5;
  // Require avg_sense_range >= avg_tx_range (equivalently cst_w <= detect_min_w).
  bool enforce_range_ordering = true;
};

struct DerivedRanges {
  double avg_tx_range_m = 0.0;
  double avg_sense_range_m = 0.0;
  double mean_contention_count = 0.0;  // device_density * pi * R_s^2
};

/// Average range at which the faded received power stays above threshold_w:
/// (power/(fading_rate*threshold))^(1/eta) * Gamma(1 + 1/eta).
double avg_range(double power_w, double fading_rate, double threshold_w,
                 double path_loss_exp);

/// Inverse of avg_range in the threshold argument.
double threshold_for_range(double power_w, double fading_rate, double range_m,
                           double path_loss_exp);

/// Defaults: 20 dBm transmit power, 0.5 devices/m^2, eta = 4, beta = 10 dB,
/// unit-mean fading, no noise, detect_min_w back-solved for a 10 m average
/// transmission range and cst_w equal to detect_min_w.
NetworkParams default_params();

/// Throws DomainError on any violated invariant.
void validate(const NetworkParams& params);

/// Validates, then derives both average ranges.
DerivedRanges derive_ranges(const NetworkParams& params);

/// True when the contention range is shorter than the transmission range, so
/// the interference exclusion radius R_s - r must be clamped at zero.
bool exclusion_clamped(const DerivedRanges& ranges);

/// Reads a flat JSON object of NetworkParams keys on top of `base`.
///
/// Every field may be given in linear units under its own name, and power or
/// ratio fields also under `_dbm` / `_db` aliases (tx_power_dbm, noise_dbm,
/// detect_min_dbm, cst_dbm, sinr_threshold_db). `avg_tx_range_m` and
/// `avg_sense_range_m` back-solve detect_min_w and cst_w. Giving two spellings
/// of the same field is a ConfigError. Keys read are added to `consumed`.
NetworkParams params_from_json(const nlohmann::json& doc,
                               const NetworkParams& base,
                               std::set<std::string>* consumed = nullptr);

nlohmann::json params_to_json(const NetworkParams& params);

}  // namespace iotrelay
