#pragma once

#include <span>
#include <string>
#include <vector>

#include "iotrelay/analytic/performance.hpp"
#include "iotrelay/sim/estimators.hpp"

namespace iotrelay::cli {

/// Fixed float format for every table: 9 significant digits ("%.9g"),
/// infinities as inf / -inf, NaN as nan.
std::string format_double(double v);

/// strategy,cst_dbm,lambda_active,p_success,mean_progress_m,nafp,app,delay_s,feasible,clamped
std::string sweep_csv(std::span<const SweepPoint> rows);

/// Sweep columns followed by slots_to_access,retransmissions,hops,slot_s.
std::string optimize_csv(std::span<const SweepPoint> rows);

struct NafpRow {
  double lambda = 0.0;
  Strategy strategy = Strategy::kNfp;
  double nafp = 0.0;
  double nafp_max = 0.0;  // R_t * sqrt(lambda)
};

/// lambda,strategy,nafp,nafp_max
std::string nafp_csv(std::span<const NafpRow> rows);

/// trial,strategy,r_m,z_m,d_m,sinr_db,success. Trials are listed per strategy
/// in the order given.
std::string samples_csv(std::span<const sim::SuccessEstimate> estimates);

}  // namespace iotrelay::cli
