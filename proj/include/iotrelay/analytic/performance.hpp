#pragma once

#include "iotrelay/analytic/laws.hpp"
#include "iotrelay/analytic/strategy.hpp"
#include "iotrelay/params.hpp"

namespace iotrelay {

/// Per-hop success probability P[SINR > beta], averaged over the strategy's
/// hop-distance law, with the interference Laplace transform replaced by its
/// lower bound. The result is itself a lower bound.
double success_probability(Strategy s, const NetworkParams& params,
                           NfpLaw nfp_law = NfpLaw::kCorrected);

/// APP = success probability x active density x NAFP.
double app_product(double success_prob, double active_density, double nafp);
double app(Strategy s, const NetworkParams& params);

/// Factors of the end-to-end delay estimate. Any zero denominator makes the
/// corresponding factor and the total infinite.
struct DelayBreakdown {
  double slots_to_access = 0.0;  // lambda / Lambda
  double retransmissions = 0.0;  // 1 / P
  double hops = 0.0;             // delta / E[Z]
  double slot_s = 0.0;           // tau
  double total_s = 0.0;
};

DelayBreakdown delay_breakdown(double active_density, double success_prob,
                               double mean_progress_m,
                               const NetworkParams& params);
double delay(Strategy s, const NetworkParams& params);

/// All analytic outputs at one (strategy, carrier sensing threshold).
struct SweepPoint {
  Strategy strategy = Strategy::kNfp;
  double cst_w = 0.0;
  double active_density = 0.0;
  double success_prob = 0.0;
  double mean_progress_m = 0.0;
  double nafp = 0.0;
  double app = 0.0;
  double delay_s = 0.0;
  bool feasible = false;
  bool clamped_exclusion = false;
  DelayBreakdown delay{};
};

/// Evaluates every metric at params.cst_w.
SweepPoint evaluate_point(Strategy s, const NetworkParams& params);

}  // namespace iotrelay
