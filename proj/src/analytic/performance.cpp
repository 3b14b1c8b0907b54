#include "iotrelay/analytic/performance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "iotrelay/analytic/interference.hpp"
#include "iotrelay/numerics/quadrature.hpp"

namespace iotrelay {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double ratio_or_inf(double num, double den) {
  return den > 0.0 ? num / den : kInf;
}

}  // namespace

double success_probability(Strategy s, const NetworkParams& params,
                           NfpLaw nfp_law) {
  const DerivedRanges ranges = derive_ranges(params);
  const double eta = params.path_loss_exp;
  const double k = params.fading_rate * params.sinr_threshold_lin / params.tx_power_w;
  auto integrand = [&](double r) {
    const double r_eta = std::pow(r, eta);
    const double noise = std::exp(-k * params.noise_w * r_eta);
    return noise * lt_lower_bound(k * r_eta, r, params) *
           pdf_distance(s, r, params, nfp_law);
  };
  const double p =
      numerics::integrate(integrand, 0.0, ranges.avg_tx_range_m).value;
  return std::clamp(p, 0.0, 1.0);
}

double app_product(double success_prob, double active_density, double nafp) {
  return success_prob * active_density * nafp;
}

double app(Strategy s, const NetworkParams& params) {
  return app_product(success_probability(s, params), active_density(params),
                     nafp(s, params));
}

DelayBreakdown delay_breakdown(double active_density, double success_prob,
                               double mean_progress_m,
                               const NetworkParams& params) {
  DelayBreakdown d;
  d.slots_to_access = ratio_or_inf(params.device_density, active_density);
  d.retransmissions = ratio_or_inf(1.0, success_prob);
  d.hops = ratio_or_inf(params.dest_distance_m, mean_progress_m);
  d.slot_s = params.slot_duration_s;
  d.total_s = d.slots_to_access * d.retransmissions * d.hops * d.slot_s;
  return d;
}

double delay(Strategy s, const NetworkParams& params) {
  return delay_breakdown(active_density(params), success_probability(s, params),
                         mean_progress(s, params), params)
      .total_s;
}

SweepPoint evaluate_point(Strategy s, const NetworkParams& params) {
  SweepPoint pt;
  pt.strategy = s;
  pt.cst_w = params.cst_w;
  pt.active_density = active_density(params);
  pt.success_prob = success_probability(s, params);
  pt.mean_progress_m = mean_progress(s, params);
  pt.nafp = pt.mean_progress_m * std::sqrt(params.device_density);
  pt.app = app_product(pt.success_prob, pt.active_density, pt.nafp);
  pt.delay = delay_breakdown(pt.active_density, pt.success_prob,
                             pt.mean_progress_m, params);
  pt.delay_s = pt.delay.total_s;
  pt.feasible = pt.delay_s <= params.delay_budget_s;
  pt.clamped_exclusion = exclusion_clamped(derive_ranges(params));
  return pt;
}

}  // namespace iotrelay
