#include "iotrelay/sim/sinr.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "iotrelay/errors.hpp"

namespace iotrelay::sim {
namespace {

// Received power P h d^-eta from squared distance.
double received(double power, double gain, double dist2, double eta) {
  if (eta == 4.0) return power * gain / (dist2 * dist2);
  return power * gain * std::pow(dist2, -0.5 * eta);
}

HopTrial evaluate(const RelayChoice& rx, std::span<const Point2> interferers,
                  const NetworkParams& params, auto&& next_gain,
                  const Window& window) {
  const double eta = params.path_loss_exp;
  HopTrial t;
  t.hop_distance_m = rx.hop_distance_m;
  t.progress_m = rx.progress_m;
  t.perp_offset_m = rx.perp_offset_m;

  const double signal = received(params.tx_power_w, next_gain(),
                                 rx.hop_distance_m * rx.hop_distance_m, eta);
  double interference = 0.0;
  for (const Point2& q : interferers) {
    const double d2 = window.distance2(rx.location, q);
    if (d2 == 0.0) {
      throw DegenerateGeometryError("evaluate_sinr: receiver coincides with an interferer");
    }
    interference += received(params.tx_power_w, next_gain(), d2, eta);
  }
  const double denom = params.noise_w + interference;
  t.sinr_lin = denom > 0.0 ? signal / denom : std::numeric_limits<double>::infinity();
  t.success = t.sinr_lin > params.sinr_threshold_lin;
  return t;
}

}  // namespace

HopTrial evaluate_sinr(const RelayChoice& rx, std::span<const Point2> interferers,
                       const NetworkParams& params, std::span<const double> gains,
                       const Window& window) {
  if (gains.size() != interferers.size() + 1) {
    throw DomainError("evaluate_sinr: need one gain per link");
  }
  std::size_t next = 0;
  return evaluate(rx, interferers, params, [&] { return gains[next++]; }, window);
}

HopTrial evaluate_sinr(const RelayChoice& rx, std::span<const Point2> interferers,
                       const NetworkParams& params, Rng& rng, const Window& window) {
  std::exponential_distribution<double> fading(params.fading_rate);
  return evaluate(rx, interferers, params, [&] { return fading(rng); }, window);
}

HopTrial evaluate_sinr(const RelayChoice& rx, std::span<const Point2> interferers,
                       const NetworkParams& params, std::uint64_t seed,
                       const Window& window) {
  Rng rng = make_rng(seed, Stream::kFading, 0);
  return evaluate_sinr(rx, interferers, params, rng, window);
}

}  // namespace iotrelay::sim
