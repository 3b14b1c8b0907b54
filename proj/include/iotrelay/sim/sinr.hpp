#pragma once

#include <cstdint>
#include <span>

#include "iotrelay/params.hpp"
#include "iotrelay/sim/point_pattern.hpp"
#include "iotrelay/sim/relay.hpp"
#include "iotrelay/sim/rng.hpp"

namespace iotrelay::sim {

/// Outcome of one hop transmission.
struct HopTrial {
  double hop_distance_m = 0.0;
  double progress_m = 0.0;
  double perp_offset_m = 0.0;
  double sinr_lin = 0.0;
  bool success = false;  // sinr_lin > beta
};

/// SINR at the receiver with explicit fading gains: gains[0] is the desired
/// link, gains[1 + j] belongs to interferers[j]. The interferer set must not
/// contain the tagged transmitter. Throws DegenerateGeometryError when the
/// receiver coincides with an interferer.
HopTrial evaluate_sinr(const RelayChoice& rx, std::span<const Point2> interferers,
                       const NetworkParams& params, std::span<const double> gains,
                       const Window& window = Window{});

/// Same, with gains drawn i.i.d. exponential(fading_rate) from `rng`.
HopTrial evaluate_sinr(const RelayChoice& rx, std::span<const Point2> interferers,
                       const NetworkParams& params, Rng& rng,
                       const Window& window = Window{});

HopTrial evaluate_sinr(const RelayChoice& rx, std::span<const Point2> interferers,
                       const NetworkParams& params, std::uint64_t seed,
                       const Window& window = Window{});

}  // namespace iotrelay::sim
