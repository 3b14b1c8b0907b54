#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "iotrelay/analytic/strategy.hpp"
#include "iotrelay/sim/point_pattern.hpp"
#include "iotrelay/sim/rng.hpp"

namespace iotrelay::sim {

/// Selected next hop, with its geometry relative to the transmitter and the
/// destination bearing.
struct RelayChoice {
  std::size_t index = 0;  // into the candidate span
  Point2 location;
  double hop_distance_m = 0.0;
  double progress_m = 0.0;     // r cos(theta)
  double perp_offset_m = 0.0;  // r sin(theta)
};

/// Hop geometry of `candidate` as seen from `tx` towards `dest_bearing`.
RelayChoice hop_geometry(Point2 tx, Point2 candidate, double dest_bearing,
                         const Window& window = Window{});

/// Picks a relay among candidates inside the forward half-disc (progress > 0,
/// distance <= tx_range_m). MFR maximises progress, NFP minimises distance,
/// RFP picks uniformly with `rng`. Returns nullopt when the half-disc is empty.
std::optional<RelayChoice> select_relay(Strategy strategy, Point2 tx,
                                        std::span<const Point2> candidates,
                                        double dest_bearing, double tx_range_m,
                                        Rng& rng, const Window& window = Window{});

}  // namespace iotrelay::sim
