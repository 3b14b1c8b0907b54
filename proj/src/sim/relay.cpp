#include "iotrelay/sim/relay.hpp"

#include <cmath>
#include <vector>

namespace iotrelay::sim {

RelayChoice hop_geometry(Point2 tx, Point2 candidate, double dest_bearing,
                         const Window& window) {
  const Point2 d = window.displacement(tx, candidate);
  const double ux = std::cos(dest_bearing);
  const double uy = std::sin(dest_bearing);
  RelayChoice c;
  c.location = candidate;
  c.hop_distance_m = std::hypot(d.x, d.y);
  c.progress_m = d.x * ux + d.y * uy;
  c.perp_offset_m = -d.x * uy + d.y * ux;
  return c;
}

std::optional<RelayChoice> select_relay(Strategy strategy, Point2 tx,
                                        std::span<const Point2> candidates,
                                        double dest_bearing, double tx_range_m,
                                        Rng& rng, const Window& window) {
  std::vector<RelayChoice> forward;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    RelayChoice c = hop_geometry(tx, candidates[i], dest_bearing, window);
    if (c.progress_m > 0.0 && c.hop_distance_m <= tx_range_m) {
      c.index = i;
      forward.push_back(c);
    }
  }
  if (forward.empty()) return std::nullopt;

  switch (strategy) {
    case Strategy::kMfr: {
      const RelayChoice* best = &forward.front();
      for (const auto& c : forward) {
        if (c.progress_m > best->progress_m) best = &c;
      }
      return *best;
    }
    case Strategy::kNfp: {
      const RelayChoice* best = &forward.front();
      for (const auto& c : forward) {
        if (c.hop_distance_m < best->hop_distance_m) best = &c;
      }
      return *best;
    }
    case Strategy::kRfp: {
      std::uniform_int_distribution<std::size_t> pick(0, forward.size() - 1);
      return forward[pick(rng)];
    }
  }
  return std::nullopt;
}

}  // namespace iotrelay::sim
