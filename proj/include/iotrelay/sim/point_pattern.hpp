#pragma once

#include <cstddef>
#include <cmath>
#include <cstdint>
#include <vector>

#include "iotrelay/sim/rng.hpp"

namespace iotrelay::sim {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Square observation window [0, side)^2 with wrap-around (minimum image)
/// distances. A side of 0 means the unbounded plane.
class Window {
 public:
  Window() = default;
  explicit Window(double side) : side_(side) {}

  double side() const { return side_; }
  bool toroidal() const { return side_ > 0.0; }

  /// Shortest vector from `from` to `to`.
  Point2 displacement(Point2 from, Point2 to) const;
  double distance2(Point2 a, Point2 b) const;
  /// Maps a point back into [0, side)^2.
  Point2 wrap(Point2 p) const;

 private:
  double side_ = 0.0;
};

/// One realisation of the marked device process.
struct PointPattern {
  double window_side_m = 0.0;
  std::vector<Point2> points;
  std::vector<double> marks;             // back-off timers, uniform on [0, 1]
  std::vector<std::uint8_t> tx_flags;    // 1 = wins contention

  Window window() const { return Window(window_side_m); }
  std::vector<std::size_t> transmitters() const;
};

struct SampleLimits {
  double max_expected_points = 5e7;
};

/// Homogeneous PPP on the window with i.i.d. uniform marks; tx_flags all 0.
/// Throws ResourceError when intensity * side^2 exceeds the limit.
PointPattern sample_ppp(double intensity, double window_side_m, Rng& rng,
                        const SampleLimits& limits = {});
PointPattern sample_ppp(double intensity, double window_side_m,
                        std::uint64_t seed, const SampleLimits& limits = {});

/// Uniform bucket grid over a toroidal window for radius queries.
class CellGrid {
 public:
  CellGrid(const std::vector<Point2>& points, double window_side_m,
           double min_cell_m);

  /// Calls visit(index) for every point whose cell may lie within `radius` of
  /// `center`, stopping early when visit returns false. Callers still filter
  /// by exact distance.
  template <class Visit>
  void for_each_candidate(Point2 center, double radius, Visit&& visit) const {
    for_each_slot(center, radius,
                  [&](std::size_t slot) { return visit(order_[slot]); });
  }

  /// Like for_each_candidate, but passes positions in cell order; order()[slot]
  /// is the point index.
  template <class Visit>
  void for_each_slot(Point2 center, double radius, Visit&& visit) const {
    const long n = static_cast<long>(cells_per_side_);
    const long reach = static_cast<long>(std::ceil(radius / cell_width_));
    const long cx = cell_coord(center.x);
    const long cy = cell_coord(center.y);
    const bool all = 2 * reach + 1 >= n;
    const long span = all ? n : 2 * reach + 1;
    // Centre cell first, then alternating outwards: 0, -1, +1, -2, +2, ...
    auto offset = [](long t) { return (t % 2 == 1) ? -(t + 1) / 2 : t / 2; };
    for (long ty = 0; ty < span; ++ty) {
      const long y = all ? ty : ((cy + offset(ty)) % n + n) % n;
      for (long tx = 0; tx < span; ++tx) {
        const long x = all ? tx : ((cx + offset(tx)) % n + n) % n;
        const std::size_t cell = static_cast<std::size_t>(y * n + x);
        for (std::size_t k = start_[cell]; k < start_[cell + 1]; ++k) {
          if (!visit(k)) return;
        }
      }
    }
  }

  const std::vector<std::size_t>& order() const { return order_; }

 private:
  long cell_coord(double v) const;

  std::size_t cells_per_side_;
  double cell_width_;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> order_;
};

/// Type-II Matern thinning: a device transmits iff its mark is strictly the
/// smallest among all devices within toroidal distance sense_range_m.
PointPattern matern_thin(PointPattern pattern, double sense_range_m);

}  // namespace iotrelay::sim
