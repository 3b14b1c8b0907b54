#include "iotrelay/sim/point_pattern.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "iotrelay/errors.hpp"

namespace iotrelay::sim {
namespace {

double min_image(double delta, double side) {
  if (side <= 0.0) return delta;
  const double half = 0.5 * side;
  if (delta > half) return delta - side;
  if (delta < -half) return delta + side;
  return delta;
}

}  // namespace

Point2 Window::displacement(Point2 from, Point2 to) const {
  return {min_image(to.x - from.x, side_), min_image(to.y - from.y, side_)};
}

double Window::distance2(Point2 a, Point2 b) const {
  const Point2 d = displacement(a, b);
  return d.x * d.x + d.y * d.y;
}

Point2 Window::wrap(Point2 p) const {
  if (!toroidal()) return p;
  auto w = [&](double v) {
    double r = std::fmod(v, side_);
    if (r < 0.0) r += side_;
    return r >= side_ ? 0.0 : r;
  };
  return {w(p.x), w(p.y)};
}

std::vector<std::size_t> PointPattern::transmitters() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tx_flags.size(); ++i) {
    if (tx_flags[i]) out.push_back(i);
  }
  return out;
}

PointPattern sample_ppp(double intensity, double window_side_m, Rng& rng,
                        const SampleLimits& limits) {
  if (!(intensity > 0.0) || !(window_side_m > 0.0)) {
    throw DomainError("sample_ppp: intensity and window side must be > 0");
  }
  const double expected = intensity * window_side_m * window_side_m;
  if (expected > limits.max_expected_points) {
    throw ResourceError("sample_ppp: expected " + std::to_string(expected) +
                        " points exceeds the configured cap");
  }
  std::poisson_distribution<std::size_t> count_dist(expected);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = count_dist(rng);

  PointPattern pattern;
  pattern.window_side_m = window_side_m;
  pattern.points.resize(n);
  pattern.marks.resize(n);
  pattern.tx_flags.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    pattern.points[i] = {unit(rng) * window_side_m, unit(rng) * window_side_m};
    pattern.marks[i] = unit(rng);
  }
  return pattern;
}

PointPattern sample_ppp(double intensity, double window_side_m,
                        std::uint64_t seed, const SampleLimits& limits) {
  Rng rng = make_rng(seed, Stream::kPattern, 0);
  return sample_ppp(intensity, window_side_m, rng, limits);
}

CellGrid::CellGrid(const std::vector<Point2>& points, double window_side_m,
                   double min_cell_m) {
  if (!(window_side_m > 0.0)) {
    throw DomainError("CellGrid: window side must be > 0");
  }
  const double per_side =
      min_cell_m > 0.0 ? std::floor(window_side_m / min_cell_m) : 1.0;
  cells_per_side_ = static_cast<std::size_t>(std::clamp(per_side, 1.0, 2048.0));
  cell_width_ = window_side_m / static_cast<double>(cells_per_side_);

  const std::size_t cells = cells_per_side_ * cells_per_side_;
  std::vector<std::size_t> cell_of(points.size());
  start_.assign(cells + 1, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto x = static_cast<std::size_t>(cell_coord(points[i].x));
    const auto y = static_cast<std::size_t>(cell_coord(points[i].y));
    cell_of[i] = y * cells_per_side_ + x;
    ++start_[cell_of[i] + 1];
  }
  for (std::size_t c = 0; c < cells; ++c) start_[c + 1] += start_[c];
  order_.resize(points.size());
  std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
  for (std::size_t i = 0; i < points.size(); ++i) order_[fill[cell_of[i]]++] = i;
}

long CellGrid::cell_coord(double v) const {
  const long n = static_cast<long>(cells_per_side_);
  const long c = static_cast<long>(std::floor(v / cell_width_));
  return std::clamp(c, 0L, n - 1);
}

PointPattern matern_thin(PointPattern pattern, double sense_range_m) {
  const std::size_t n = pattern.points.size();
  pattern.tx_flags.assign(n, 0);
  if (n == 0) return pattern;
  const Window window = pattern.window();
  const double r2 = sense_range_m * sense_range_m;
  const CellGrid grid(pattern.points, pattern.window_side_m, sense_range_m);

  // Scan in cell order over packed copies; neighbour lookups stay local.
  struct Packed {
    Point2 p;
    double mark;
  };
  const auto& order = grid.order();
  std::vector<Packed> packed(n);
  for (std::size_t k = 0; k < n; ++k) {
    packed[k] = {pattern.points[order[k]], pattern.marks[order[k]]};
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Packed me = packed[k];
    bool least = true;
    grid.for_each_slot(me.p, sense_range_m, [&](std::size_t j) {
      if (j == k || packed[j].mark > me.mark) return true;
      if (window.distance2(me.p, packed[j].p) > r2) return true;
      // Equal marks: neither device is strictly least.
      least = false;
      return false;
    });
    pattern.tx_flags[order[k]] = least ? 1 : 0;
  }
  return pattern;
}

}  // namespace iotrelay::sim
