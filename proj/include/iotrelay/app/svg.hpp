#pragma once

#include <string>
#include <vector>

namespace iotrelay::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  // Points with valid[i] == false are drawn dotted; empty means all valid.
  std::vector<bool> valid;
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  std::vector<Series> series;
};

/// Renders panels side by side as a standalone SVG document. Non-finite
/// points (and non-positive ones on a log axis) are skipped.
std::string render_svg(const std::vector<Panel>& panels);

}  // namespace iotrelay::cli
