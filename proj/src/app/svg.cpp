#include "iotrelay/app/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

namespace iotrelay::cli {
namespace {

constexpr double kPanelW = 420.0;
constexpr double kPanelH = 320.0;
constexpr double kMarginL = 70.0;
constexpr double kMarginR = 15.0;
constexpr double kMarginT = 30.0;
constexpr double kMarginB = 50.0;
constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c",
                                             "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool empty() const { return !(lo <= hi); }
  void pad() {
    if (empty()) {
      lo = 0.0;
      hi = 1.0;
    } else if (lo == hi) {
      const double d = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
      lo -= d;
      hi += d;
    }
  }
};

bool usable(double x, double y, bool log_y) {
  return std::isfinite(x) && std::isfinite(y) && (!log_y || y > 0.0);
}

void render_panel(std::string& out, const Panel& panel, double ox) {
  Range xr, yr;
  for (const auto& s : panel.series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!usable(s.x[i], s.y[i], panel.log_y)) continue;
      xr.add(s.x[i]);
      yr.add(panel.log_y ? std::log10(s.y[i]) : s.y[i]);
    }
  }
  xr.pad();
  yr.pad();

  const double pw = kPanelW - kMarginL - kMarginR;
  const double ph = kPanelH - kMarginT - kMarginB;
  auto px = [&](double x) { return ox + kMarginL + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) {
    const double t = panel.log_y ? std::log10(y) : y;
    return kMarginT + ph - (t - yr.lo) / (yr.hi - yr.lo) * ph;
  };

  out += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  out += "<rect x=\"" + num(ox + kMarginL) + "\" y=\"" + num(kMarginT) +
         "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"#444\"/>\n";
  out += "<text x=\"" + num(ox + kMarginL + pw / 2) + "\" y=\"18\" text-anchor=\"middle\" font-size=\"13\">" +
         escape(panel.title) + "</text>\n";
  out += "<text x=\"" + num(ox + kMarginL + pw / 2) + "\" y=\"" + num(kPanelH - 10) +
         "\" text-anchor=\"middle\">" + escape(panel.x_label) + "</text>\n";
  out += "<text transform=\"translate(" + num(ox + 14) + "," + num(kMarginT + ph / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + escape(panel.y_label) + "</text>\n";

  for (int k = 0; k <= 4; ++k) {
    const double fx = xr.lo + (xr.hi - xr.lo) * k / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * k / 4.0;
    const double tick_y = panel.log_y ? std::pow(10.0, fy) : fy;
    out += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(kMarginT + ph + 14) +
           "\" text-anchor=\"middle\">" + num(fx) + "</text>\n";
    out += "<text x=\"" + num(ox + kMarginL - 4) + "\" y=\"" + num(py(tick_y) + 4) +
           "\" text-anchor=\"end\">" + num(tick_y) + "</text>\n";
  }

  for (std::size_t si = 0; si < panel.series.size(); ++si) {
    const auto& s = panel.series[si];
    const char* color = kColors[si % kColors.size()];
    // Full curve dotted underneath, valid runs solid on top.
    std::string all, solid;
    auto flush = [&](std::string& pts, const char* dash) {
      if (pts.empty()) return;
      out += std::string("<polyline fill=\"none\" stroke=\"") + color +
             "\" stroke-width=\"1.5\"" + dash + " points=\"" + pts + "\"/>\n";
      pts.clear();
    };
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!usable(s.x[i], s.y[i], panel.log_y)) continue;
      const std::string pt = num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
      all += pt;
      const bool ok = s.valid.empty() || (i < s.valid.size() && s.valid[i]);
      if (ok) {
        solid += pt;
      } else {
        flush(solid, "");
      }
    }
    flush(all, " stroke-dasharray=\"3,3\"");
    flush(solid, "");
    const double ly = kMarginT + 14 + 14 * static_cast<double>(si);
    out += "<text x=\"" + num(ox + kMarginL + pw - 6) + "\" y=\"" + num(ly) +
           "\" text-anchor=\"end\" fill=\"" + color + "\">" + escape(s.label) + "</text>\n";
  }
  out += "</g>\n";
}

}  // namespace

std::string render_svg(const std::vector<Panel>& panels) {
  const double width = kPanelW * static_cast<double>(std::max<std::size_t>(panels.size(), 1));
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                    "\" height=\"" + num(kPanelH) + "\" viewBox=\"0 0 " + num(width) + " " +
                    num(kPanelH) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    render_panel(out, panels[i], kPanelW * static_cast<double>(i));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace iotrelay::cli
