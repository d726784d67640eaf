// Copyright 2026 The Dilatia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dilatia/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace dilatia {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 50;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 5e-3 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// 1, 2 or 5 times a power of ten, giving roughly `target` intervals.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  return (f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0) * mag;
}

std::vector<double> ticks(double lo, double hi) {
  const double step = nice_step(hi - lo, 4);
  std::vector<double> out;
  for (double k = std::ceil(lo / step - 1e-9); k * step <= hi + 1e-9 * step; k += 1.0) {
    out.push_back(k * step);
  }
  return out;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string LinePlot::render_svg() const {
  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = x_min, y_max = -x_min;
  for (const auto& s : series) {
    for (double x : s.xs) { x_min = std::min(x_min, x); x_max = std::max(x_max, x); }
    for (double y : s.ys) { y_min = std::min(y_min, y); y_max = std::max(y_max, y); }
  }
  if (unit_circle) {
    x_min = std::min(x_min, -1.1); x_max = std::max(x_max, 1.1);
    y_min = std::min(y_min, -1.1); y_max = std::max(y_max, 1.1);
  }
  if (!std::isfinite(x_min)) { x_min = 0; x_max = 1; y_min = 0; y_max = 1; }
  if (x_max - x_min < 1e-12) { x_min -= 0.5; x_max += 0.5; }
  if (y_max - y_min < 1e-12) { y_min -= 0.5; y_max += 0.5; }
  if (!unit_circle) {
    const double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;
  }

  double plot_w = kWidth - kLeft - kRight;
  double plot_h = kHeight - kTop - kBottom;
  if (unit_circle) plot_w = plot_h = std::min(plot_w, plot_h);
  if (unit_circle) {
    const double span = std::max(x_max - x_min, y_max - y_min);
    const double cx = 0.5 * (x_min + x_max), cy = 0.5 * (y_min + y_max);
    x_min = cx - span / 2; x_max = cx + span / 2;
    y_min = cy - span / 2; y_max = cy + span / 2;
  }
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return kTop + (y_max - y) / (y_max - y_min) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kLeft) + "\" y=\"22\" font-size=\"15\">" + escape(title) + "</text>\n";
  svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) +
         "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double xv : ticks(x_min, x_max)) {
    svg += "<text x=\"" + num(px(xv)) + "\" y=\"" + num(kTop + plot_h + 16) +
           "\" text-anchor=\"middle\">" + tick_label(xv) + "</text>\n";
  }
  for (double yv : ticks(y_min, y_max)) {
    svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py(yv) + 4) +
           "\" text-anchor=\"end\">" + tick_label(yv) + "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kTop + plot_h + 38) +
         "\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + num(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " + num(kTop + plot_h / 2) +
         ")\">" + escape(y_label) + "</text>\n";
  if (unit_circle) {
    svg += "<circle cx=\"" + num(px(0)) + "\" cy=\"" + num(py(0)) + "\" r=\"" +
           num(px(1) - px(0)) + "\" fill=\"none\" stroke=\"#999\"/>\n";
  }

  double legend_y = kTop + 10;
  for (const auto& s : series) {
    if (s.markers) {
      for (std::size_t i = 0; i < std::min(s.xs.size(), s.ys.size()); ++i) {
        svg += "<circle cx=\"" + num(px(s.xs[i])) + "\" cy=\"" + num(py(s.ys[i])) +
               "\" r=\"3\" fill=\"" + s.color + "\"/>\n";
      }
    } else {
      svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < std::min(s.xs.size(), s.ys.size()); ++i) {
        if (i) svg += ' ';
        svg += num(px(s.xs[i])) + "," + num(py(s.ys[i]));
      }
      svg += "\"/>\n";
    }
    const double lx = kLeft + plot_w + 12;
    svg += "<rect x=\"" + num(lx) + "\" y=\"" + num(legend_y - 8) +
           "\" width=\"10\" height=\"10\" fill=\"" + s.color + "\"/>\n";
    svg += "<text x=\"" + num(lx + 15) + "\" y=\"" + num(legend_y + 1) + "\">" +
           escape(s.name) + "</text>\n";
    legend_y += 18;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace dilatia
