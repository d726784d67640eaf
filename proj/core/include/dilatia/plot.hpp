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

#pragma once

#include <string>
#include <vector>

namespace dilatia {

struct PlotSeries {
  std::string name;
  std::vector<double> xs;
  std::vector<double> ys;
  std::string color = "#1f77b4";
  bool markers = false;  // dots instead of a polyline
};

/// Minimal static SVG line chart. Output is a pure function of the inputs.
struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  /// Use the same scale on both axes and draw the unit circle (Bloch plane).
  bool unit_circle = false;

  std::string render_svg() const;
};

}  // namespace dilatia
