// Copyright 2026 The fdistill authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FDISTILL_TOOLS_SVG_HPP
#define FDISTILL_TOOLS_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace fdistill::cli {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

/// Minimal polyline chart. Convenience output only; the CSV stays the
/// artifact of record.
std::string render_svg(const PlotSpec& spec, const std::vector<Series>& series);

}  // namespace fdistill::cli

#endif  // FDISTILL_TOOLS_SVG_HPP
