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

#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fdistill::cli {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const PlotSpec& spec, const std::vector<Series>& series) {
  const double width = 720, height = 480;
  const double left = 70, right = 20, top = 40, bottom = 55;

  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = x_min, y_max = -x_min;
  auto tx = [&](double v) { return spec.log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return spec.log_y ? std::log10(v) : v; };
  for (const Series& s : series) {
    for (const auto& [x, y] : s.points) {
      if (spec.log_x && x <= 0.0) continue;
      if (spec.log_y && y <= 0.0) continue;
      x_min = std::min(x_min, tx(x));
      x_max = std::max(x_max, tx(x));
      y_min = std::min(y_min, ty(y));
      y_max = std::max(y_max, ty(y));
    }
  }
  if (!(x_min < x_max)) {
    x_min -= 0.5;
    x_max += 0.5;
  }
  if (!(y_min < y_max)) {
    y_min -= 0.5;
    y_max += 0.5;
  }
  const double pad_y = 0.05 * (y_max - y_min);
  y_min -= pad_y;
  y_max += pad_y;

  auto px = [&](double v) {
    return left + (tx(v) - x_min) / (x_max - x_min) * (width - left - right);
  };
  auto py = [&](double v) {
    return height - bottom - (ty(v) - y_min) / (y_max - y_min) * (height - top - bottom);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(width / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"15\">" +
         spec.title + "</text>\n";

  // Axes box and min/max tick labels.
  svg += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" +
         num(width - left - right) + "\" height=\"" + num(height - top - bottom) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  auto untx = [&](double t) { return spec.log_x ? std::pow(10.0, t) : t; };
  auto unty = [&](double t) { return spec.log_y ? std::pow(10.0, t) : t; };
  svg += "<text x=\"" + num(left) + "\" y=\"" + num(height - bottom + 16) + "\">" +
         num(untx(x_min)) + "</text>\n";
  svg += "<text x=\"" + num(width - right) + "\" y=\"" + num(height - bottom + 16) +
         "\" text-anchor=\"end\">" + num(untx(x_max)) + "</text>\n";
  svg += "<text x=\"" + num(left - 6) + "\" y=\"" + num(height - bottom) +
         "\" text-anchor=\"end\">" + num(unty(y_min)) + "</text>\n";
  svg += "<text x=\"" + num(left - 6) + "\" y=\"" + num(top + 10) + "\" text-anchor=\"end\">" +
         num(unty(y_max)) + "</text>\n";
  svg += "<text x=\"" + num((left + width - right) / 2) + "\" y=\"" + num(height - 14) +
         "\" text-anchor=\"middle\">" + spec.x_label + "</text>\n";
  svg += "<text x=\"16\" y=\"" + num((top + height - bottom) / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num((top + height - bottom) / 2) + ")\">" + spec.y_label + "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
    std::string path;
    bool first = true;
    for (const auto& [x, y] : series[i].points) {
      if (spec.log_x && x <= 0.0) continue;
      if (spec.log_y && y <= 0.0) continue;
      path += first ? "M" : "L";
      path += num(px(x)) + " " + num(py(y)) + " ";
      first = false;
    }
    if (path.empty()) continue;
    svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    if (!series[i].label.empty() && i < 12) {
      const double ly = top + 16 + 16 * static_cast<double>(i);
      svg += "<line x1=\"" + num(left + 8) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
             num(left + 28) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + color +
             "\" stroke-width=\"1.5\"/>\n";
      svg += "<text x=\"" + num(left + 34) + "\" y=\"" + num(ly) + "\">" + series[i].label +
             "</text>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace fdistill::cli
