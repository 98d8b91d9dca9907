// Copyright 2026 The qtfet Authors
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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "qtfet/errors.hpp"
#include "qtfet/output.hpp"

namespace qtfet {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 100.0;
constexpr double kRight = 170.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  // Pads degenerate or empty ranges so the mapping stays finite.
  Range padded(double fraction) const {
    if (!(lo <= hi)) return {0.0, 1.0};
    double span = hi - lo;
    if (span == 0.0) span = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
    return {lo - fraction * span, hi + fraction * span};
  }

  double to_unit(double v) const { return (v - lo) / (hi - lo); }
};

std::string_view label_or(const std::string& label, const std::string& fallback) {
  return label.empty() ? std::string_view(fallback) : std::string_view(label);
}

void open_document(std::ostringstream& svg, const std::string& title) {
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  if (!title.empty()) {
    svg << "<text x=\"" << fixed(kLeft + kPlotW / 2) << "\" y=\"28\" text-anchor=\"middle\" "
        << "font-size=\"15\">" << escape(title) << "</text>\n";
  }
}

void draw_axes(std::ostringstream& svg, const Range& x, const Range& y, std::string_view x_label,
               std::string_view y_label) {
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlotW << "\" height=\""
      << kPlotH << "\" fill=\"none\" stroke=\"black\"/>\n";
  constexpr int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    const double f = static_cast<double>(i) / ticks;
    const double px = kLeft + f * kPlotW;
    const double py = kTop + kPlotH - f * kPlotH;
    svg << "<line x1=\"" << fixed(px) << "\" y1=\"" << fixed(kTop + kPlotH) << "\" x2=\""
        << fixed(px) << "\" y2=\"" << fixed(kTop + kPlotH + 5) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fixed(px) << "\" y=\"" << fixed(kTop + kPlotH + 20)
        << "\" text-anchor=\"middle\">" << short_number(x.lo + f * (x.hi - x.lo)) << "</text>\n"
        << "<line x1=\"" << fixed(kLeft - 5) << "\" y1=\"" << fixed(py) << "\" x2=\""
        << fixed(kLeft) << "\" y2=\"" << fixed(py) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fixed(kLeft - 8) << "\" y=\"" << fixed(py + 4)
        << "\" text-anchor=\"end\">" << short_number(y.lo + f * (y.hi - y.lo)) << "</text>\n";
  }
  svg << "<text class=\"x-label\" x=\"" << fixed(kLeft + kPlotW / 2) << "\" y=\""
      << fixed(kHeight - 22) << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n"
      << "<text class=\"y-label\" x=\"24\" y=\"" << fixed(kTop + kPlotH / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 24 " << fixed(kTop + kPlotH / 2)
      << ")\">" << escape(y_label) << "</text>\n";
}

std::string render_lines(std::span<const SweepRow> rows, const SweepSpec& spec) {
  const auto& plot = spec.plot;
  std::map<std::size_t, std::vector<std::pair<double, double>>> curves;
  Range xr, yr;
  for (const auto& row : rows) {
    auto& curve = curves[row.index2];
    if (row.status != PointStatus::ok) continue;
    const double x = column_value(row, spec, plot.x_column);
    const double y = column_value(row, spec, plot.y_column);
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    curve.emplace_back(x, y);
    xr.include(x);
    yr.include(y);
  }
  const Range x = xr.padded(0.0);
  const Range y = yr.padded(0.05);

  std::ostringstream svg;
  open_document(svg, plot.title);
  draw_axes(svg, x, y, label_or(plot.x_label, plot.x_column), label_or(plot.y_label, plot.y_column));

  std::size_t curve_no = 0;
  for (const auto& [index2, points] : curves) {
    const char* color = kPalette[curve_no % kPalette.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double px = kLeft + x.to_unit(points[i].first) * kPlotW;
      const double py = kTop + kPlotH - y.to_unit(points[i].second) * kPlotH;
      svg << (i ? " " : "") << fixed(px) << ',' << fixed(py);
    }
    svg << "\"/>\n";
    if (spec.axis2) {
      const double ly = kTop + 14.0 + 18.0 * static_cast<double>(curve_no);
      const double lx = kLeft + kPlotW + 12.0;
      svg << "<line x1=\"" << fixed(lx) << "\" y1=\"" << fixed(ly) << "\" x2=\"" << fixed(lx + 22)
          << "\" y2=\"" << fixed(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
          << "<text x=\"" << fixed(lx + 28) << "\" y=\"" << fixed(ly + 4) << "\">"
          << escape(parameter_name(spec.axis2->parameter)) << " = "
          << short_number(spec.axis2->value(index2)) << "</text>\n";
    }
    ++curve_no;
  }
  svg << "</svg>\n";
  return svg.str();
}

// Diverging blue-white-red map of t in [-1, 1].
std::string diverging_color(double t) {
  t = std::clamp(t, -1.0, 1.0);
  const auto mix = [](double a, double b, double f) {
    return static_cast<int>(std::lround(a + (b - a) * f));
  };
  int r, g, b;
  if (t < 0) {
    r = mix(255, 33, -t);
    g = mix(255, 102, -t);
    b = mix(255, 172, -t);
  } else {
    r = mix(255, 178, t);
    g = mix(255, 24, t);
    b = mix(255, 43, t);
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

std::string render_heatmap(std::span<const SweepRow> rows, const SweepSpec& spec) {
  if (!spec.axis2) throw ConfigError("heat-map plots need a 2-D sweep (axis2)");
  const auto& plot = spec.plot;
  const Axis& a1 = spec.axis1;
  const Axis& a2 = *spec.axis2;

  double scale = 0.0;
  for (const auto& row : rows) {
    if (row.status != PointStatus::ok) continue;
    const double v = column_value(row, spec, plot.y_column);
    if (std::isfinite(v)) scale = std::max(scale, std::abs(v));
  }
  if (scale == 0.0) scale = 1.0;

  const Range x{std::min(a1.start, a1.stop), std::max(a1.start, a1.stop)};
  const Range y{std::min(a2.start, a2.stop), std::max(a2.start, a2.stop)};

  std::ostringstream svg;
  open_document(svg, plot.title);

  const double cell_w = kPlotW / static_cast<double>(a1.count);
  const double cell_h = kPlotH / static_cast<double>(a2.count);
  for (const auto& row : rows) {
    // Cells sit in grid order; the axis direction follows start -> stop.
    const double fx = a1.stop > a1.start ? static_cast<double>(row.index1)
                                         : static_cast<double>(a1.count - 1 - row.index1);
    const double fy = a2.stop > a2.start ? static_cast<double>(row.index2)
                                         : static_cast<double>(a2.count - 1 - row.index2);
    std::string color = "#999999";
    if (row.status == PointStatus::ok) {
      const double v = column_value(row, spec, plot.y_column);
      if (std::isfinite(v)) color = diverging_color(v / scale);
    }
    svg << "<rect class=\"cell\" x=\"" << fixed(kLeft + fx * cell_w) << "\" y=\""
        << fixed(kTop + kPlotH - (fy + 1) * cell_h) << "\" width=\"" << fixed(cell_w)
        << "\" height=\"" << fixed(cell_h) << "\" fill=\"" << color << "\"/>\n";
  }

  // Axes span cell centres of the first and last grid values.
  const Range xc{x.lo - 0.5 * (x.hi - x.lo) / static_cast<double>(a1.count - 1),
                 x.hi + 0.5 * (x.hi - x.lo) / static_cast<double>(a1.count - 1)};
  const Range yc{y.lo - 0.5 * (y.hi - y.lo) / static_cast<double>(a2.count - 1),
                 y.hi + 0.5 * (y.hi - y.lo) / static_cast<double>(a2.count - 1)};
  const std::string x_default(parameter_name(a1.parameter));
  const std::string y_default(parameter_name(a2.parameter));
  draw_axes(svg, xc, yc, label_or(plot.x_label, x_default), label_or(plot.y_label, y_default));

  // Colour bar.
  const double bx = kLeft + kPlotW + 30.0;
  constexpr int steps = 40;
  for (int i = 0; i < steps; ++i) {
    const double t = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / steps;
    svg << "<rect x=\"" << fixed(bx) << "\" y=\"" << fixed(kTop + i * kPlotH / steps)
        << "\" width=\"20\" height=\"" << fixed(kPlotH / steps + 0.5) << "\" fill=\""
        << diverging_color(t) << "\"/>\n";
  }
  svg << "<rect x=\"" << fixed(bx) << "\" y=\"" << kTop << "\" width=\"20\" height=\"" << kPlotH
      << "\" fill=\"none\" stroke=\"black\"/>\n"
      << "<text x=\"" << fixed(bx + 26) << "\" y=\"" << fixed(kTop + 10) << "\">"
      << short_number(scale) << "</text>\n"
      << "<text x=\"" << fixed(bx + 26) << "\" y=\"" << fixed(kTop + kPlotH / 2 + 4) << "\">0</text>\n"
      << "<text x=\"" << fixed(bx + 26) << "\" y=\"" << fixed(kTop + kPlotH) << "\">"
      << short_number(-scale) << "</text>\n"
      << "<text x=\"" << fixed(bx) << "\" y=\"" << fixed(kTop - 10) << "\">"
      << escape(plot.y_column) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

PlotStyle resolved_style(const SweepSpec& spec) {
  if (spec.plot.style != PlotStyle::automatic) return spec.plot.style;
  return spec.axis2 ? PlotStyle::heatmap : PlotStyle::lines;
}

std::string render_plot(std::span<const SweepRow> rows, const SweepSpec& spec) {
  return resolved_style(spec) == PlotStyle::heatmap ? render_heatmap(rows, spec)
                                                    : render_lines(rows, spec);
}

void emit_plot(std::span<const SweepRow> rows, const SweepSpec& spec,
               const std::filesystem::path& path) {
  const std::string svg = render_plot(rows, spec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("emit_plot: cannot open '" + path.string() + "' for writing");
  out << svg;
  out.flush();
  if (!out) throw Error("emit_plot: write to '" + path.string() + "' failed");
}

}  // namespace qtfet
