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

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtfet/config.hpp"
#include "qtfet/density_matrix.hpp"
#include "qtfet/model.hpp"
#include "qtfet/observables.hpp"
#include "qtfet/solvers.hpp"

namespace qtfet {

/// Evenly spaced grid over one parameter, endpoints included.
struct Axis {
  Parameter parameter;
  double start;
  double stop;
  std::size_t count;

  double value(std::size_t i) const;
  std::vector<double> values() const;
};

/// Parses "temperatures.t_r : 0.01 : 1.5 : 100" (path : start : stop : count).
Axis parse_axis(std::string_view text);

/// c + a_l t_l + a_m t_m + a_r t_r
struct LinearExpression {
  double constant = 0.0;
  std::array<double, 3> coefficients{};  // t_l, t_m, t_r

  double evaluate(const SystemParams& p) const noexcept;

  /// Accepts sums of terms such as "t_m - t_r", "0.5*t_l + t_r - 1".
  static LinearExpression parse(std::string_view text);
};

struct DerivedColumn {
  std::string name;
  LinearExpression expression;
};

/// Parses "dT_MR = t_m - t_r".
DerivedColumn parse_derived_column(std::string_view text);

enum class PlotStyle { automatic, lines, heatmap };

struct PlotSettings {
  std::string x_column;  // defaults to axis1's parameter name
  std::string y_column = "j_l";
  std::string x_label;
  std::string y_label;
  std::string title;
  PlotStyle style = PlotStyle::automatic;
};

struct SweepSpec {
  SystemParams base;
  Axis axis1;
  std::optional<Axis> axis2;
  std::string output_path;
  std::string plot_path;
  std::vector<DerivedColumn> derived;
  PlotSettings plot;

  std::size_t point_count() const noexcept { return axis1.count * (axis2 ? axis2->count : 1); }
};

/// Builds a spec from the parameter sections plus a [sweep] section with
/// keys axis1, axis2, output, plot, derived (repeatable), plot_x, plot_y,
/// plot_style, x_label, y_label, title. Every grid point is validated.
/// Throws ConfigError.
SweepSpec parse_sweep_spec(const IniDocument& doc);
SweepSpec load_sweep_spec(const std::filesystem::path& path);

/// Grid points ordered axis2-major then axis1; throws ConfigError if any
/// point violates the model's parameter constraints.
std::vector<SystemParams> grid_points(const SweepSpec& spec);

enum class PointStatus { ok, solver_failed };

std::string_view to_string(PointStatus status);

struct SweepRow {
  std::size_t index1 = 0;
  std::size_t index2 = 0;
  SystemParams params;
  HeatCurrents currents;
  double residual = 0.0;
  std::vector<double> derived;
  PointStatus status = PointStatus::ok;
  std::string message;  // solver failure detail
  StateDiagnostics diagnostics{};
};

struct RunOptions {
  double tol = kDefaultResidualTolerance;
  unsigned threads = 1;
};

/// One fresh steady-state solve per grid point on a bounded worker pool.
/// Row order is independent of scheduling. Solver failures are recorded
/// in-row; only configuration errors throw.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const RunOptions& options = {});

/// CSV column order: parameters, j_l, j_m, j_r, residual, derived columns, status.
std::vector<std::string> column_names(const SweepSpec& spec);

/// Numeric value of a named column; throws ConfigError for unknown or
/// non-numeric columns.
double column_value(const SweepRow& row, const SweepSpec& spec, std::string_view column);

}  // namespace qtfet
