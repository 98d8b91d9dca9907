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

#include "qtfet/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <thread>

#include "qtfet/errors.hpp"
#include "text_util.hpp"

namespace qtfet {

namespace {

constexpr std::array<std::string_view, 3> kTemperatureNames{"t_l", "t_m", "t_r"};

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s.front())) || s.front() == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Shifts a parse error inside a [sweep] value onto its config line.
template <class F>
auto at_line(const IniDocument& doc, const IniEntry& entry, F&& f) {
  try {
    return f();
  } catch (const ConfigError& e) {
    doc.fail(entry.line, entry.key + ": " + e.what());
  }
}

}  // namespace

double Axis::value(std::size_t i) const {
  if (i + 1 == count) return stop;
  return start + static_cast<double>(i) * (stop - start) / static_cast<double>(count - 1);
}

std::vector<double> Axis::values() const {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = value(i);
  return v;
}

Axis parse_axis(std::string_view text) {
  const auto parts = detail::split(text, ':');
  if (parts.size() != 4) {
    throw ConfigError("axis must read 'section.key : start : stop : count', got '" +
                      std::string(text) + "'");
  }
  const auto param = parse_parameter_path(parts[0]);
  if (!param) throw ConfigError("unknown parameter path '" + std::string(parts[0]) + "'");
  const auto start = parse_number(parts[1]);
  const auto stop = parse_number(parts[2]);
  if (!start || !stop) throw ConfigError("axis start and stop must be numbers");
  const auto count = parse_number(parts[3]);
  if (!count || *count != std::floor(*count) || *count < 2.0 || *count > 1e7) {
    throw ConfigError("axis count must be an integer >= 2, got '" + std::string(parts[3]) + "'");
  }
  if (*start == *stop) throw ConfigError("axis start and stop must differ");
  return Axis{*param, *start, *stop, static_cast<std::size_t>(*count)};
}

double LinearExpression::evaluate(const SystemParams& p) const noexcept {
  return constant + coefficients[0] * p.t_l + coefficients[1] * p.t_m + coefficients[2] * p.t_r;
}

LinearExpression LinearExpression::parse(std::string_view text) {
  const std::string source(text);
  const auto bad = [&](const std::string& why) {
    return ConfigError("cannot parse expression '" + source + "': " + why);
  };

  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto read_number = [&]() -> std::optional<double> {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) return std::nullopt;
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  const auto read_identifier = [&]() -> std::string_view {
    const std::size_t begin = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    return text.substr(begin, pos - begin);
  };

  // expr := ['+'|'-'] term (('+'|'-') term)*
  // term := number ['*' variable] | variable
  LinearExpression expr;
  bool first = true;
  while (true) {
    skip_space();
    if (pos == text.size()) {
      if (first) throw bad("empty expression");
      break;
    }
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
      skip_space();
    } else if (!first) {
      throw bad("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;

    double factor = sign;
    std::string_view name;
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
      const auto number = read_number();
      if (!number) throw bad("bad number at offset " + std::to_string(pos));
      skip_space();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_space();
        factor *= *number;
        name = read_identifier();
        if (name.empty()) throw bad("expected a variable after '*'");
      } else {
        expr.constant += sign * *number;
        continue;
      }
    } else {
      name = read_identifier();
      if (name.empty()) throw bad("expected a term at offset " + std::to_string(pos));
    }
    const auto it = std::find(kTemperatureNames.begin(), kTemperatureNames.end(), name);
    if (it == kTemperatureNames.end()) {
      throw bad("unknown variable '" + std::string(name) + "' (expected t_l, t_m or t_r)");
    }
    expr.coefficients[static_cast<std::size_t>(it - kTemperatureNames.begin())] += factor;
  }
  return expr;
}

DerivedColumn parse_derived_column(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("derived column must read 'name = expression', got '" + std::string(text) +
                      "'");
  }
  const auto name = detail::trim(text.substr(0, eq));
  if (!is_identifier(name)) throw ConfigError("invalid column name '" + std::string(name) + "'");
  return DerivedColumn{std::string(name), LinearExpression::parse(text.substr(eq + 1))};
}

SweepSpec parse_sweep_spec(const IniDocument& doc) {
  const IniSection* sweep = doc.find("sweep");
  if (!sweep) throw ConfigError(doc.source() + ": missing [sweep] section");

  std::optional<Axis> axis1;
  std::optional<Axis> axis2;
  SweepSpec spec{.base = {}, .axis1 = {}, .axis2 = {}, .output_path = {}, .plot_path = {},
                 .derived = {}, .plot = {}};
  std::set<std::string> seen_keys;
  for (const auto& entry : sweep->entries) {
    if (entry.key != "derived" && !seen_keys.insert(entry.key).second) {
      doc.fail(entry.line, "duplicate key '" + entry.key + "' in [sweep]");
    }
    if (entry.key == "axis1") {
      axis1 = at_line(doc, entry, [&] { return parse_axis(entry.value); });
    } else if (entry.key == "axis2") {
      axis2 = at_line(doc, entry, [&] { return parse_axis(entry.value); });
    } else if (entry.key == "output") {
      spec.output_path = entry.value;
    } else if (entry.key == "plot") {
      spec.plot_path = entry.value;
    } else if (entry.key == "derived") {
      spec.derived.push_back(at_line(doc, entry, [&] { return parse_derived_column(entry.value); }));
    } else if (entry.key == "plot_x") {
      spec.plot.x_column = entry.value;
    } else if (entry.key == "plot_y") {
      spec.plot.y_column = entry.value;
    } else if (entry.key == "x_label") {
      spec.plot.x_label = entry.value;
    } else if (entry.key == "y_label") {
      spec.plot.y_label = entry.value;
    } else if (entry.key == "title") {
      spec.plot.title = entry.value;
    } else if (entry.key == "plot_style") {
      if (entry.value == "lines") {
        spec.plot.style = PlotStyle::lines;
      } else if (entry.value == "heatmap") {
        spec.plot.style = PlotStyle::heatmap;
      } else if (entry.value == "auto") {
        spec.plot.style = PlotStyle::automatic;
      } else {
        doc.fail(entry.line, "plot_style must be lines, heatmap or auto");
      }
    } else {
      doc.fail(entry.line, "unknown key '" + entry.key + "' in [sweep]");
    }
  }
  if (!axis1) throw ConfigError(doc.source() + ": [sweep] requires axis1");
  spec.axis1 = *axis1;
  spec.axis2 = axis2;
  if (axis2 && axis2->parameter == axis1->parameter) {
    throw ConfigError(doc.source() + ": axis1 and axis2 sweep the same parameter");
  }

  std::set<Parameter> swept{axis1->parameter};
  if (axis2) swept.insert(axis2->parameter);
  spec.base = params_from(doc, swept);
  set(spec.base, axis1->parameter, axis1->start);
  if (axis2) set(spec.base, axis2->parameter, axis2->start);

  std::set<std::string> names;
  for (const auto& c : column_names(spec)) {
    if (!names.insert(c).second) {
      throw ConfigError(doc.source() + ": duplicate column name '" + c + "'");
    }
  }
  if (spec.plot.x_column.empty()) spec.plot.x_column = std::string(parameter_name(axis1->parameter));
  for (const auto* column : {&spec.plot.x_column, &spec.plot.y_column}) {
    if (!names.contains(*column) || *column == "status") {
      throw ConfigError(doc.source() + ": plot column '" + *column + "' is not a numeric column");
    }
  }

  grid_points(spec);
  return spec;
}

SweepSpec load_sweep_spec(const std::filesystem::path& path) {
  return parse_sweep_spec(IniDocument::load(path));
}

std::vector<SystemParams> grid_points(const SweepSpec& spec) {
  const std::size_t n1 = spec.axis1.count;
  const std::size_t n2 = spec.axis2 ? spec.axis2->count : 1;
  std::vector<SystemParams> points;
  points.reserve(n1 * n2);
  for (std::size_t i2 = 0; i2 < n2; ++i2) {
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
      SystemParams p = spec.base;
      set(p, spec.axis1.parameter, spec.axis1.value(i1));
      if (spec.axis2) set(p, spec.axis2->parameter, spec.axis2->value(i2));
      try {
        validate(p);
      } catch (const DomainError& e) {
        throw ConfigError("sweep point (" + std::to_string(i1) + ", " + std::to_string(i2) +
                          ") is invalid: " + e.what());
      }
      points.push_back(p);
    }
  }
  return points;
}

std::string_view to_string(PointStatus status) {
  return status == PointStatus::ok ? "ok" : "solver_failed";
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const RunOptions& options) {
  const auto points = grid_points(spec);
  const std::size_t n1 = spec.axis1.count;
  std::vector<SweepRow> rows(points.size());

  const auto solve_point = [&](std::size_t k) {
    SweepRow& row = rows[k];
    row.index1 = k % n1;
    row.index2 = k / n1;
    row.params = points[k];
    for (const auto& column : spec.derived) row.derived.push_back(column.expression.evaluate(row.params));
    try {
      const auto result = solve_steady_state(row.params, options.tol);
      row.currents = result.currents;
      row.residual = result.residual;
      row.diagnostics = result.state.diagnostics();
    } catch (const Error& e) {
      constexpr double nan = std::numeric_limits<double>::quiet_NaN();
      row.status = PointStatus::solver_failed;
      row.message = e.what();
      row.currents = {nan, nan, nan};
      row.residual = nan;
      row.diagnostics = {nan, nan, nan};
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(points.size(), 1));
  if (workers == 1) {
    for (std::size_t k = 0; k < points.size(); ++k) solve_point(k);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next.fetch_add(1); k < points.size(); k = next.fetch_add(1)) {
          solve_point(k);
        }
      });
    }
  }
  return rows;
}

std::vector<std::string> column_names(const SweepSpec& spec) {
  std::vector<std::string> names;
  for (Parameter p : kAllParameters) names.emplace_back(parameter_name(p));
  for (const char* c : {"j_l", "j_m", "j_r", "residual"}) names.emplace_back(c);
  for (const auto& d : spec.derived) names.push_back(d.name);
  names.emplace_back("status");
  return names;
}

double column_value(const SweepRow& row, const SweepSpec& spec, std::string_view column) {
  for (Parameter p : kAllParameters) {
    if (column == parameter_name(p)) return get(row.params, p);
  }
  if (column == "j_l") return row.currents.j_l;
  if (column == "j_m") return row.currents.j_m;
  if (column == "j_r") return row.currents.j_r;
  if (column == "residual") return row.residual;
  for (std::size_t i = 0; i < spec.derived.size(); ++i) {
    if (column == spec.derived[i].name) return row.derived.at(i);
  }
  throw ConfigError("no numeric column named '" + std::string(column) + "'");
}

}  // namespace qtfet
