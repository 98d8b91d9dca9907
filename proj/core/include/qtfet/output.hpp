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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "qtfet/sweep.hpp"

namespace qtfet {

/// 17 significant digits, which round-trips exactly; "nan", "inf" or "-inf"
/// for non-finite values.
std::string format_double(double value);

/// Header plus one line per row, comma separated, '\n' line endings.
void write_csv(std::ostream& out, std::span<const SweepRow> rows, const SweepSpec& spec);

/// Throws Error with the path in the message on I/O failure or empty rows.
void emit_csv(std::span<const SweepRow> rows, const SweepSpec& spec,
              const std::filesystem::path& path);

/// Standalone SVG 1.1 document. Line chart with one polyline per axis2 value,
/// or a heat map of plot_y over the (axis1, axis2) grid.
std::string render_plot(std::span<const SweepRow> rows, const SweepSpec& spec);

void emit_plot(std::span<const SweepRow> rows, const SweepSpec& spec,
               const std::filesystem::path& path);

/// The style actually drawn for `spec` (resolves PlotStyle::automatic).
PlotStyle resolved_style(const SweepSpec& spec);

}  // namespace qtfet
