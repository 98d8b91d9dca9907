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

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "qtfet/errors.hpp"
#include "qtfet/output.hpp"

namespace qtfet {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  if (ec != std::errc{}) throw Error("format_double: conversion failed");
  return {buf.data(), ptr};
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows, const SweepSpec& spec) {
  const auto names = column_names(spec);
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << '\n';
  for (const auto& row : rows) {
    for (Parameter p : kAllParameters) out << format_double(get(row.params, p)) << ',';
    out << format_double(row.currents.j_l) << ',' << format_double(row.currents.j_m) << ','
        << format_double(row.currents.j_r) << ',' << format_double(row.residual) << ',';
    for (double d : row.derived) out << format_double(d) << ',';
    out << to_string(row.status) << '\n';
  }
}

void emit_csv(std::span<const SweepRow> rows, const SweepSpec& spec,
              const std::filesystem::path& path) {
  if (rows.empty()) throw Error("emit_csv: no rows to write to '" + path.string() + "'");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("emit_csv: cannot open '" + path.string() + "' for writing");
  write_csv(out, rows, spec);
  out.flush();
  if (!out) throw Error("emit_csv: write to '" + path.string() + "' failed");
}

}  // namespace qtfet
