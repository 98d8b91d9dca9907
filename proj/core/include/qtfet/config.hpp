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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qtfet/model.hpp"

namespace qtfet {

// INI-style configuration:
//
//   # comment
//   [energies]
//   e1 = 1.0
//
// Keys may repeat inside a section; order is preserved.

struct IniEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct IniSection {
  std::string name;
  std::vector<IniEntry> entries;
  int line = 0;
};

class IniDocument {
 public:
  /// Throws ConfigError on malformed lines. `source` names the input in messages.
  static IniDocument parse(std::istream& in, std::string source = "<config>");
  static IniDocument load(const std::filesystem::path& path);

  const std::string& source() const noexcept { return source_; }
  const std::vector<IniSection>& sections() const noexcept { return sections_; }
  const IniSection* find(std::string_view name) const noexcept;

  /// "source:line: message"
  [[noreturn]] void fail(int line, const std::string& message) const;

 private:
  std::string source_;
  std::vector<IniSection> sections_;
};

/// Addressable model constant, written "section.key" in configs.
enum class Parameter { e1, e2, e3, e4, g_lm, g_mr, kappa_l, kappa_m, kappa_r, t_l, t_m, t_r };

inline constexpr std::array<Parameter, 12> kAllParameters{
    Parameter::e1,      Parameter::e2,      Parameter::e3,      Parameter::e4,
    Parameter::g_lm,    Parameter::g_mr,    Parameter::kappa_l, Parameter::kappa_m,
    Parameter::kappa_r, Parameter::t_l,     Parameter::t_m,     Parameter::t_r};

/// Bare key, e.g. "t_r".
std::string_view parameter_name(Parameter p);
/// Config section, e.g. "temperatures".
std::string_view parameter_section(Parameter p);
/// "temperatures.t_r"
std::string parameter_path(Parameter p);
std::optional<Parameter> parse_parameter_path(std::string_view path);

double get(const SystemParams& params, Parameter p);
void set(SystemParams& params, Parameter p, double value);

/// Strict number parse of a whole (trimmed) token.
std::optional<double> parse_number(std::string_view text);

/// Reads the [energies], [couplings], [rates] and [temperatures] sections.
/// Every parameter must be present except those listed in `optional`.
/// Unknown keys in these sections are errors. The result is not validated.
SystemParams params_from(const IniDocument& doc, const std::set<Parameter>& optional = {});

/// Loads and validates a parameter file. Throws ConfigError.
SystemParams load_params(const std::filesystem::path& path);

}  // namespace qtfet
