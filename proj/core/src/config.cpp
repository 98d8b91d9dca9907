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

#include "qtfet/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>

#include "qtfet/errors.hpp"
#include "text_util.hpp"

namespace qtfet {

IniDocument IniDocument::parse(std::istream& in, std::string source) {
  IniDocument doc;
  doc.source_ = std::move(source);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']') doc.fail(line_no, "unterminated section header");
      const auto name = detail::trim(line.substr(1, line.size() - 2));
      if (name.empty()) doc.fail(line_no, "empty section name");
      doc.sections_.push_back({std::string(name), {}, line_no});
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) doc.fail(line_no, "expected 'key = value'");
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (key.empty()) doc.fail(line_no, "missing key before '='");
    if (doc.sections_.empty()) doc.fail(line_no, "key '" + std::string(key) + "' outside any section");
    doc.sections_.back().entries.push_back({std::string(key), std::string(value), line_no});
  }
  return doc;
}

IniDocument IniDocument::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  return parse(in, path.string());
}

const IniSection* IniDocument::find(std::string_view name) const noexcept {
  for (const auto& s : sections_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

void IniDocument::fail(int line, const std::string& message) const {
  throw ConfigError(source_ + ":" + std::to_string(line) + ": " + message);
}

std::string_view parameter_name(Parameter p) {
  switch (p) {
    case Parameter::e1: return "e1";
    case Parameter::e2: return "e2";
    case Parameter::e3: return "e3";
    case Parameter::e4: return "e4";
    case Parameter::g_lm: return "g_lm";
    case Parameter::g_mr: return "g_mr";
    case Parameter::kappa_l: return "kappa_l";
    case Parameter::kappa_m: return "kappa_m";
    case Parameter::kappa_r: return "kappa_r";
    case Parameter::t_l: return "t_l";
    case Parameter::t_m: return "t_m";
    case Parameter::t_r: return "t_r";
  }
  return "?";
}

std::string_view parameter_section(Parameter p) {
  switch (p) {
    case Parameter::e1:
    case Parameter::e2:
    case Parameter::e3:
    case Parameter::e4:
      return "energies";
    case Parameter::g_lm:
    case Parameter::g_mr:
      return "couplings";
    case Parameter::kappa_l:
    case Parameter::kappa_m:
    case Parameter::kappa_r:
      return "rates";
    case Parameter::t_l:
    case Parameter::t_m:
    case Parameter::t_r:
      return "temperatures";
  }
  return "?";
}

std::string parameter_path(Parameter p) {
  return std::string(parameter_section(p)) + "." + std::string(parameter_name(p));
}

std::optional<Parameter> parse_parameter_path(std::string_view path) {
  path = detail::trim(path);
  for (Parameter p : kAllParameters) {
    if (path == parameter_path(p)) return p;
  }
  return std::nullopt;
}

double get(const SystemParams& params, Parameter p) {
  switch (p) {
    case Parameter::e1: return params.e1;
    case Parameter::e2: return params.e2;
    case Parameter::e3: return params.e3;
    case Parameter::e4: return params.e4;
    case Parameter::g_lm: return params.g_lm;
    case Parameter::g_mr: return params.g_mr;
    case Parameter::kappa_l: return params.kappa_l;
    case Parameter::kappa_m: return params.kappa_m;
    case Parameter::kappa_r: return params.kappa_r;
    case Parameter::t_l: return params.t_l;
    case Parameter::t_m: return params.t_m;
    case Parameter::t_r: return params.t_r;
  }
  return 0.0;
}

void set(SystemParams& params, Parameter p, double value) {
  switch (p) {
    case Parameter::e1: params.e1 = value; break;
    case Parameter::e2: params.e2 = value; break;
    case Parameter::e3: params.e3 = value; break;
    case Parameter::e4: params.e4 = value; break;
    case Parameter::g_lm: params.g_lm = value; break;
    case Parameter::g_mr: params.g_mr = value; break;
    case Parameter::kappa_l: params.kappa_l = value; break;
    case Parameter::kappa_m: params.kappa_m = value; break;
    case Parameter::kappa_r: params.kappa_r = value; break;
    case Parameter::t_l: params.t_l = value; break;
    case Parameter::t_m: params.t_m = value; break;
    case Parameter::t_r: params.t_r = value; break;
  }
}

std::optional<double> parse_number(std::string_view text) {
  text = detail::trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

SystemParams params_from(const IniDocument& doc, const std::set<Parameter>& optional) {
  SystemParams params;
  std::map<Parameter, int> seen;
  for (const auto& section : doc.sections()) {
    if (section.name == "sweep") continue;
    if (section.name != "energies" && section.name != "couplings" && section.name != "rates" &&
        section.name != "temperatures") {
      doc.fail(section.line, "unknown section [" + section.name + "]");
    }
    for (const auto& entry : section.entries) {
      const auto p = parse_parameter_path(section.name + "." + entry.key);
      if (!p) doc.fail(entry.line, "unknown key '" + entry.key + "' in [" + section.name + "]");
      if (seen.contains(*p)) {
        doc.fail(entry.line, "duplicate key '" + entry.key + "' (first set on line " +
                                 std::to_string(seen[*p]) + ")");
      }
      const auto value = parse_number(entry.value);
      if (!value) doc.fail(entry.line, "'" + entry.key + "' is not a number: '" + entry.value + "'");
      set(params, *p, *value);
      seen[*p] = entry.line;
    }
  }
  for (Parameter p : kAllParameters) {
    if (!seen.contains(p) && !optional.contains(p)) {
      throw ConfigError(doc.source() + ": missing required key '" + parameter_path(p) + "'");
    }
  }
  return params;
}

SystemParams load_params(const std::filesystem::path& path) {
  const auto doc = IniDocument::load(path);
  SystemParams params = params_from(doc);
  try {
    validate(params);
  } catch (const DomainError& e) {
    throw ConfigError(doc.source() + ": " + e.what());
  }
  return params;
}

}  // namespace qtfet
