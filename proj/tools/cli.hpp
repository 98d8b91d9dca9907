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

#include <iosfwd>
#include <string>
#include <vector>

#include "qtfet/model.hpp"

namespace qtfet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // config or solver error, failed check
inline constexpr int kExitUsage = 2;

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Built-in invariant suite at `params`: residual, state validity, energy
/// conservation, uniqueness, superoperator consistency and trace
/// preservation, null-space vs time-evolution agreement, and the uncoupled
/// product-Gibbs limit.
std::vector<CheckResult> run_checks(const SystemParams& params, double tol);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtfet::cli
