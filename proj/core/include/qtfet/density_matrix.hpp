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

#include <vector>

#include "qtfet/operator_algebra.hpp"

namespace qtfet {

struct StateTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double min_eigenvalue = -1e-10;
};

struct StateDiagnostics {
  double hermiticity_error;
  double trace_error;  // |tr(rho) - 1|
  double min_eigenvalue;

  bool within(const StateTolerances& tol) const noexcept {
    return hermiticity_error <= tol.hermiticity && trace_error <= tol.trace &&
           min_eigenvalue >= tol.min_eigenvalue;
  }
};

/// Ascending eigenvalues of (a + a^dagger) / 2.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

StateDiagnostics diagnose(const ComplexMatrix& rho);

/// 1/2 || a - b ||_1 for Hermitian a, b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian, unit-trace, positive semidefinite state.
class DensityMatrix {
 public:
  /// Validates; throws ConsistencyError outside `tol`.
  explicit DensityMatrix(ComplexMatrix mat, const StateTolerances& tol = {});

  static DensityMatrix maximally_mixed(std::size_t dim);

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }
  const StateDiagnostics& diagnostics() const noexcept { return diagnostics_; }

 private:
  ComplexMatrix mat_;
  StateDiagnostics diagnostics_;
};

}  // namespace qtfet
