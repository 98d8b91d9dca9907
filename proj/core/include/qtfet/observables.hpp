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
#include <span>
#include <vector>

#include "qtfet/density_matrix.hpp"
#include "qtfet/model.hpp"

namespace qtfet {

/// Largest tolerated |Im Tr(H D[rho])| before a current is rejected.
inline constexpr double kCurrentImaginaryTolerance = 1e-11;

/// Bath heat currents J_P = -Tr(H D_P[rho]) in units of w0^2.
struct HeatCurrents {
  double j_l = 0.0;
  double j_m = 0.0;
  double j_r = 0.0;

  double sum() const noexcept { return j_l + j_m + j_r; }
  double max_abs() const noexcept;
};

enum class Bath { left, middle, right };

/// Channels belonging to one bath; the middle bath owns both M1 and M2.
std::vector<BathChannel> channels_of(Bath bath, std::span<const BathChannel> channels);

/// -Re Tr(H sum_{ch in group} D_ch[rho]). Throws ConsistencyError when the
/// imaginary part exceeds kCurrentImaginaryTolerance.
double heat_current(const ComplexMatrix& hamiltonian, std::span<const BathChannel> group,
                    const ComplexMatrix& rho);

HeatCurrents heat_currents(const ComplexMatrix& hamiltonian, std::span<const BathChannel> channels,
                           const ComplexMatrix& rho);

struct ReducedPopulations {
  std::array<double, kLeftDim> left;
  std::array<double, kMiddleDim> middle;
  std::array<double, kRightDim> right;
};

/// Diagonals of the three single-subsystem reduced states.
ReducedPopulations reduced_populations(const DensityMatrix& rho);

}  // namespace qtfet
