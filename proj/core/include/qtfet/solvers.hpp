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

#include <cstddef>
#include <functional>
#include <span>

#include "qtfet/density_matrix.hpp"
#include "qtfet/lindblad.hpp"
#include "qtfet/observables.hpp"

namespace qtfet {

inline constexpr double kDefaultResidualTolerance = 1e-10;
/// Second-smallest singular value below which the null space counts as degenerate.
inline constexpr double kDegenerateSingularValue = 1e-10;
inline constexpr double kDefaultTimeStep = 0.01;

struct SteadyStateResult {
  DensityMatrix state;
  double residual;  // || L vec(rho) ||_2
  HeatCurrents currents;
  double smallest_singular_value;
  double second_singular_value;
  double largest_singular_value;
};

/// Null vector of the superoperator, Hermitized and trace-normalized.
///
/// Throws SolverError(non_unique_steady_state) when the second-smallest
/// singular value is below kDegenerateSingularValue and
/// SolverError(no_steady_state) when the residual exceeds `tol`.
SteadyStateResult steady_state(const Liouvillian& liouvillian,
                               double tol = kDefaultResidualTolerance);

/// Builds the model, its superoperator and solves in one go.
SteadyStateResult solve_steady_state(const SystemParams& params,
                                     double tol = kDefaultResidualTolerance);

using EvolveObserver = std::function<void(double time, const ComplexMatrix& rho)>;

struct EvolveOptions {
  double t_final = 0.0;
  double dt_max = kDefaultTimeStep;
  /// Number of evenly spaced observer calls including t = 0 and t_final.
  std::size_t samples = 0;
  EvolveObserver observer;
};

/// Classical fixed-step RK4 integration of the master equation.
///
/// Throws SolverError(integration_failure) when the state drifts more than
/// ten times the density-matrix tolerances; a smaller dt_max usually helps.
DensityMatrix evolve(const DensityMatrix& rho0, const ComplexMatrix& hamiltonian,
                     std::span<const BathChannel> channels, const EvolveOptions& options);

DensityMatrix evolve(const DensityMatrix& rho0, const ComplexMatrix& hamiltonian,
                     std::span<const BathChannel> channels, double t_final,
                     double dt_max = kDefaultTimeStep);

}  // namespace qtfet
