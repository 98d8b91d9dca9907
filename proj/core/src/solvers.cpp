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

#include "qtfet/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "eigen_bridge.hpp"
#include "qtfet/errors.hpp"

namespace qtfet {

namespace {

// Integration aborts beyond ten times the density-matrix tolerances.
constexpr double kEvolveHermiticityLimit = 1e-11;
constexpr double kEvolveTraceLimit = 1e-8;
constexpr double kEvolveEigenvalueLimit = -1e-9;
constexpr std::size_t kPositivityCheckInterval = 1024;

ComplexMatrix hermitized(const ComplexMatrix& m) {
  ComplexMatrix h = m + dagger(m);
  h *= 0.5;
  return h;
}

// Squared magnitudes, so the per-step checks need no square roots.
constexpr double kEntryNormLimit = (1.0 + kEvolveTraceLimit) * (1.0 + kEvolveTraceLimit);
constexpr double kHermiticityNormLimit = kEvolveHermiticityLimit * kEvolveHermiticityLimit;
constexpr double kTraceNormLimit = kEvolveTraceLimit * kEvolveTraceLimit;

struct StepCheck {
  double max_norm = 0.0;
  double hermiticity_norm = 0.0;
  Complex trace{};
};

StepCheck check_step(const ComplexMatrix& rho) {
  StepCheck c;
  const std::size_t d = rho.dim();
  for (std::size_t i = 0; i < d; ++i) {
    c.trace += rho(i, i);
    for (std::size_t j = 0; j < d; ++j) {
      c.max_norm = std::max(c.max_norm, std::norm(rho(i, j)));
      c.hermiticity_norm = std::max(c.hermiticity_norm, std::norm(rho(i, j) - std::conj(rho(j, i))));
    }
  }
  return c;
}

[[noreturn]] void integration_failure(double time, const std::string& detail) {
  std::ostringstream msg;
  msg << "integration failed at t = " << time << ": " << detail
      << "; try a smaller dt_max";
  throw SolverError(SolverError::Kind::integration_failure, msg.str());
}

}  // namespace

SteadyStateResult steady_state(const Liouvillian& liouvillian, double tol) {
  if (!(tol > 0.0)) throw DomainError("steady_state: tolerance must be positive");

  const Eigen::MatrixXcd l = detail::to_eigen(liouvillian.matrix);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(l, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Eigen::Index n = sv.size();
  const double smallest = sv(n - 1);
  const double second = n > 1 ? sv(n - 2) : 0.0;

  if (second < kDegenerateSingularValue) {
    std::ostringstream msg;
    msg << "non-unique steady state: second-smallest singular value " << second;
    throw SolverError(SolverError::Kind::non_unique_steady_state, msg.str());
  }

  const Eigen::VectorXcd null_vector = svd.matrixV().col(n - 1);
  ComplexMatrix rho = unvectorize({null_vector.data(), static_cast<std::size_t>(n)});
  const Complex tr = trace(rho);
  if (std::abs(tr) < 1e-300) {
    throw SolverError(SolverError::Kind::no_steady_state, "no steady state: null vector is traceless");
  }
  rho *= 1.0 / tr;
  rho = hermitized(rho);
  // Restore unit trace exactly after Hermitization.
  rho *= 1.0 / trace(rho).real();

  const double residual = norm2(matvec(liouvillian.matrix, vectorize(rho)));
  if (!(residual <= tol)) {
    std::ostringstream msg;
    msg << "no steady state at tolerance " << tol << ": residual " << residual;
    throw SolverError(SolverError::Kind::no_steady_state, msg.str());
  }

  DensityMatrix state(std::move(rho));
  const HeatCurrents currents =
      heat_currents(liouvillian.hamiltonian, liouvillian.channels, state.matrix());
  return SteadyStateResult{std::move(state), residual, currents, smallest, second, sv(0)};
}

SteadyStateResult solve_steady_state(const SystemParams& params, double tol) {
  const auto channels = bath_channels(params);
  return steady_state(build_superoperator(total_hamiltonian(params), channels), tol);
}

DensityMatrix evolve(const DensityMatrix& rho0, const ComplexMatrix& hamiltonian,
                     std::span<const BathChannel> channels, const EvolveOptions& options) {
  if (!(options.t_final > 0.0) || !std::isfinite(options.t_final)) {
    throw DomainError("evolve: t_final must be positive");
  }
  if (!(options.dt_max > 0.0)) throw DomainError("evolve: dt_max must be positive");
  if (rho0.dim() != hamiltonian.dim()) {
    throw DimensionError("evolve: initial state and Hamiltonian dimensions differ");
  }

  const MasterEquation generator(hamiltonian, channels);
  const auto steps = static_cast<std::size_t>(std::ceil(options.t_final / options.dt_max));
  const double dt = options.t_final / static_cast<double>(steps);
  const std::size_t d = hamiltonian.dim();

  ComplexMatrix rho = rho0.matrix();
  ComplexMatrix k1(d), k2(d), k3(d), k4(d), stage(d);

  std::vector<std::size_t> sample_steps;
  if (options.observer && options.samples == 1) sample_steps.push_back(steps);
  if (options.observer && options.samples >= 2) {
    for (std::size_t k = 0; k < options.samples; ++k) {
      sample_steps.push_back(static_cast<std::size_t>(
          std::llround(static_cast<double>(k) * static_cast<double>(steps) /
                       static_cast<double>(options.samples - 1))));
    }
  }
  auto next_sample = sample_steps.begin();
  const auto maybe_observe = [&](std::size_t step) {
    for (; next_sample != sample_steps.end() && *next_sample == step; ++next_sample) {
      options.observer(static_cast<double>(step) * dt, rho);
    }
  };
  maybe_observe(0);

  const auto& src = rho.entries();
  for (std::size_t step = 1; step <= steps; ++step) {
    generator.derivative(rho, k1);
    for (std::size_t i = 0; i < src.size(); ++i) stage.entries()[i] = src[i] + 0.5 * dt * k1.entries()[i];
    generator.derivative(stage, k2);
    for (std::size_t i = 0; i < src.size(); ++i) stage.entries()[i] = src[i] + 0.5 * dt * k2.entries()[i];
    generator.derivative(stage, k3);
    for (std::size_t i = 0; i < src.size(); ++i) stage.entries()[i] = src[i] + dt * k3.entries()[i];
    generator.derivative(stage, k4);
    for (std::size_t i = 0; i < src.size(); ++i) {
      rho.entries()[i] += dt / 6.0 *
                          (k1.entries()[i] + 2.0 * k2.entries()[i] + 2.0 * k3.entries()[i] +
                           k4.entries()[i]);
    }

    const double time = static_cast<double>(step) * dt;
    const StepCheck check = check_step(rho);
    if (!(check.max_norm <= kEntryNormLimit)) integration_failure(time, "state entries grew beyond 1");
    if (check.hermiticity_norm > kHermiticityNormLimit) integration_failure(time, "Hermiticity lost");
    if (std::norm(check.trace - 1.0) > kTraceNormLimit) integration_failure(time, "trace drifted");
    if (step % kPositivityCheckInterval == 0 || step == steps) {
      if (hermitian_eigenvalues(rho).front() < kEvolveEigenvalueLimit) {
        integration_failure(time, "negative eigenvalue");
      }
    }
    maybe_observe(step);
  }

  return DensityMatrix(hermitized(rho), StateTolerances{.trace = 1e-9});
}

DensityMatrix evolve(const DensityMatrix& rho0, const ComplexMatrix& hamiltonian,
                     std::span<const BathChannel> channels, double t_final, double dt_max) {
  return evolve(rho0, hamiltonian, channels, EvolveOptions{.t_final = t_final, .dt_max = dt_max, .samples = 0, .observer = {}});
}

}  // namespace qtfet
