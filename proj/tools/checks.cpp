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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "qtfet/errors.hpp"
#include "qtfet/lindblad.hpp"
#include "qtfet/solvers.hpp"

namespace qtfet::cli {

namespace {

// Fixed so the suite is reproducible; --seed does not feed it.
constexpr std::uint64_t kCheckSeed = 20260101;
constexpr int kConsistencySamples = 10;
constexpr double kAgreementTime = 1e4;

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = normal(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = Complex{normal(rng), normal(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

// diag(exp(-E_k / T)) / Z for each subsystem, combined by Kronecker product.
ComplexMatrix product_gibbs(const SystemParams& p) {
  const auto gibbs = [](std::vector<double> energies, double t) {
    double z = 0.0;
    for (auto& e : energies) z += (e = std::exp(-e / t));
    for (auto& e : energies) e /= z;
    return ComplexMatrix::diagonal(energies);
  };
  return kron(gibbs({0.0, p.e1}, p.t_l), gibbs({0.0, p.e2, p.e3}, p.t_m),
              gibbs({0.0, p.e4}, p.t_r));
}

}  // namespace

std::vector<CheckResult> run_checks(const SystemParams& params, double tol) {
  std::vector<CheckResult> results;
  const auto record = [&](std::string name, bool ok, std::string detail) {
    results.push_back({std::move(name), ok, std::move(detail)});
  };

  validate(params);
  const ComplexMatrix h = total_hamiltonian(params);
  const auto channels = bath_channels(params);
  const Liouvillian liouvillian = build_superoperator(h, channels);

  std::optional<SteadyStateResult> ss;
  try {
    ss = steady_state(liouvillian, tol);
    record("steady state residual", true, "residual " + sci(ss->residual) + " <= " + sci(tol));
  } catch (const Error& e) {
    record("steady state residual", false, e.what());
    return results;
  }

  const auto& diag = ss->state.diagnostics();
  record("state validity", diag.within(StateTolerances{}),
         "hermiticity " + sci(diag.hermiticity_error) + ", trace error " + sci(diag.trace_error) +
             ", min eigenvalue " + sci(diag.min_eigenvalue));

  const double scale = std::max(1.0, ss->currents.max_abs());
  record("energy conservation", std::abs(ss->currents.sum()) <= 1e-10 * scale,
         "|J_L + J_M + J_R| = " + sci(std::abs(ss->currents.sum())));

  const double gap_ratio = ss->second_singular_value / ss->largest_singular_value;
  record("unique steady state", gap_ratio > 1e-8,
         "second/largest singular value " + sci(gap_ratio));

  std::mt19937_64 rng(kCheckSeed);
  double worst = 0.0;
  for (int k = 0; k < kConsistencySamples; ++k) {
    const ComplexMatrix rho = random_hermitian(rng, h.dim());
    const ComplexMatrix via_matrix = unvectorize(matvec(liouvillian.matrix, vectorize(rho)));
    worst = std::max(worst, max_abs_diff(via_matrix, rhs_apply(h, channels, rho)));
  }
  record("superoperator consistency", worst <= 1e-12, "max deviation " + sci(worst));

  const auto vec_id = vectorize(ComplexMatrix::identity(h.dim()));
  double trace_row = 0.0;
  for (std::size_t c = 0; c < liouvillian.matrix.dim(); ++c) {
    Complex s{};
    for (std::size_t r = 0; r < liouvillian.matrix.dim(); ++r) {
      s += std::conj(vec_id[r]) * liouvillian.matrix(r, c);
    }
    trace_row = std::max(trace_row, std::abs(s));
  }
  record("trace preservation", trace_row <= 1e-12, "max |vec(I)^T L| = " + sci(trace_row));

  try {
    const DensityMatrix evolved =
        evolve(DensityMatrix::maximally_mixed(h.dim()), h, channels, kAgreementTime);
    const double d = trace_distance(evolved.matrix(), ss->state.matrix());
    record("solver agreement", d <= 1e-6, "trace distance " + sci(d) + " at t = 1e4");
  } catch (const Error& e) {
    record("solver agreement", false, e.what());
  }

  SystemParams uncoupled = params;
  uncoupled.g_lm = 0.0;
  uncoupled.g_mr = 0.0;
  try {
    const auto free_ss = solve_steady_state(uncoupled, tol);
    const double d = trace_distance(free_ss.state.matrix(), product_gibbs(uncoupled));
    const double j = free_ss.currents.max_abs();
    record("uncoupled thermalization", d <= 1e-10 && j <= 1e-12,
           "trace distance " + sci(d) + ", max |J| " + sci(j));
  } catch (const Error& e) {
    record("uncoupled thermalization", false, e.what());
  }
  return results;
}

}  // namespace qtfet::cli
