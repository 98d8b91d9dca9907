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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qtfet/errors.hpp"
#include "qtfet/lindblad.hpp"
#include "qtfet/solvers.hpp"

namespace qtfet {
namespace {

SolverError::Kind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const SolverError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected SolverError";
  return SolverError::Kind::integration_failure;
}

TEST(SteadyStateTest, UncoupledIsProductGibbs) {
  for (double t_r : {0.05, 0.5, 1.5}) {
    SystemParams p = transfer_characteristic_params(t_r);
    p.g_lm = p.g_mr = 0.0;
    const auto ss = solve_steady_state(p);
    const ComplexMatrix gibbs = oracle::from_dense(oracle::product_gibbs(p));
    EXPECT_LE(trace_distance(ss.state.matrix(), gibbs), 1e-10) << t_r;
  }
}

TEST(SteadyStateTest, OperatingPointSatisfiesContract) {
  const auto ss = solve_steady_state(transfer_characteristic_params());
  EXPECT_LE(ss.residual, kDefaultResidualTolerance);
  EXPECT_TRUE(ss.state.diagnostics().within({}));
  EXPECT_GT(ss.second_singular_value, 1e-8 * ss.largest_singular_value);
  EXPECT_LE(ss.smallest_singular_value, 1e-12);

  const auto channels = bath_channels(transfer_characteristic_params());
  const ComplexMatrix h = total_hamiltonian(transfer_characteristic_params());
  EXPECT_LE(max_abs(rhs_apply(h, channels, ss.state.matrix())), kDefaultResidualTolerance);
}

TEST(SteadyStateTest, GateMapParamsAreUnique) {
  for (double g : {0.0, 0.025, 0.3}) {
    for (double t_m : {0.1, 2.0}) {
      const auto ss = solve_steady_state(gate_coupling_map_params(g, t_m));
      EXPECT_GT(ss.second_singular_value, 1e-8 * ss.largest_singular_value);
      EXPECT_GE(ss.state.diagnostics().min_eigenvalue, -1e-10);
    }
  }
}

TEST(SteadyStateTest, UnreachableToleranceIsReported) {
  const auto p = transfer_characteristic_params();
  EXPECT_EQ(kind_of([&] { solve_steady_state(p, 1e-30); }), SolverError::Kind::no_steady_state);
  EXPECT_THROW(solve_steady_state(p, 0.0), DomainError);
}

TEST(SteadyStateTest, ClosedDynamicsAreDegenerate) {
  const ComplexMatrix h = total_hamiltonian(transfer_characteristic_params());
  const Liouvillian l = build_superoperator(h, {});
  EXPECT_EQ(kind_of([&] { steady_state(l); }), SolverError::Kind::non_unique_steady_state);
}

TEST(EvolveTest, CommutingDiagonalDynamicsAreStationary) {
  const std::vector<double> hd{0.0, 1.0, 3.0}, rd{0.5, 0.3, 0.2};
  const DensityMatrix rho0(ComplexMatrix::diagonal(rd));
  std::size_t calls = 0;
  const auto out = evolve(rho0, ComplexMatrix::diagonal(hd), {},
                          EvolveOptions{.t_final = 10.0, .dt_max = 0.1, .samples = 5,
                                        .observer = [&](double, const ComplexMatrix& rho) {
                                          ++calls;
                                          EXPECT_EQ(rho, rho0.matrix());
                                        }});
  EXPECT_EQ(calls, 5u);
  EXPECT_EQ(out.matrix(), rho0.matrix());
}

TEST(EvolveTest, TwoLevelRelaxationMatchesRateEquation) {
  // dp1/dt = -kappa (n + 1) p1 + kappa n (1 - p1), so
  // p1(t) = p_eq + (p1(0) - p_eq) exp(-kappa (2n + 1) t), p_eq = n / (2n + 1).
  const double de = 1.0, t = 0.8, kappa = 1.0;
  const std::vector<BathChannel> channels{
      {ChannelLabel::L, ComplexMatrix::outer(2, 0, 1), de, kappa, t}};
  const std::vector<double> hd{0.0, de};
  const double n = static_cast<double>(oracle::bose(de, t));
  const double rate = kappa * (2 * n + 1), p_eq = n / (2 * n + 1);

  double last = 1.0;
  const double t_final = 1e3 / kappa;
  const auto out = evolve(
      DensityMatrix(ComplexMatrix::outer(2, 1, 1)), ComplexMatrix::diagonal(hd), channels,
      EvolveOptions{.t_final = t_final, .dt_max = 0.01, .samples = 1001,
                    .observer = [&](double time, const ComplexMatrix& rho) {
                      const double p1 = rho(1, 1).real();
                      EXPECT_LE(p1, last + 1e-15);  // monotone decay from the excited state
                      last = p1;
                      EXPECT_NEAR(p1, p_eq + (1.0 - p_eq) * std::exp(-rate * time), 1e-9);
                    }});
  const double ratio = out.matrix()(1, 1).real() / out.matrix()(0, 0).real();
  EXPECT_NEAR(ratio, std::exp(-de / t), 1e-6);
}

TEST(EvolveTest, FourthOrderStepHalving) {
  const SystemParams p = transfer_characteristic_params();
  const ComplexMatrix h = total_hamiltonian(p);
  const auto channels = bath_channels(p);
  std::mt19937_64 rng(61);
  const DensityMatrix rho0(oracle::random_state(rng, 12));
  const auto run = [&](double dt) { return evolve(rho0, h, channels, 4.0, dt).matrix(); };
  const ComplexMatrix a = run(0.2), b = run(0.1), c = run(0.05);
  const double ratio = max_abs_diff(a, b) / max_abs_diff(b, c);
  EXPECT_GT(ratio, 12.0);
  EXPECT_LT(ratio, 20.0);
}

TEST(EvolveTest, KeepsStateValidFromRandomStarts) {
  const SystemParams p = transfer_characteristic_params();
  const ComplexMatrix h = total_hamiltonian(p);
  const auto channels = bath_channels(p);
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 3; ++trial) {
    const DensityMatrix rho0(oracle::random_state(rng, 12));
    const auto out = evolve(rho0, h, channels,
                            EvolveOptions{.t_final = 200.0, .dt_max = 0.01, .samples = 21,
                                          .observer = [](double, const ComplexMatrix& rho) {
                                            const auto d = diagnose(rho);
                                            EXPECT_GE(d.min_eigenvalue, -1e-10);
                                            EXPECT_LE(d.trace_error, 1e-9);
                                          }});
    EXPECT_LE(out.diagnostics().trace_error, 1e-9);
  }
}

TEST(EvolveTest, UnstableStepIsReported) {
  const SystemParams p = transfer_characteristic_params();
  const ComplexMatrix h = total_hamiltonian(p);
  const auto channels = bath_channels(p);
  // A random start populates the fast coherences; the mixed state would not.
  std::mt19937_64 rng(64);
  const DensityMatrix rho0(oracle::random_state(rng, 12));
  EXPECT_EQ(kind_of([&] { evolve(rho0, h, channels, 100.0, 3.0); }),
            SolverError::Kind::integration_failure);
}

TEST(EvolveTest, RejectsBadArguments) {
  const ComplexMatrix h = total_hamiltonian(transfer_characteristic_params());
  const auto rho = DensityMatrix::maximally_mixed(12);
  EXPECT_THROW(evolve(rho, h, {}, 0.0), DomainError);
  EXPECT_THROW(evolve(rho, h, {}, 1.0, 0.0), DomainError);
  EXPECT_THROW(evolve(DensityMatrix::maximally_mixed(4), h, {}, 1.0), DimensionError);
}

// Null-space and time-integration steady states agree on a 5x5 grid of random
// parameter sets. The RK4 fixed point is the exact steady state, so the step
// only has to be stable; 0.05 keeps this test fast.
TEST(SolverAgreementTest, RandomParameterGrid) {
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> temp(0.1, 2.0), coupling(0.0, 0.2), rate(0.02, 0.1);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      SystemParams p = transfer_characteristic_params(temp(rng));
      p.t_l = temp(rng);
      p.t_m = temp(rng);
      p.g_lm = coupling(rng);
      p.g_mr = coupling(rng);
      p.kappa_l = rate(rng);
      p.kappa_m = rate(rng);
      p.kappa_r = rate(rng);
      const auto ss = solve_steady_state(p);
      const auto channels = bath_channels(p);
      const auto rho = evolve(DensityMatrix::maximally_mixed(12), total_hamiltonian(p), channels,
                              1e4, 0.05);
      EXPECT_LE(trace_distance(rho.matrix(), ss.state.matrix()), 1e-6) << i << "," << j;
    }
  }
}

}  // namespace
}  // namespace qtfet
