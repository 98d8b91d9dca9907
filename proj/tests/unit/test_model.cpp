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

#include <Eigen/Dense>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qtfet/errors.hpp"
#include "qtfet/model.hpp"

namespace qtfet {
namespace {

SystemParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.1, 2.0);
  SystemParams p{.e1 = u(rng), .e2 = u(rng), .e3 = 0.0, .e4 = u(rng),
                 .g_lm = 0.1 * u(rng), .g_mr = 0.1 * u(rng),
                 .kappa_l = 0.05 * u(rng), .kappa_m = 0.05 * u(rng), .kappa_r = 0.05 * u(rng),
                 .t_l = u(rng), .t_m = u(rng), .t_r = u(rng)};
  p.e3 = p.e2 + u(rng);
  return p;
}

TEST(SystemParamsTest, ReferenceParamsAreValid) {
  EXPECT_NO_THROW(validate(transfer_characteristic_params()));
  EXPECT_NO_THROW(validate(gate_coupling_map_params(0.0, 0.5)));
}

TEST(SystemParamsTest, InvariantViolationsThrow) {
  const SystemParams base = transfer_characteristic_params();
  const auto rejects = [&](auto mutate) {
    SystemParams p = base;
    mutate(p);
    EXPECT_THROW(validate(p), DomainError);
  };
  rejects([](SystemParams& p) { p.e1 = 0.0; });
  rejects([](SystemParams& p) { p.e2 = -1.0; });
  rejects([](SystemParams& p) { p.e3 = p.e2; });
  rejects([](SystemParams& p) { p.e4 = 0.0; });
  rejects([](SystemParams& p) { p.g_lm = -0.1; });
  rejects([](SystemParams& p) { p.g_mr = -1e-9; });
  rejects([](SystemParams& p) { p.kappa_l = 0.0; });
  rejects([](SystemParams& p) { p.kappa_m = 0.0; });
  rejects([](SystemParams& p) { p.kappa_r = -1.0; });
  rejects([](SystemParams& p) { p.t_l = 0.0; });
  rejects([](SystemParams& p) { p.t_m = -0.5; });
  rejects([](SystemParams& p) { p.t_r = 0.0; });
  rejects([](SystemParams& p) { p.t_r = std::nan(""); });
}

TEST(LocalHamiltoniansTest, TransferCurveEnergies) {
  const auto h = local_hamiltonians(transfer_characteristic_params());
  const std::vector<double> l{0, 1}, m{0, 1, 3}, r{0, 1};
  EXPECT_EQ(h.left, ComplexMatrix::diagonal(l));
  EXPECT_EQ(h.middle, ComplexMatrix::diagonal(m));
  EXPECT_EQ(h.right, ComplexMatrix::diagonal(r));
}

TEST(LocalHamiltoniansTest, RealDiagonalWithZeroGround) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const SystemParams p = random_params(rng);
    const auto h = local_hamiltonians(p);
    for (const ComplexMatrix* m : {&h.left, &h.middle, &h.right}) {
      EXPECT_EQ((*m)(0, 0), Complex(0.0));
      for (std::size_t r = 0; r < m->dim(); ++r) {
        EXPECT_EQ((*m)(r, r).imag(), 0.0);
        for (std::size_t c = 0; c < m->dim(); ++c) {
          if (r != c) EXPECT_EQ((*m)(r, c), Complex(0.0));
        }
      }
    }
    EXPECT_DOUBLE_EQ(trace(h.middle).real(), p.e2 + p.e3);
  }
}

TEST(FreeHamiltonianTest, EnumeratedDiagonal) {
  // E_i + E_j + E_k for |i,j,k>, right index fastest, at e = (1, 1, 3, 1).
  const std::array<double, 12> expect{0, 1, 1, 2, 3, 4, 1, 2, 2, 3, 4, 5};
  const ComplexMatrix h0 = free_hamiltonian(transfer_characteristic_params());
  ASSERT_EQ(h0.dim(), kSystemDim);
  for (std::size_t i = 0; i < kSystemDim; ++i) {
    EXPECT_EQ(h0(i, i), Complex(expect[i])) << i;
    for (std::size_t j = 0; j < kSystemDim; ++j) {
      if (i != j) EXPECT_EQ(h0(i, j), Complex(0.0));
    }
  }
}

TEST(FreeHamiltonianTest, BasisStateEnergies) {
  std::mt19937_64 rng(22);
  const SystemParams p = random_params(rng);
  const std::array<double, 2> el{0, p.e1}, er{0, p.e4};
  const std::array<double, 3> em{0, p.e2, p.e3};
  const ComplexMatrix h0 = free_hamiltonian(p);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        const std::size_t n = basis_index(i, j, k);
        EXPECT_NEAR(h0(n, n).real(), el[i] + em[j] + er[k], 1e-15);
      }
}

TEST(FreeHamiltonianTest, ZeroEnergiesGiveZero) {
  SystemParams p;  // validation is not part of the free term
  EXPECT_EQ(max_abs(free_hamiltonian(p)), 0.0);
}

TEST(FreeHamiltonianTest, TraceMultiplicities) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const SystemParams p = random_params(rng);
    EXPECT_NEAR(trace(free_hamiltonian(p)).real(), 6 * p.e1 + 4 * p.e2 + 4 * p.e3 + 6 * p.e4,
                1e-12);
  }
}

TEST(TransitionOpsTest, OuterProductAlgebra) {
  const auto ops = transition_ops();
  EXPECT_EQ(ops.sigma_minus * ops.sigma_plus, ComplexMatrix::outer(2, 0, 0));
  EXPECT_EQ(ops.sigma_plus * ops.sigma_minus, ComplexMatrix::outer(2, 1, 1));
  EXPECT_EQ(ops.o01_dagger * ops.o01, ComplexMatrix::outer(3, 1, 1));
  EXPECT_EQ(ops.o01 * ops.o12, ComplexMatrix::outer(3, 0, 2));
  EXPECT_EQ(ops.o01, ComplexMatrix::outer(3, 0, 1));
  EXPECT_EQ(ops.o12, ComplexMatrix::outer(3, 1, 2));
  EXPECT_EQ(dagger(ops.o12), ops.o12_dagger);
}

// Sorted (row, col) pairs of nonzero entries.
std::set<std::pair<std::size_t, std::size_t>> support(const ComplexMatrix& m) {
  std::set<std::pair<std::size_t, std::size_t>> s;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (m(r, c) != Complex(0.0)) s.insert({r, c});
  return s;
}

TEST(InteractionTest, LeftMiddleIndexPairs) {
  SystemParams p = transfer_characteristic_params();
  p.g_lm = 0.37;
  const ComplexMatrix h = interaction_lm(p);
  std::set<std::pair<std::size_t, std::size_t>> expect;
  for (std::size_t k = 0; k < 2; ++k) {
    expect.insert({basis_index(1, 0, k), basis_index(0, 1, k)});
    expect.insert({basis_index(0, 1, k), basis_index(1, 0, k)});
  }
  EXPECT_EQ(support(h), expect);
  for (const auto& [r, c] : expect) EXPECT_EQ(h(r, c), Complex(0.37));
  EXPECT_LE(hermiticity_error(h), 1e-14);
}

TEST(InteractionTest, MiddleRightIndexPairs) {
  SystemParams p = transfer_characteristic_params();
  p.g_mr = 0.21;
  const ComplexMatrix h = interaction_mr(p);
  std::set<std::pair<std::size_t, std::size_t>> expect;
  for (std::size_t i = 0; i < 2; ++i) {
    expect.insert({basis_index(i, 0, 1), basis_index(i, 1, 0)});
    expect.insert({basis_index(i, 1, 0), basis_index(i, 0, 1)});
  }
  EXPECT_EQ(support(h), expect);
  for (const auto& [r, c] : expect) EXPECT_EQ(h(r, c), Complex(0.21));
  EXPECT_LE(hermiticity_error(h), 1e-14);
}

TEST(InteractionTest, ZeroCouplingsVanish) {
  SystemParams p = transfer_characteristic_params();
  p.g_lm = p.g_mr = 0.0;
  EXPECT_EQ(max_abs(interaction_lm(p)), 0.0);
  EXPECT_EQ(max_abs(interaction_mr(p)), 0.0);
  EXPECT_EQ(total_hamiltonian(p), free_hamiltonian(p));
}

TEST(InteractionTest, ResonantExchangeCommutesWithFreeTerm) {
  const SystemParams p = transfer_characteristic_params();  // e1 == e2
  EXPECT_LE(max_abs(commutator(free_hamiltonian(p), interaction_lm(p))), 1e-12);
}

TEST(TotalHamiltonianTest, HermitianWithRealSpectrum) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const SystemParams p = random_params(rng);
    const ComplexMatrix h = total_hamiltonian(p);
    EXPECT_LE(hermiticity_error(h), 1e-14);
    EXPECT_NEAR(trace(h).real(), trace(free_hamiltonian(p)).real(), 1e-12);
  }
  const ComplexMatrix h = total_hamiltonian(transfer_characteristic_params());
  Eigen::MatrixXcd m(12, 12);
  for (std::size_t r = 0; r < 12; ++r)
    for (std::size_t c = 0; c < 12; ++c) m(r, c) = h(r, c);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
  for (const auto& ev : es.eigenvalues()) EXPECT_LE(std::abs(ev.imag()), 1e-12);
}

TEST(BathChannelsTest, TransferCurveChannelAssignments) {
  const SystemParams p = transfer_characteristic_params();
  const auto ch = bath_channels(p);
  ASSERT_EQ(ch.size(), 4u);
  const std::array<ChannelLabel, 4> labels{ChannelLabel::L, ChannelLabel::M1, ChannelLabel::M2,
                                           ChannelLabel::R};
  const std::array<double, 4> de{1, 1, 2, 1};
  const std::array<double, 4> kappa{0.05, 0.02, 0.02, 0.05};
  const std::array<double, 4> temp{2.0, 0.1, 0.1, 1.0};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(ch[i].label, labels[i]);
    EXPECT_EQ(ch[i].delta_e, de[i]);
    EXPECT_EQ(ch[i].kappa, kappa[i]);
    EXPECT_EQ(ch[i].temperature, temp[i]);
  }
  EXPECT_EQ(to_string(ChannelLabel::M2), "M2");
}

TEST(BathChannelsTest, JumpsAreNilpotentLoweringOperators) {
  const auto ch = bath_channels(transfer_characteristic_params());
  // sigma_minus (x) I3 (x) I2 has 2 * 3 = 6 ones; I2 (x) O (x) I2 has 2 * 2 = 4.
  const std::array<std::size_t, 4> nonzeros{6, 4, 4, 6};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(max_abs(ch[i].jump * ch[i].jump), 0.0);
    const auto s = support(ch[i].jump);
    EXPECT_EQ(s.size(), nonzeros[i]);
    for (const auto& [r, c] : s) EXPECT_EQ(ch[i].jump(r, c), Complex(1.0));
  }
}

TEST(BathChannelsTest, JumpsMatchKroneckerDefinition) {
  const auto ops = transition_ops();
  const auto i2 = oracle::to_dense(ComplexMatrix::identity(2));
  const auto i3 = oracle::to_dense(ComplexMatrix::identity(3));
  const auto sm = oracle::to_dense(ops.sigma_minus);
  const std::array expect{
      oracle::kron(oracle::kron(sm, i3), i2),
      oracle::kron(oracle::kron(i2, oracle::to_dense(ops.o01)), i2),
      oracle::kron(oracle::kron(i2, oracle::to_dense(ops.o12)), i2),
      oracle::kron(oracle::kron(i2, i3), sm)};
  const auto ch = bath_channels(transfer_characteristic_params());
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(oracle::max_diff(oracle::to_dense(ch[i].jump), expect[i]), 0.0);
  }
}

TEST(BathChannelsTest, InvalidParamsThrow) {
  SystemParams p = transfer_characteristic_params();
  p.kappa_m = 0.0;
  EXPECT_THROW(bath_channels(p), DomainError);
}

}  // namespace
}  // namespace qtfet
