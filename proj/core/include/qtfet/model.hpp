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
#include <cstddef>
#include <string_view>
#include <vector>

#include "qtfet/operator_algebra.hpp"

namespace qtfet {

// Subsystem dimensions of the left qubit, middle qutrit and right qubit.
inline constexpr std::size_t kLeftDim = 2;
inline constexpr std::size_t kMiddleDim = 3;
inline constexpr std::size_t kRightDim = 2;
inline constexpr std::size_t kSystemDim = kLeftDim * kMiddleDim * kRightDim;
inline constexpr std::array<std::size_t, 3> kSubsystemDims{kLeftDim, kMiddleDim, kRightDim};

/// Index of the product basis state |left, middle, right>; right varies fastest.
constexpr std::size_t basis_index(std::size_t left, std::size_t middle, std::size_t right) {
  return (left * kMiddleDim + middle) * kRightDim + right;
}

/// All model constants in units of w0 (hbar = k_B = 1).
///
/// Level layout: left qubit {0, e1}, middle qutrit {0, e2, e3}, right qubit
/// {0, e4}. Couplings g_lm and g_mr are the nearest-neighbour exchange
/// strengths; kappa_* are the bath dissipation rates and t_* the bath
/// temperatures.
struct SystemParams {
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double e4 = 0.0;
  double g_lm = 0.0;
  double g_mr = 0.0;
  double kappa_l = 0.0;
  double kappa_m = 0.0;
  double kappa_r = 0.0;
  double t_l = 0.0;
  double t_m = 0.0;
  double t_r = 0.0;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Throws DomainError naming the first violated constraint.
void validate(const SystemParams& p);

/// Resonant qubit-qutrit-qubit chain: E1 = E2 = E4 = 1, E3 = 3, couplings
/// 0.1, kappa_l = kappa_r = 0.05, kappa_m = 0.02, t_l = 2, t_m = 0.1. The
/// right temperature is the free bias and defaults to 1.
SystemParams transfer_characteristic_params(double t_r = 1.0);

/// Same chain with weaker left coupling and a slow middle bath
/// (g_lm = 0.05, kappa_m = 0.002, t_l = 1, t_r = 0.1).
SystemParams gate_coupling_map_params(double g_mr, double t_m);

struct LocalHamiltonians {
  ComplexMatrix left;
  ComplexMatrix middle;
  ComplexMatrix right;
};

LocalHamiltonians local_hamiltonians(const SystemParams& p);

/// Sum of the lifted local Hamiltonians; diagonal in the product basis.
ComplexMatrix free_hamiltonian(const SystemParams& p);

struct TransitionOperators {
  ComplexMatrix sigma_minus;  // |0><1| on a qubit
  ComplexMatrix sigma_plus;   // |1><0| on a qubit
  ComplexMatrix o01;          // |0><1| on the qutrit
  ComplexMatrix o12;          // |1><2| on the qutrit
  ComplexMatrix o01_dagger;
  ComplexMatrix o12_dagger;
};

TransitionOperators transition_ops();

/// g_lm (sigma+ (x) O01 (x) I + sigma- (x) O01^dagger (x) I)
ComplexMatrix interaction_lm(const SystemParams& p);
/// g_mr (I (x) O01 (x) sigma+ + I (x) O01^dagger (x) sigma-)
ComplexMatrix interaction_mr(const SystemParams& p);

ComplexMatrix total_hamiltonian(const SystemParams& p);

enum class ChannelLabel { L, M1, M2, R };

std::string_view to_string(ChannelLabel label);

/// One dissipation channel with its lifted lowering operator.
struct BathChannel {
  ChannelLabel label;
  ComplexMatrix jump;
  double delta_e;
  double kappa;
  double temperature;
};

/// Channels L, M1, M2, R in that order. M1 drives qutrit 0<->1 with
/// delta_e = e2, M2 drives 1<->2 with delta_e = e3 - e2; both share the middle
/// bath's rate and temperature. Throws DomainError on invalid params.
std::vector<BathChannel> bath_channels(const SystemParams& p);

}  // namespace qtfet
