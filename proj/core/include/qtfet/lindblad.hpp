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

#include <span>
#include <vector>

#include "qtfet/model.hpp"
#include "qtfet/operator_algebra.hpp"

namespace qtfet {

/// Exponent delta_e / temperature above which the Bose factor is returned as 0.
inline constexpr double kOccupationCutoff = 700.0;

/// Bose-Einstein occupation 1 / (exp(delta_e / temperature) - 1).
/// Throws DomainError unless both arguments are positive and finite.
double occupation(double delta_e, double temperature);

/// L[P] rho = P rho P^dagger - 1/2 {P^dagger P, rho}
ComplexMatrix lindblad_term(const ComplexMatrix& jump, const ComplexMatrix& rho);

/// kappa (n L[P^dagger] rho + (n + 1) L[P] rho) with n the channel occupation.
ComplexMatrix dissipator_apply(const BathChannel& channel, const ComplexMatrix& rho);

/// -i [H, rho] + sum of dissipators over `channels`.
ComplexMatrix rhs_apply(const ComplexMatrix& hamiltonian, std::span<const BathChannel> channels,
                        const ComplexMatrix& rho);

/// Matrix form of the generator acting on column-stacked density matrices.
struct Liouvillian {
  ComplexMatrix matrix;
  std::vector<BathChannel> channels;
  ComplexMatrix hamiltonian;
};

/// Assembles the superoperator with vec(A rho B) = (B^T (x) A) vec(rho).
Liouvillian build_superoperator(const ComplexMatrix& hamiltonian,
                                std::span<const BathChannel> channels);

/// Precomputed jump form of the generator for repeated application:
///   d rho / dt = -i (K rho - rho K^dagger) + sum_k g_k A_k rho A_k^dagger
/// with K = H - i/2 sum_k g_k A_k^dagger A_k. Only nonzero operator entries
/// are kept, so one application costs a few hundred complex products at the
/// model's dimension.
class MasterEquation {
 public:
  MasterEquation(const ComplexMatrix& hamiltonian, std::span<const BathChannel> channels);

  std::size_t dim() const noexcept { return dim_; }

  /// out = d rho / dt. `out` must have the generator's dimension.
  void derivative(const ComplexMatrix& rho, ComplexMatrix& out) const;
  ComplexMatrix derivative(const ComplexMatrix& rho) const;

 private:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Complex value;
  };
  struct JumpTerm {
    double rate;
    std::vector<Entry> entries;
  };

  std::size_t dim_;
  std::vector<Entry> effective_hamiltonian_;
  std::vector<JumpTerm> jumps_;
};

}  // namespace qtfet
