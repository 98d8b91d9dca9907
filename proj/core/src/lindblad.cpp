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

#include "qtfet/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtfet/errors.hpp"

namespace qtfet {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_dim(const ComplexMatrix& m, std::size_t dim, const char* what) {
  if (m.dim() != dim) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(dim) +
                         ", got " + std::to_string(m.dim()));
  }
}

// Emission and absorption rates of a channel: kappa (n + 1) on P, kappa n on P^dagger.
struct ChannelRates {
  double emission;
  double absorption;
};

ChannelRates rates_of(const BathChannel& ch) {
  const double n = occupation(ch.delta_e, ch.temperature);
  return {ch.kappa * (n + 1.0), ch.kappa * n};
}

}  // namespace

double occupation(double delta_e, double temperature) {
  if (!(std::isfinite(delta_e) && delta_e > 0.0)) {
    throw DomainError("occupation: transition energy must be positive (got " +
                      std::to_string(delta_e) + ")");
  }
  if (!(std::isfinite(temperature) && temperature > 0.0)) {
    throw DomainError("occupation: temperature must be positive (got " +
                      std::to_string(temperature) + ")");
  }
  const double x = delta_e / temperature;
  if (x > kOccupationCutoff) return 0.0;
  return 1.0 / std::expm1(x);
}

ComplexMatrix lindblad_term(const ComplexMatrix& jump, const ComplexMatrix& rho) {
  require_dim(rho, jump.dim(), "lindblad_term");
  const ComplexMatrix jump_dag = dagger(jump);
  ComplexMatrix out = jump * rho * jump_dag;
  out.add_scaled(anticommutator(jump_dag * jump, rho), -0.5);
  return out;
}

ComplexMatrix dissipator_apply(const BathChannel& channel, const ComplexMatrix& rho) {
  require_dim(rho, channel.jump.dim(), "dissipator_apply");
  const auto rates = rates_of(channel);
  ComplexMatrix out = lindblad_term(channel.jump, rho);
  out *= rates.emission;
  if (rates.absorption != 0.0) {
    out.add_scaled(lindblad_term(dagger(channel.jump), rho), rates.absorption);
  }
  return out;
}

ComplexMatrix rhs_apply(const ComplexMatrix& hamiltonian, std::span<const BathChannel> channels,
                        const ComplexMatrix& rho) {
  require_dim(rho, hamiltonian.dim(), "rhs_apply");
  ComplexMatrix out = commutator(hamiltonian, rho);
  out *= -kI;
  for (const auto& ch : channels) out += dissipator_apply(ch, rho);
  return out;
}

Liouvillian build_superoperator(const ComplexMatrix& hamiltonian,
                                std::span<const BathChannel> channels) {
  const std::size_t d = hamiltonian.dim();
  for (const auto& ch : channels) require_dim(ch.jump, d, "build_superoperator");

  const ComplexMatrix id = ComplexMatrix::identity(d);
  ComplexMatrix l = kron(id, hamiltonian) * (-kI);
  l.add_scaled(kron(transpose(hamiltonian), id), kI);

  const auto add_jump = [&](const ComplexMatrix& a, double rate) {
    if (rate == 0.0) return;
    const ComplexMatrix ada = dagger(a) * a;
    l.add_scaled(kron(conjugate(a), a), rate);
    l.add_scaled(kron(id, ada), -0.5 * rate);
    l.add_scaled(kron(transpose(ada), id), -0.5 * rate);
  };
  for (const auto& ch : channels) {
    const auto rates = rates_of(ch);
    add_jump(ch.jump, rates.emission);
    add_jump(dagger(ch.jump), rates.absorption);
  }
  return Liouvillian{std::move(l), {channels.begin(), channels.end()}, hamiltonian};
}

MasterEquation::MasterEquation(const ComplexMatrix& hamiltonian,
                               std::span<const BathChannel> channels)
    : dim_(hamiltonian.dim()) {
  ComplexMatrix effective = hamiltonian;
  const auto add_jump = [&](const ComplexMatrix& a, double rate) {
    if (rate == 0.0) return;
    effective.add_scaled(dagger(a) * a, -0.5 * kI * rate);
    JumpTerm term{rate, {}};
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        if (a(i, j) != Complex{}) term.entries.push_back({i, j, a(i, j)});
      }
    }
    jumps_.push_back(std::move(term));
  };
  for (const auto& ch : channels) {
    require_dim(ch.jump, dim_, "MasterEquation");
    const auto rates = rates_of(ch);
    add_jump(ch.jump, rates.emission);
    add_jump(dagger(ch.jump), rates.absorption);
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (effective(i, j) != Complex{}) effective_hamiltonian_.push_back({i, j, effective(i, j)});
    }
  }
}

void MasterEquation::derivative(const ComplexMatrix& rho, ComplexMatrix& out) const {
  require_dim(rho, dim_, "MasterEquation::derivative");
  require_dim(out, dim_, "MasterEquation::derivative");
  const std::size_t d = dim_;
  const Complex* r = rho.entries().data();
  Complex* o = out.entries().data();
  std::fill_n(o, d * d, Complex{});

  // -i K rho + i rho K^dagger
  for (const auto& k : effective_hamiltonian_) {
    const Complex left = -kI * k.value;
    const Complex right = kI * std::conj(k.value);
    const Complex* src_row = r + k.col * d;
    Complex* dst_row = o + k.row * d;
    for (std::size_t j = 0; j < d; ++j) dst_row[j] += left * src_row[j];
    for (std::size_t i = 0; i < d; ++i) o[i * d + k.row] += r[i * d + k.col] * right;
  }
  for (const auto& term : jumps_) {
    for (const auto& a : term.entries) {
      const Complex scaled = term.rate * a.value;
      for (const auto& b : term.entries) {
        o[a.row * d + b.row] += scaled * std::conj(b.value) * r[a.col * d + b.col];
      }
    }
  }
}

ComplexMatrix MasterEquation::derivative(const ComplexMatrix& rho) const {
  ComplexMatrix out(dim_);
  derivative(rho, out);
  return out;
}

}  // namespace qtfet
