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

#include "qtfet/observables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qtfet/errors.hpp"
#include "qtfet/lindblad.hpp"

namespace qtfet {

namespace {

bool belongs_to(Bath bath, ChannelLabel label) {
  switch (bath) {
    case Bath::left:
      return label == ChannelLabel::L;
    case Bath::middle:
      return label == ChannelLabel::M1 || label == ChannelLabel::M2;
    case Bath::right:
      return label == ChannelLabel::R;
  }
  return false;
}

// Tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex t{};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) t += a(i, k) * b(k, i);
  }
  return t;
}

}  // namespace

double HeatCurrents::max_abs() const noexcept {
  return std::max({std::abs(j_l), std::abs(j_m), std::abs(j_r)});
}

std::vector<BathChannel> channels_of(Bath bath, std::span<const BathChannel> channels) {
  std::vector<BathChannel> group;
  for (const auto& ch : channels) {
    if (belongs_to(bath, ch.label)) group.push_back(ch);
  }
  return group;
}

double heat_current(const ComplexMatrix& hamiltonian, std::span<const BathChannel> group,
                    const ComplexMatrix& rho) {
  if (rho.dim() != hamiltonian.dim()) {
    throw DimensionError("heat_current: state and Hamiltonian dimensions differ");
  }
  ComplexMatrix dissipated(rho.dim());
  for (const auto& ch : group) dissipated += dissipator_apply(ch, rho);
  const Complex t = trace_of_product(hamiltonian, dissipated);
  if (std::abs(t.imag()) > kCurrentImaginaryTolerance) {
    std::ostringstream msg;
    msg << "heat_current: imaginary part " << t.imag() << " exceeds "
        << kCurrentImaginaryTolerance;
    throw ConsistencyError(msg.str());
  }
  return -t.real();
}

HeatCurrents heat_currents(const ComplexMatrix& hamiltonian, std::span<const BathChannel> channels,
                           const ComplexMatrix& rho) {
  return {heat_current(hamiltonian, channels_of(Bath::left, channels), rho),
          heat_current(hamiltonian, channels_of(Bath::middle, channels), rho),
          heat_current(hamiltonian, channels_of(Bath::right, channels), rho)};
}

ReducedPopulations reduced_populations(const DensityMatrix& rho) {
  if (rho.dim() != kSystemDim) {
    throw DimensionError("reduced_populations: expected a " + std::to_string(kSystemDim) +
                         "-dimensional state");
  }
  ReducedPopulations pops{};
  const auto fill = [&](std::size_t subsystem, std::span<double> out) {
    const ComplexMatrix reduced = partial_trace(rho.matrix(), kSubsystemDims, subsystem);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = reduced(i, i).real();
  };
  fill(0, pops.left);
  fill(1, pops.middle);
  fill(2, pops.right);
  return pops;
}

}  // namespace qtfet
