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

#include "qtfet/model.hpp"

#include <cmath>
#include <string>

#include "qtfet/errors.hpp"

namespace qtfet {

namespace {

void require(bool ok, const char* what, double value) {
  if (!ok) throw DomainError(std::string("invalid parameters: ") + what + " (got " +
                             std::to_string(value) + ")");
}

const ComplexMatrix& id2() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}

const ComplexMatrix& id3() {
  static const ComplexMatrix m = ComplexMatrix::identity(3);
  return m;
}

}  // namespace

void validate(const SystemParams& p) {
  const auto finite = [](double v) { return std::isfinite(v); };
  require(finite(p.e1) && p.e1 > 0.0, "e1 must be > 0", p.e1);
  require(finite(p.e2) && p.e2 > 0.0, "e2 must be > 0", p.e2);
  require(finite(p.e3) && p.e3 > p.e2, "e3 must exceed e2", p.e3);
  require(finite(p.e4) && p.e4 > 0.0, "e4 must be > 0", p.e4);
  require(finite(p.g_lm) && p.g_lm >= 0.0, "g_lm must be >= 0", p.g_lm);
  require(finite(p.g_mr) && p.g_mr >= 0.0, "g_mr must be >= 0", p.g_mr);
  require(finite(p.kappa_l) && p.kappa_l > 0.0, "kappa_l must be > 0", p.kappa_l);
  require(finite(p.kappa_m) && p.kappa_m > 0.0, "kappa_m must be > 0", p.kappa_m);
  require(finite(p.kappa_r) && p.kappa_r > 0.0, "kappa_r must be > 0", p.kappa_r);
  require(finite(p.t_l) && p.t_l > 0.0, "t_l must be > 0", p.t_l);
  require(finite(p.t_m) && p.t_m > 0.0, "t_m must be > 0", p.t_m);
  require(finite(p.t_r) && p.t_r > 0.0, "t_r must be > 0", p.t_r);
}

SystemParams transfer_characteristic_params(double t_r) {
  return SystemParams{.e1 = 1.0,
                      .e2 = 1.0,
                      .e3 = 3.0,
                      .e4 = 1.0,
                      .g_lm = 0.1,
                      .g_mr = 0.1,
                      .kappa_l = 0.05,
                      .kappa_m = 0.02,
                      .kappa_r = 0.05,
                      .t_l = 2.0,
                      .t_m = 0.1,
                      .t_r = t_r};
}

SystemParams gate_coupling_map_params(double g_mr, double t_m) {
  return SystemParams{.e1 = 1.0,
                      .e2 = 1.0,
                      .e3 = 3.0,
                      .e4 = 1.0,
                      .g_lm = 0.05,
                      .g_mr = g_mr,
                      .kappa_l = 0.05,
                      .kappa_m = 0.002,
                      .kappa_r = 0.05,
                      .t_l = 1.0,
                      .t_m = t_m,
                      .t_r = 0.1};
}

LocalHamiltonians local_hamiltonians(const SystemParams& p) {
  const std::array<double, 2> left{0.0, p.e1};
  const std::array<double, 3> middle{0.0, p.e2, p.e3};
  const std::array<double, 2> right{0.0, p.e4};
  return {ComplexMatrix::diagonal(left), ComplexMatrix::diagonal(middle),
          ComplexMatrix::diagonal(right)};
}

ComplexMatrix free_hamiltonian(const SystemParams& p) {
  const auto h = local_hamiltonians(p);
  return kron(h.left, id3(), id2()) + kron(id2(), h.middle, id2()) + kron(id2(), id3(), h.right);
}

TransitionOperators transition_ops() {
  TransitionOperators ops{
      .sigma_minus = ComplexMatrix::outer(2, 0, 1),
      .sigma_plus = ComplexMatrix::outer(2, 1, 0),
      .o01 = ComplexMatrix::outer(3, 0, 1),
      .o12 = ComplexMatrix::outer(3, 1, 2),
      .o01_dagger = ComplexMatrix(1),
      .o12_dagger = ComplexMatrix(1),
  };
  ops.o01_dagger = dagger(ops.o01);
  ops.o12_dagger = dagger(ops.o12);
  return ops;
}

ComplexMatrix interaction_lm(const SystemParams& p) {
  const auto ops = transition_ops();
  return Complex{p.g_lm} * (kron(ops.sigma_plus, ops.o01, id2()) +
                            kron(ops.sigma_minus, ops.o01_dagger, id2()));
}

ComplexMatrix interaction_mr(const SystemParams& p) {
  const auto ops = transition_ops();
  return Complex{p.g_mr} * (kron(id2(), ops.o01, ops.sigma_plus) +
                            kron(id2(), ops.o01_dagger, ops.sigma_minus));
}

ComplexMatrix total_hamiltonian(const SystemParams& p) {
  return free_hamiltonian(p) + interaction_lm(p) + interaction_mr(p);
}

std::string_view to_string(ChannelLabel label) {
  switch (label) {
    case ChannelLabel::L:
      return "L";
    case ChannelLabel::M1:
      return "M1";
    case ChannelLabel::M2:
      return "M2";
    case ChannelLabel::R:
      return "R";
  }
  return "?";
}

std::vector<BathChannel> bath_channels(const SystemParams& p) {
  validate(p);
  const auto ops = transition_ops();
  std::vector<BathChannel> channels;
  channels.reserve(4);
  channels.push_back({ChannelLabel::L, kron(ops.sigma_minus, id3(), id2()), p.e1, p.kappa_l, p.t_l});
  channels.push_back({ChannelLabel::M1, kron(id2(), ops.o01, id2()), p.e2, p.kappa_m, p.t_m});
  channels.push_back(
      {ChannelLabel::M2, kron(id2(), ops.o12, id2()), p.e3 - p.e2, p.kappa_m, p.t_m});
  channels.push_back({ChannelLabel::R, kron(id2(), id3(), ops.sigma_minus), p.e4, p.kappa_r, p.t_r});
  return channels;
}

}  // namespace qtfet
