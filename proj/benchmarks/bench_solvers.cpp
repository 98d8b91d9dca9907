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

#include <benchmark/benchmark.h>

#include "qtfet/lindblad.hpp"
#include "qtfet/solvers.hpp"
#include "qtfet/sweep.hpp"

namespace qtfet {
namespace {

void BM_BuildSuperoperator(benchmark::State& state) {
  const SystemParams p = transfer_characteristic_params();
  const ComplexMatrix h = total_hamiltonian(p);
  const auto channels = bath_channels(p);
  for (auto _ : state) benchmark::DoNotOptimize(build_superoperator(h, channels));
}
BENCHMARK(BM_BuildSuperoperator)->Unit(benchmark::kMicrosecond);

void BM_SteadyState(benchmark::State& state) {
  const SystemParams p = transfer_characteristic_params();
  for (auto _ : state) benchmark::DoNotOptimize(solve_steady_state(p));
}
BENCHMARK(BM_SteadyState)->Unit(benchmark::kMillisecond);

void BM_RhsApply(benchmark::State& state) {
  const SystemParams p = transfer_characteristic_params();
  const ComplexMatrix h = total_hamiltonian(p);
  const auto channels = bath_channels(p);
  const ComplexMatrix rho = DensityMatrix::maximally_mixed(kSystemDim).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(rhs_apply(h, channels, rho));
}
BENCHMARK(BM_RhsApply)->Unit(benchmark::kMicrosecond);

void BM_MasterEquationDerivative(benchmark::State& state) {
  const SystemParams p = transfer_characteristic_params();
  const MasterEquation eq(total_hamiltonian(p), bath_channels(p));
  const ComplexMatrix rho = DensityMatrix::maximally_mixed(kSystemDim).matrix();
  ComplexMatrix out(kSystemDim);
  for (auto _ : state) {
    eq.derivative(rho, out);
    benchmark::DoNotOptimize(out.entries().data());
  }
}
BENCHMARK(BM_MasterEquationDerivative)->Unit(benchmark::kMicrosecond);

void BM_EvolveUnitTime(benchmark::State& state) {
  const SystemParams p = transfer_characteristic_params();
  const ComplexMatrix h = total_hamiltonian(p);
  const auto channels = bath_channels(p);
  const auto rho0 = DensityMatrix::maximally_mixed(kSystemDim);
  for (auto _ : state) benchmark::DoNotOptimize(evolve(rho0, h, channels, 1.0));
}
BENCHMARK(BM_EvolveUnitTime)->Unit(benchmark::kMicrosecond);

void BM_Sweep(benchmark::State& state) {
  SweepSpec spec{.base = transfer_characteristic_params(),
                 .axis1 = Axis{Parameter::t_r, 0.01, 1.5, static_cast<std::size_t>(state.range(0))},
                 .axis2 = {}, .output_path = {}, .plot_path = {}, .derived = {}, .plot = {}};
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qtfet

BENCHMARK_MAIN();
