// Copyright 2026 The spinwit Authors
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

#include <array>

#include <benchmark/benchmark.h>

#include "spinwit/measures.hpp"
#include "spinwit/oracle_opt.hpp"
#include "spinwit/spin_models.hpp"
#include "spinwit/thermal.hpp"
#include "spinwit/witness.hpp"

namespace {

using namespace spinwit;

void BM_BuildHamiltonian(benchmark::State& state) {
  const auto model = ChainModel::heisenberg(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(model));
}
BENCHMARK(BM_BuildHamiltonian)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_EighValues(benchmark::State& state) {
  const auto h = build_hamiltonian(ChainModel::heisenberg(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(eigh(h, Spectrum::values_only));
}
BENCHMARK(BM_EighValues)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_EighVectors(benchmark::State& state) {
  const auto h = build_hamiltonian(ChainModel::heisenberg(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(eigh(h, Spectrum::with_vectors));
}
BENCHMARK(BM_EighVectors)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

// Energy at one temperature once the spectrum is known.
void BM_GibbsEnergy(benchmark::State& state) {
  const ThermalEnsemble ens(build_hamiltonian(ChainModel::heisenberg(10)), Spectrum::values_only);
  double t = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ens.energy(t));
    t = t < 4.0 ? t + 0.01 : 0.5;
  }
}
BENCHMARK(BM_GibbsEnergy);

void BM_ThresholdReport(benchmark::State& state) {
  const auto model = ChainModel::heisenberg(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(threshold_report(model));
}
BENCHMARK(BM_ThresholdReport)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ThermalMarginal(benchmark::State& state) {
  const ThermalEnsemble ens(build_hamiltonian(ChainModel::heisenberg_field(8, 1.0, 1.0)));
  const std::array<int, 2> sites{1, 2};
  const auto basis = ens.reduced_basis(sites);
  for (auto _ : state) benchmark::DoNotOptimize(ens.thermal_marginal(basis, 0.7));
}
BENCHMARK(BM_ThermalMarginal)->Unit(benchmark::kMicrosecond);

void BM_Concurrence(benchmark::State& state) {
  const auto rho = gibbs_state(build_hamiltonian(ChainModel::heisenberg(2)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_ProductOracle(benchmark::State& state) {
  const auto model = ChainModel::xy(static_cast<int>(state.range(0)));
  OracleOptions options;
  options.restarts = 8;
  options.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(min_product_energy(model, options));
}
BENCHMARK(BM_ProductOracle)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_PairOracle(benchmark::State& state) {
  const auto model = ChainModel::xy(static_cast<int>(state.range(0)));
  OracleOptions options;
  options.restarts = 8;
  options.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(min_pair_producible_energy(model, options));
}
BENCHMARK(BM_PairOracle)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
