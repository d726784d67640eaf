// Copyright 2026 The Dilatia Authors
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


#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include "dilatia/circuit.hpp"
#include "dilatia/simulator.hpp"
#include "dilatia/tomography.hpp"

namespace {

dilatia::ComplexVector random_state(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> nd;
  dilatia::ComplexVector v(n);
  double norm = 0.0;
  for (auto& x : v) {
    x = {nd(eng), nd(eng)};
    norm += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(norm);
  return v;
}

void BM_ApplyNonunitary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  dilatia::ComplexMatrix m(n, n);
  std::mt19937_64 eng(5);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = {u(eng) / n, u(eng) / n};
  const auto psi = random_state(n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(dilatia::apply_nonunitary(m, psi, false));
}
BENCHMARK(BM_ApplyNonunitary)->RangeMultiplier(2)->Range(2, 32);

void BM_RunStatevector(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  dilatia::Circuit c(qubits);
  for (int layer = 0; layer < 4; ++layer) {
    for (int q = 0; q < qubits; ++q) c.append(dilatia::Gate::h(q));
    for (int q = 0; q + 1 < qubits; ++q) c.append(dilatia::Gate::cnot(q, q + 1));
  }
  const auto init = dilatia::StateVector::zero_state(qubits);
  for (auto _ : state) benchmark::DoNotOptimize(dilatia::run_statevector(c, init));
}
BENCHMARK(BM_RunStatevector)->DenseRange(4, 16, 4);

void BM_Tomography(benchmark::State& state) {
  const auto psi = random_state(2, 9);
  const auto prep = dilatia::build_stateprep_circuit(psi, 1);
  const dilatia::SamplingMode mode =
      dilatia::ShotMode{static_cast<std::uint64_t>(state.range(0)), 3};
  for (auto _ : state) benchmark::DoNotOptimize(dilatia::tomography_1q(prep, mode));
}
BENCHMARK(BM_Tomography)->Arg(1024)->Arg(16384);

}  // namespace
