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


#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "dilatia/synthesis.hpp"

namespace {

std::vector<double> random_phases(int qubits) {
  std::mt19937_64 eng(static_cast<std::uint64_t>(qubits));
  std::uniform_real_distribution<double> u(-3.14159, 3.14159);
  std::vector<double> out(std::size_t{1} << qubits);
  for (auto& x : out) x = u(eng);
  return out;
}

void BM_DecomposeDiagonal(benchmark::State& state) {
  const auto phases = random_phases(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dilatia::decompose_diagonal(phases));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(phases.size()));
}
BENCHMARK(BM_DecomposeDiagonal)->DenseRange(1, 12, 1)->Complexity();

void BM_DecomposeDiagonalApprox(benchmark::State& state) {
  const auto phases = random_phases(10);
  const double eps = static_cast<double>(state.range(0)) * 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(dilatia::decompose_diagonal_approx(phases, eps));
}
BENCHMARK(BM_DecomposeDiagonalApprox)->Arg(0)->Arg(1)->Arg(10)->Arg(100);

}  // namespace
