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

#include <benchmark/benchmark.h>

#include "dilatia/numerics.hpp"

namespace {

dilatia::ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> nd;
  dilatia::ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = {nd(eng), nd(eng)};
  return m;
}

void BM_Svd(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(dilatia::svd(m));
}
BENCHMARK(BM_Svd)->RangeMultiplier(2)->Range(2, 32);

void BM_HermitianEig(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  const auto h = a + a.adjoint();
  for (auto _ : state) benchmark::DoNotOptimize(dilatia::hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(2, 32);

}  // namespace

BENCHMARK_MAIN();
