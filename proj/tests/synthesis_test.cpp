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
#include <numbers>

#include <gtest/gtest.h>

#include "dilatia/circuit.hpp"
#include "dilatia/errors.hpp"
#include "dilatia/synthesis.hpp"
#include "oracle.hpp"

using namespace dilatia;
using dilatia::dtest::Gen;

namespace {

Circuit as_circuit(const std::vector<Gate>& gates, int width) {
  Circuit c(width);
  for (const auto& g : gates) c.append(g);
  return c;
}

// Reconstruction error against diag(e^{i theta}), global phase included.
double synthesis_error(const std::vector<Gate>& gates, const std::vector<double>& theta) {
  const int d = exact_log2(theta.size());
  const auto m = dtest::oracle_circuit_matrix(as_circuit(gates, d));
  dtest::EMatrix expect = dtest::EMatrix::Zero(theta.size(), theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) expect(k, k) = std::polar(1.0, theta[k]);
  return (m - expect).norm();
}

// Inverse Walsh transform: theta_x = sum_s a_s (-1)^{popcount(s & x)}.
std::vector<double> from_walsh(const std::vector<double>& a) {
  std::vector<double> theta(a.size(), 0.0);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t s = 0; s < a.size(); ++s)
      theta[x] += (std::popcount(s & x) % 2 ? -1.0 : 1.0) * a[s];
  return theta;
}

}  // namespace

TEST(walsh, matches_definition) {
  Gen gen(4);
  const auto theta = gen.phases(8);
  const auto a = walsh_coefficients(theta);
  for (std::size_t s = 0; s < 8; ++s) {
    double ref = 0.0;
    for (std::size_t x = 0; x < 8; ++x)
      ref += theta[x] * (std::popcount(s & x) % 2 ? -1.0 : 1.0);
    EXPECT_NEAR(a[s], ref / 8.0, 1e-15);
  }
}

TEST(decompose_diagonal, all_zero_is_empty) {
  EXPECT_TRUE(decompose_diagonal(std::vector<double>(4, 0.0)).empty());
}

TEST(decompose_diagonal, pauli_z) {
  const std::vector<double> theta{0.0, std::numbers::pi};
  const auto gates = decompose_diagonal(theta);
  const auto c = as_circuit(gates, 1);
  EXPECT_EQ(c.count(GateKind::kRz), 1u);
  EXPECT_EQ(c.gate_count(), 1u);
  EXPECT_EQ(c.count(GateKind::kGlobalPhase), 1u);
  EXPECT_LE(synthesis_error(gates, theta), 1e-14);
}

TEST(decompose_diagonal, random_two_qubit) {
  Gen gen(2);
  const auto theta = gen.phases(4);
  const auto gates = decompose_diagonal(theta);
  EXPECT_LE(as_circuit(gates, 2).gate_count(), 5u);
  EXPECT_LE(synthesis_error(gates, theta), 1e-10);
}

TEST(decompose_diagonal, rejects_bad_lengths) {
  EXPECT_THROW(decompose_diagonal(std::vector<double>(3)), DimensionError);
  EXPECT_THROW(decompose_diagonal(std::vector<double>(1)), DimensionError);
  EXPECT_THROW(decompose_diagonal_approx(std::vector<double>(2), -1e-3), ArgumentError);
}

TEST(decompose_diagonal, qubit_map) {
  Gen gen(9);
  const auto theta = gen.phases(4);
  const auto s = decompose_diagonal_on(theta, {2, 0}, 0.0);
  Circuit c(3);
  for (const auto& g : s.gates) c.append(g);
  Circuit ref(3);
  ref.append(Gate::diagonal({2, 0}, theta));
  EXPECT_LE((dtest::oracle_circuit_matrix(c) - dtest::oracle_circuit_matrix(ref)).norm(),
            1e-12);
}

TEST(decompose_diagonal_approx, epsilon_zero_is_exact_path) {
  Gen gen(13);
  const auto theta = gen.phases(16);
  const auto approx = decompose_diagonal_approx(theta, 0.0);
  EXPECT_EQ(approx.gates, decompose_diagonal(theta));
  EXPECT_LE(approx.phase_error_bound, 1e-12);
}

TEST(decompose_diagonal_approx, single_harmonic_survives) {
  std::vector<double> a(8, 0.0);
  a[5] = 0.4;
  const auto theta = from_walsh(a);
  for (double eps : {0.0, 0.1, 0.39}) {
    const auto s = decompose_diagonal_approx(theta, eps);
    EXPECT_EQ(s.retained_rotations, 1u) << eps;
    EXPECT_LE(synthesis_error(s.gates, theta), 1e-14);
  }
  EXPECT_EQ(decompose_diagonal_approx(theta, 0.41).retained_rotations, 0u);
}

TEST(decompose_diagonal_approx, smooth_profile_bound_holds) {
  // d = 4 smooth phase ramp; pick epsilon so about half the gates go away.
  std::vector<double> theta(16);
  for (std::size_t x = 0; x < 16; ++x) theta[x] = 0.8 * std::sin(0.3 * double(x)) + 0.05 * x;
  const auto exact = decompose_diagonal_approx(theta, 0.0);
  const std::size_t exact_count = exact.gate_count();
  double eps = 1e-4;
  auto approx = decompose_diagonal_approx(theta, eps);
  while (2 * approx.gate_count() > exact_count) approx = decompose_diagonal_approx(theta, eps *= 1.2);
  EXPECT_LE(2 * approx.gate_count(), exact_count);

  const auto m = dtest::oracle_circuit_matrix(as_circuit(approx.gates, 4));
  double worst = 0.0;
  for (std::size_t x = 0; x < 16; ++x) {
    const double dev = std::abs(std::remainder(std::arg(m(x, x)) - theta[x], 2 * std::numbers::pi));
    worst = std::max(worst, dev);
  }
  EXPECT_GE(approx.phase_error_bound, worst);
  EXPECT_GT(worst, 0.0);
}

TEST(lower_circuit, identity_and_x_unitaries) {
  Circuit c(2);
  c.append(Gate::unitary({0}, ComplexMatrix{{0, 1}, {1, 0}}));
  c.append(Gate::unitary({0}, Complex(0, 1) * ComplexMatrix::identity(2)));
  c.append(Gate::diagonal({0, 1}, RealVector{0.1, 0.2, 0.3, 0.4}));
  const auto lowered = lower_circuit(c);
  EXPECT_EQ(lowered.count(GateKind::kUnitary), 0u);
  EXPECT_EQ(lowered.count(GateKind::kDiagonal), 0u);
  EXPECT_EQ(lowered.gates()[0].kind, GateKind::kX);
  EXPECT_LE((dtest::oracle_circuit_matrix(lowered) - dtest::oracle_circuit_matrix(c)).norm(),
            1e-12);
}

TEST(lower_circuit, keeps_dense_unitaries) {
  Circuit c(1);
  const double s = std::numbers::sqrt2 / 2;
  c.append(Gate::unitary({0}, ComplexMatrix{{s, s}, {s, -s}}));
  EXPECT_EQ(lower_circuit(c).count(GateKind::kUnitary), 1u);
}
