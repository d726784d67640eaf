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
#include "dilatia/dilation.hpp"
#include "dilatia/errors.hpp"
#include "dilatia/simulator.hpp"
#include "oracle.hpp"

using namespace dilatia;
using dilatia::dtest::from_eigen;
using dilatia::dtest::Gen;
using dilatia::dtest::to_eigen;

namespace {
const double kS = std::numbers::sqrt2 / 2;
}

TEST(run_statevector, empty_circuit_is_identity) {
  const StateVector psi({0.6, Complex(0, 0.8)});
  const auto out = run_statevector(Circuit(1), psi);
  EXPECT_EQ(std::vector<Complex>(out.amplitudes().begin(), out.amplitudes().end()),
            (std::vector<Complex>{0.6, Complex(0, 0.8)}));
}

TEST(run_statevector, hadamard) {
  Circuit c(1);
  c.append(Gate::h(0));
  const auto out = run_statevector(c, StateVector::zero_state(1));
  EXPECT_NEAR(std::abs(out[0] - kS), 0, 1e-16);
  EXPECT_NEAR(std::abs(out[1] - kS), 0, 1e-16);
}

TEST(run_statevector, validates_input) {
  EXPECT_THROW(run_statevector(Circuit(2), StateVector::zero_state(1)), DimensionError);
  EXPECT_THROW(run_statevector(Circuit(1), StateVector({1, 1})), DomainError);
}

TEST(run_statevector, stateprep_branch_is_proportional_to_target) {
  const ComplexVector target{0.6, Complex(0, 0.8)};
  const auto out = run_statevector(build_stateprep_circuit(target, 1), StateVector::zero_state(2));
  EXPECT_NEAR(std::abs(out[0] - 0.6 * kS), 0, 1e-15);
  EXPECT_NEAR(std::abs(out[1] - Complex(0, 0.8) * kS), 0, 1e-15);
  EXPECT_NEAR(out.norm(), 1.0, 1e-12);
}

TEST(run_statevector, kernels_match_dense_oracle) {
  Gen gen(31);
  Circuit c(4);
  c.append(Gate::h(3)).append(Gate::cnot(3, 1)).append(Gate::rz(2, 1.1)).append(Gate::x(0));
  c.append(Gate::diagonal({0, 1, 2, 3}, gen.phases(16)));
  c.append(Gate::diagonal({2, 0}, gen.phases(4)));
  c.append(Gate::unitary({3, 1}, svd(from_eigen(gen.matrix(4))).u));
  c.append(Gate::unitary({2}, svd(from_eigen(gen.matrix(2))).v_dagger));
  c.append(Gate::unitary({0, 1, 2}, svd(from_eigen(gen.matrix(8))).u));
  c.append(Gate::global_phase(0.7));
  const auto psi = gen.state(16);
  ComplexVector amps(psi.data(), psi.data() + psi.size());
  const auto out = run_statevector(c, StateVector(amps));
  const dtest::EVector ref = dtest::oracle_circuit_matrix(c) * psi;
  EXPECT_LE(dtest::max_diff(out.amplitudes(), ref), 1e-12);
}

TEST(postselect_ancilla, product_and_uniform) {
  const auto product = with_ancilla(ComplexVector{0.6, Complex(0, 0.8)});
  const auto b = postselect_ancilla(product, 1);
  EXPECT_EQ(b.amplitudes, (ComplexVector{0.6, Complex(0, 0.8)}));
  EXPECT_NEAR(b.probability, 1.0, 1e-15);
  const StateVector uniform({0.5, 0.5, 0.5, 0.5});
  EXPECT_NEAR(postselect_ancilla(uniform, 1).probability, 0.5, 1e-15);
  EXPECT_NEAR(postselect_ancilla(uniform, 0, 1).probability, 0.5, 1e-15);
  EXPECT_THROW(postselect_ancilla(uniform, 2), DimensionError);
}

TEST(postselect_ancilla, middle_qubit_compaction) {
  // amplitude at index 0b101 (q0=1, q1=0, q2=1) lands at compact index 0b11
  auto s = StateVector::basis_state(3, 0b101);
  const auto b = postselect_ancilla(s, 1);
  EXPECT_EQ(b.amplitudes[0b11], Complex(1));
}

TEST(apply_nonunitary, diag_on_plus) {
  const auto r = apply_nonunitary(ComplexMatrix::diagonal(RealVector{0.6, 1}),
                                  ComplexVector{kS, kS}, false);
  EXPECT_NEAR(r.probability, 0.68, 1e-15);
  EXPECT_NEAR(std::abs(r.output[0] - 0.6 * kS), 0, 1e-15);
}

TEST(apply_nonunitary, identity_and_scalar) {
  Gen gen(12);
  const auto psi = gen.state(4);
  const ComplexVector amps(psi.data(), psi.data() + 4);
  const auto id = apply_nonunitary(ComplexMatrix::identity(4), amps, false);
  EXPECT_NEAR(id.probability, 1.0, 1e-14);
  EXPECT_LE(dtest::max_diff(id.output, psi), 1e-14);
  const auto half = apply_nonunitary(Complex(0.5) * ComplexMatrix::identity(4), amps, false);
  EXPECT_NEAR(half.probability, 0.25, 1e-14);
  EXPECT_LE(dtest::max_diff(half.output, 0.5 * psi), 1e-14);
}

TEST(apply_nonunitary, random_4x4_against_direct_multiply) {
  Gen gen(7);
  const auto m = gen.contraction(4);
  const auto psi = gen.state(4);
  const auto r = apply_nonunitary(from_eigen(m), ComplexVector(psi.data(), psi.data() + 4), false);
  const dtest::EVector direct = m * psi;
  EXPECT_LE(dtest::max_diff(r.output, direct), 1e-10);
  EXPECT_NEAR(r.probability, direct.squaredNorm(), 1e-10);
}

TEST(apply_nonunitary, non_power_of_two_and_rescale) {
  Gen gen(17);
  const dtest::EMatrix m = 3.0 * gen.contraction(3);
  const auto psi = gen.state(3);
  const ComplexVector amps(psi.data(), psi.data() + 3);
  EXPECT_THROW(apply_nonunitary(from_eigen(m), amps, false), ContractionViolation);
  const auto r = apply_nonunitary(from_eigen(m), amps, true);
  ASSERT_EQ(r.output.size(), 3u);
  EXPECT_GT(r.scale, 1.0);
  const dtest::EVector direct = m * psi / r.scale;
  EXPECT_LE(dtest::max_diff(r.output, direct), 1e-10);
  EXPECT_THROW(apply_nonunitary(from_eigen(m), ComplexVector(4), true), DimensionError);
}

TEST(apply_nonunitary, rescaling_keeps_direction) {
  Gen gen(23);
  const auto diag = gen.disk_entries(4);
  const auto psi = gen.state(4);
  const ComplexVector amps(psi.data(), psi.data() + 4);
  const auto base = apply_nonunitary(ComplexMatrix::diagonal(diag), amps, true);
  for (double c : {1.5, 4.0, 40.0}) {
    const auto scaled =
        apply_nonunitary(Complex(c) * ComplexMatrix::diagonal(diag), amps, true);
    const auto a = to_eigen(base.output), b = to_eigen(scaled.output);
    EXPECT_LE((a / a.norm() - b / b.norm()).norm(), 1e-10) << c;
  }
}
