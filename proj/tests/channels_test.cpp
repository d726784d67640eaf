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

#include "dilatia/channels.hpp"
#include "dilatia/errors.hpp"
#include "dilatia/simulator.hpp"
#include "oracle.hpp"

using namespace dilatia;
using dilatia::dtest::EMatrix;
using dilatia::dtest::from_eigen;
using dilatia::dtest::Gen;
using dilatia::dtest::to_eigen;

namespace {

const double kS = std::numbers::sqrt2 / 2;

EMatrix oracle_operator_sum(const KrausChannel& ch, const EMatrix& rho) {
  EMatrix out = EMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : ch.operators) out += to_eigen(k) * rho * to_eigen(k).adjoint();
  return out;
}

// Random trace-preserving channel: K_i = A_i S^{-1/2}, S = sum A_i^dagger A_i.
KrausChannel random_channel(Gen& gen, int n, int count) {
  std::vector<EMatrix> a;
  EMatrix s = EMatrix::Zero(n, n);
  for (int i = 0; i < count; ++i) {
    a.push_back(gen.matrix(n));
    s += a.back().adjoint() * a.back();
  }
  Eigen::SelfAdjointEigenSolver<EMatrix> es(s);
  const EMatrix inv_root = es.eigenvectors() *
                           es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                           es.eigenvectors().adjoint();
  std::vector<ComplexMatrix> ops;
  for (const auto& m : a) ops.push_back(from_eigen(m * inv_root));
  return KrausChannel(std::move(ops), "random");
}

EMatrix completeness(const KrausChannel& ch) {
  EMatrix sum = EMatrix::Zero(ch.dimension(), ch.dimension());
  for (const auto& k : ch.operators) sum += to_eigen(k).adjoint() * to_eigen(k);
  return sum;
}

}  // namespace

TEST(dephasing_channel, at_time_zero) {
  const auto ch = dephasing_channel(0.5, 0.7, 0.3, 0.0);
  ASSERT_EQ(ch.operators.size(), 2u);
  EXPECT_LE(frobenius_norm(ch.operators[0] - Complex(std::sqrt(0.7)) * ComplexMatrix::identity(2)),
            1e-15);
  EXPECT_LE(frobenius_norm(ch.operators[1] - Complex(std::sqrt(0.3)) * ComplexMatrix::identity(2)),
            1e-15);
}

TEST(dephasing_channel, operators_and_completeness) {
  for (double t : {0.3, 1.0, 4.2}) {
    const auto ch = dephasing_channel(0.5, 0.7, 0.3, t);
    EXPECT_NEAR(std::abs(ch.operators[0](0, 0) - std::sqrt(0.7) * std::polar(1.0, 0.5 * t)), 0,
                1e-15);
    EXPECT_NEAR(std::abs(ch.operators[1](1, 1) - std::sqrt(0.3) * std::polar(1.0, 0.5 * t)), 0,
                1e-15);
    EXPECT_LE((completeness(ch) - EMatrix::Identity(2, 2)).norm(), 1e-12);
  }
  EXPECT_THROW(dephasing_channel(0.5, 0.7, 0.4, 1.0), ArgumentError);
  EXPECT_THROW(dephasing_channel(0.5, 1.2, -0.2, 1.0), ArgumentError);
}

TEST(amplitude_damping_channel, operators_and_factorization) {
  const auto zero = amplitude_damping_channel(0.15, 0.0);
  EXPECT_LE(frobenius_norm(zero.operators[0] - ComplexMatrix::identity(2)), 1e-15);
  EXPECT_LE(frobenius_norm(zero.operators[1]), 1e-15);
  for (double t : {0.5, 5.0, 30.0}) {
    const auto ch = amplitude_damping_channel(0.15, t);
    EXPECT_LE((completeness(ch) - EMatrix::Identity(2, 2)).norm(), 1e-12);
    for (std::size_t i = 0; i < 2; ++i) {
      const auto f = ch.factors(i);
      EXPECT_LE(frobenius_norm(f.reconstruct() - ch.operators[i]), 1e-15);
    }
    const auto f1 = ch.factors(1);
    EXPECT_EQ(f1.u, ComplexMatrix::identity(2));
    EXPECT_EQ(f1.v_dagger, (ComplexMatrix{{0, 1}, {1, 0}}));
  }
  EXPECT_THROW(amplitude_damping_channel(-0.1, 1.0), ArgumentError);
  EXPECT_THROW(amplitude_damping_channel(0.1, -1.0), ArgumentError);
}

TEST(amplitude_damping_channel, analytic_and_numeric_svd_agree_on_outcomes) {
  const auto ch = amplitude_damping_channel(0.15, 5.0);
  const ComplexVector psi{0.6, Complex(0, 0.8)};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto analytic = run_statevector(kraus_branch_circuit(ch.factors(i), psi),
                                          StateVector::zero_state(2));
    const auto numeric = run_statevector(kraus_branch_circuit(svd(ch.operators[i]), psi),
                                         StateVector::zero_state(2));
    const auto a = postselect_ancilla(analytic, 1), b = postselect_ancilla(numeric, 1);
    EXPECT_LE(dtest::phase_free_distance(to_eigen(a.amplitudes), to_eigen(b.amplitudes)),
              1e-12);
  }
}

TEST(operator_sum_evolve, identity_and_dimension) {
  const KrausChannel id({ComplexMatrix::identity(2)}, "identity");
  const auto rho = damping_initial_state();
  EXPECT_EQ(operator_sum_evolve(id, rho).matrix(), rho.matrix());
  EXPECT_THROW(operator_sum_evolve(id, DensityMatrix(ComplexMatrix::identity(3))),
               DimensionError);
}

TEST(operator_sum_evolve, dephasing_coherence) {
  const auto plus = DensityMatrix::from_state(ComplexVector{kS, kS});
  for (double t : {0.0, 0.7, 2.0}) {
    const auto out = operator_sum_evolve(dephasing_channel(0.5, 0.7, 0.3, t), plus);
    const Complex expect = 0.5 * (0.7 * std::polar(1.0, t) + 0.3 * std::polar(1.0, -t));
    EXPECT_NEAR(std::abs(out(0, 1) - expect), 0, 1e-15);
    EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-15);
  }
  // 2 theta t = pi
  const auto half = operator_sum_evolve(dephasing_channel(0.5, 0.7, 0.3, std::numbers::pi), plus);
  EXPECT_NEAR(std::abs(half(0, 1) + 0.5), 0, 1e-15);
}

TEST(operator_sum_evolve, damping_closed_form) {
  const double gamma = 0.15;
  for (double t : {0.0, 1.0, 10.0}) {
    const auto out = operator_sum_evolve(amplitude_damping_channel(gamma, t),
                                         damping_initial_state());
    EXPECT_NEAR(out(1, 1).real(), 0.75 * std::exp(-gamma * t), 1e-15);
    EXPECT_NEAR(std::abs(out(0, 1) - 0.25 * std::exp(-gamma * t / 2)), 0, 1e-15);
    EXPECT_NEAR(out.trace(), 1.0, 1e-14);
  }
}

TEST(check_contraction, reports) {
  const auto deph = check_contraction(dephasing_channel(0.5, 0.7, 0.3, 1.3));
  EXPECT_NEAR(deph.operators[0].max_singular_value, std::sqrt(0.7), 1e-14);
  EXPECT_NEAR(deph.operators[1].max_singular_value, std::sqrt(0.3), 1e-14);
  EXPECT_TRUE(deph.all_contractions());
  EXPECT_LE(deph.outer_completeness_residual, 1e-12);
  EXPECT_LE(deph.inner_completeness_residual, 1e-12);

  const double gamma = 0.15, t = 4.0;
  const auto damp = check_contraction(amplitude_damping_channel(gamma, t));
  EXPECT_NEAR(damp.operators[0].max_singular_value, 1.0, 1e-14);
  EXPECT_NEAR(damp.operators[1].max_singular_value, std::sqrt(1 - std::exp(-gamma * t)), 1e-14);
  EXPECT_LE(damp.inner_completeness_residual, 1e-12);
  // K K^dagger does not sum to I for damping
  EXPECT_GT(damp.outer_completeness_residual, 0.1);

  const auto dummy = check_contraction(KrausChannel({ComplexMatrix{{2, 0}, {0, 0}}}, "dummy"));
  EXPECT_FALSE(dummy.all_contractions());
  EXPECT_NEAR(dummy.operators[0].max_singular_value, 2.0, 1e-14);
  EXPECT_TRUE(dummy.operators[0].was_rescaled);
}

TEST(ensemble_decompose, pure_and_mixed) {
  const auto pure = ensemble_decompose(DensityMatrix::from_state(ComplexVector{1, 0}));
  ASSERT_EQ(pure.members.size(), 1u);
  EXPECT_NEAR(pure.members[0].weight, 1.0, 1e-15);
  EXPECT_NEAR(std::abs(pure.members[0].state[0]), 1.0, 1e-15);

  const auto mixed = ensemble_decompose(DensityMatrix(Complex(0.5) * ComplexMatrix::identity(2)));
  ASSERT_EQ(mixed.members.size(), 2u);
  EXPECT_NEAR(mixed.members[0].weight, 0.5, 1e-15);
  EXPECT_NEAR(mixed.members[1].weight, 0.5, 1e-15);
  EXPECT_NEAR(std::abs(inner_product(mixed.members[0].state, mixed.members[1].state)), 0, 1e-15);

  const auto rho = damping_initial_state();
  const auto eig = ensemble_decompose(rho);
  EXPECT_LE(frobenius_norm(eig.reconstruct() - rho.matrix()), 1e-12);
  EXPECT_NEAR(eig.total_weight(), 1.0, 1e-14);
}

TEST(validate_ensemble, damping_initial_decomposition) {
  const auto rho = damping_initial_state();
  EXPECT_LE(frobenius_norm(rho.matrix() - ComplexMatrix{{0.25, 0.25}, {0.25, 0.75}}), 1e-16);
  const auto ens = validate_ensemble(rho, damping_initial_ensemble());
  ASSERT_EQ(ens.members.size(), 2u);
  EXPECT_EQ(ens.members[0].state, (ComplexVector{0, 1}));
  EXPECT_LE(frobenius_norm(ens.reconstruct() - rho.matrix()), 1e-15);
  Ensemble wrong{{{1.0, {0, 1}}}};
  EXPECT_THROW(validate_ensemble(rho, wrong), DomainError);
}

TEST(state_preparation_gate, simple_states) {
  const auto x = state_preparation_gate(ComplexVector{0, 1});
  EXPECT_LE(frobenius_norm(*x.matrix - ComplexMatrix{{0, 1}, {1, 0}}), 1e-15);
  const auto h = state_preparation_gate(ComplexVector{kS, kS});
  EXPECT_LE(frobenius_norm(*h.matrix - ComplexMatrix{{kS, kS}, {kS, -kS}}), 1e-15);
  EXPECT_THROW(state_preparation_gate(ComplexVector{1, 1}), DomainError);
}

TEST(evolve_on_simulator, identity_channel) {
  const KrausChannel id({ComplexMatrix::identity(2)}, "identity");
  const auto rho = damping_initial_state();
  const auto out = evolve_on_simulator(id, damping_initial_ensemble(), ExactMode{});
  EXPECT_LE(frobenius_norm(out.matrix() - rho.matrix()), 1e-10);
}

TEST(evolve_on_simulator, exact_mode_matches_oracle_for_builtin_channels) {
  const auto rho = damping_initial_state();
  const auto ens = damping_initial_ensemble();
  const Ensemble plus{{{1.0, {kS, kS}}}};
  for (int t = 0; t <= 30; ++t) {
    const auto deph = dephasing_channel(0.5, 0.7, 0.3, t);
    const auto d_out = evolve_on_simulator(deph, plus, ExactMode{});
    const auto d_ref = oracle_operator_sum(deph, to_eigen(DensityMatrix::from_state(plus.members[0].state).matrix()));
    EXPECT_LE((to_eigen(d_out.matrix()) - d_ref).norm(), 1e-10) << t;
    EXPECT_NEAR(d_out(0, 0).real(), 0.5, 1e-12);

    const auto damp = amplitude_damping_channel(0.15, t);
    const auto a_out = evolve_on_simulator(damp, ens, ExactMode{});
    EXPECT_LE((to_eigen(a_out.matrix()) - oracle_operator_sum(damp, to_eigen(rho.matrix()))).norm(),
              1e-10)
        << t;
    EXPECT_NEAR(a_out.trace(), 1.0, 1e-10);
    EXPECT_LE(hermiticity_residual(a_out.matrix()), 1e-10);
  }
}

TEST(evolve_on_simulator, damping_long_time_limit) {
  const double gamma = 0.15;
  const auto out = evolve_on_simulator(amplitude_damping_channel(gamma, 20.0 / gamma),
                                       damping_initial_ensemble(), ExactMode{});
  EXPECT_LE(out(1, 1).real(), 1e-8);
  EXPECT_NEAR(out(0, 0).real(), 1.0, 1e-8);
}

TEST(evolve_on_simulator, random_channels_match_oracle) {
  Gen gen(404);
  for (int i = 0; i < 100; ++i) {
    const int n = i % 3 == 0 ? 4 : 2;
    const auto ch = random_channel(gen, n, 2);
    const auto v = gen.state(n), w = gen.state(n);
    Ensemble ens{{{0.3, ComplexVector(v.data(), v.data() + n)},
                  {0.7, ComplexVector(w.data(), w.data() + n)}}};
    const auto out = evolve_on_simulator(ch, ens, ExactMode{});
    const auto ref = oracle_operator_sum(ch, to_eigen(ens.reconstruct()));
    EXPECT_LE((to_eigen(out.matrix()) - ref).norm(), 1e-10) << i;
  }
}

TEST(evolve_on_simulator, shot_mode_damping) {
  const double gamma = 0.15;
  const auto ens = damping_initial_ensemble();
  for (double t : {0.0, 5.0, 15.0}) {
    const auto out = evolve_on_simulator(amplitude_damping_channel(gamma, t), ens,
                                         ShotMode{32000, 2024});
    EXPECT_NEAR(out(1, 1).real(), 0.75 * std::exp(-gamma * t), 0.03);
    EXPECT_NEAR(out(0, 1).real(), 0.25 * std::exp(-gamma * t / 2), 0.03);
    EXPECT_LE(hermiticity_residual(out.matrix()), 1e-2);
  }
  const auto again = evolve_on_simulator(amplitude_damping_channel(gamma, 5.0), ens,
                                         ShotMode{32000, 2024});
  EXPECT_EQ(again.matrix(),
            evolve_on_simulator(amplitude_damping_channel(gamma, 5.0), ens, ShotMode{32000, 2024})
                .matrix());
}

TEST(evolve_on_simulator, mode_limits) {
  const KrausChannel big({ComplexMatrix::identity(4)}, "id4");
  const Ensemble e{{{1.0, {1, 0, 0, 0}}}};
  EXPECT_THROW(evolve_on_simulator(big, e, ShotMode{}), DimensionError);
  EXPECT_THROW(evolve_on_simulator(KrausChannel({ComplexMatrix::identity(32)}, "id32"),
                                   Ensemble{{{1.0, ComplexVector(32, 0.0)}}}, ExactMode{}),
               Error);
}

TEST(channel_json, round_trip_and_types) {
  const auto damp = channel_from_json(R"({"type": "damping", "params": {"gamma": 0.2}})", 3.0);
  EXPECT_LE(frobenius_norm(damp.operators[1] - amplitude_damping_channel(0.2, 3.0).operators[1]),
            1e-16);
  const auto deph = channel_from_json(R"({"type": "dephasing", "params": {"t": 2.0}})", 0.0);
  EXPECT_LE(frobenius_norm(deph.operators[0] - dephasing_channel(0.5, 0.7, 0.3, 2.0).operators[0]),
            1e-16);
  const auto back = channel_from_json(channel_to_json(deph), 0.0);
  ASSERT_EQ(back.operators.size(), 2u);
  EXPECT_EQ(back.operators[0], deph.operators[0]);
  const auto custom = channel_from_json(
      R"({"type": "custom", "kraus": [[[[0, 0], [0, 1]], [[1, 0], [0, 0]]]]})", 0.0);
  EXPECT_EQ(custom.operators[0](0, 1), Complex(0, 1));
  EXPECT_THROW(channel_from_json(R"({"type": "lindblad"})", 0.0), ConfigError);
  EXPECT_THROW(channel_from_json("not json", 0.0), ConfigError);
  EXPECT_THROW(channel_from_json(R"({"type": "custom", "kraus": [[[1, 2]]]})", 0.0), ConfigError);
}
