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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dilatia/density.hpp"
#include "dilatia/dilation.hpp"
#include "dilatia/numerics.hpp"
#include "dilatia/tomography.hpp"

namespace dilatia {

/// Kraus operators sharing one square dimension. `factorizations[i]`, when
/// present, is an analytic SVD of operators[i] used instead of the numerical
/// one. Construction only checks shapes; see check_contraction.
struct KrausChannel {
  KrausChannel(std::vector<ComplexMatrix> ops, std::string label,
               std::vector<std::optional<SvdFactors>> factorizations = {});

  std::vector<ComplexMatrix> operators;
  std::string label;
  std::vector<std::optional<SvdFactors>> factorizations;

  std::size_t dimension() const { return operators.front().rows(); }
  /// Analytic factors if present, numerical svd otherwise.
  SvdFactors factors(std::size_t i) const;
};

struct EnsembleMember {
  double weight = 0.0;
  ComplexVector state;  // normalized
};

/// Weighted pure states summing to a density matrix.
struct Ensemble {
  std::vector<EnsembleMember> members;

  ComplexMatrix reconstruct() const;
  double total_weight() const;
};

/// K0 = sqrt(l0) diag(e^{i theta t}, e^{-i theta t}),
/// K1 = sqrt(l1) diag(e^{-i theta t}, e^{i theta t}).
KrausChannel dephasing_channel(double theta, double lambda0, double lambda1,
                               double t);

/// K0 = diag(1, e^{-gamma t / 2}), K1 = [[0, sqrt(1 - e^{-gamma t})], [0, 0]],
/// with the factorizations K0 = I diag(1, e^{-gamma t/2}) I and
/// K1 = I diag(sqrt(1 - e^{-gamma t}), 0) X attached.
KrausChannel amplitude_damping_channel(double gamma, double t);

/// Sum_i K_i rho K_i^dagger.
DensityMatrix operator_sum_evolve(const KrausChannel& ch, const DensityMatrix& rho);

struct ChannelContractionReport {
  std::vector<ContractionReport> operators;
  /// ||sum K K^dagger - I||_F
  double outer_completeness_residual = 0.0;
  /// ||sum K^dagger K - I||_F
  double inner_completeness_residual = 0.0;

  bool all_contractions() const;
};

ChannelContractionReport check_contraction(const KrausChannel& ch);

/// Eigen-ensemble: weights are the positive eigenvalues, states the
/// eigenvectors.
Ensemble ensemble_decompose(const DensityMatrix& rho);

/// Checks a user-supplied ensemble against rho (reconstruction within 1e-10,
/// normalized states, positive weights). Throws DomainError otherwise.
Ensemble validate_ensemble(const DensityMatrix& rho, Ensemble supplied);

/// rho(0) = 1/4 [[1, 1], [1, 3]] as 1/2 |1><1| + 1/2 |+><+|.
Ensemble damping_initial_ensemble();
DensityMatrix damping_initial_state();

/// Runs every (Kraus operator, ensemble member) pair through the dilation
/// circuit, post-selects ancilla 0 and accumulates weight * outcome. Exact
/// mode supports dimensions up to 16; shot mode uses single-qubit tomography
/// per pair.
DensityMatrix evolve_on_simulator(const KrausChannel& ch, const Ensemble& ens,
                                  const SamplingMode& mode);

/// UNITARY gate preparing `psi` from |0...0> on qubits 0..k-1.
Gate state_preparation_gate(std::span<const Complex> psi);

/// Preparation of psi followed by the dilation circuit for `factors`.
Circuit kraus_branch_circuit(const SvdFactors& factors, std::span<const Complex> psi);

/// Channel file: {"type": "dephasing"|"damping"|"custom", "params": {...},
/// "kraus": [[[[re, im], ...], ...], ...]}. `t` is taken from params when
/// present; dephasing reads theta/lambda0/lambda1, damping gamma.
KrausChannel channel_from_json(const std::string& text, double t);
std::string channel_to_json(const KrausChannel& ch);

}  // namespace dilatia
