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

#include <array>
#include <cstdint>
#include <variant>

#include "dilatia/circuit.hpp"
#include "dilatia/density.hpp"

namespace dilatia {

/// Probabilities are used directly; no sampling noise.
struct ExactMode {};
/// Multinomial sampling with `shots` per measured circuit.
struct ShotMode {
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
};
using SamplingMode = std::variant<ExactMode, ShotMode>;

enum class PauliBasis { kZ = 0, kX = 1, kY = 2 };

/// Gates rotating the given basis onto Z for `qubit`. Y uses RZ(-pi/2) then
/// H, which equals S^dagger H up to a global phase.
std::vector<Gate> basis_change(PauliBasis basis, int qubit);

/// Ancilla-conditioned outcome weights for one measurement basis. In shot
/// mode these are counts; in exact mode probabilities with total = 1.
struct BasisStatistics {
  double total = 0.0;
  double success = 0.0;       // ancilla reads 0
  double success_plus = 0.0;  // ancilla 0 and system 0 (+1 eigenvalue)
};

using PauliStatistics = std::array<BasisStatistics, 3>;  // Z, X, Y

/// Runs `prep` (system qubit 0, ancilla qubit 1) once per Pauli basis.
PauliStatistics measure_pauli_statistics(const Circuit& prep,
                                         const SamplingMode& mode);

struct TomographyEstimate {
  DensityMatrix rho;  // branch_scale * p0 * rho_hat
  double success_probability = 0.0;
  std::uint64_t shots_per_basis = 0;  // 0 in exact mode
};

/// Pauli expectations are conditioned on ancilla-0 outcomes; the success
/// probability pools all three bases. rho_hat is projected to the PSD cone.
/// `branch_scale` converts p0 into the squared norm of the prepared state:
/// 2^k for the state-preparation circuit, 1 for operator application.
TomographyEstimate estimate_from_statistics(const PauliStatistics& stats,
                                            double branch_scale,
                                            std::uint64_t shots_per_basis);

TomographyEstimate tomography_1q(const Circuit& prep, const SamplingMode& mode,
                                 double branch_scale = 2.0);

}  // namespace dilatia
