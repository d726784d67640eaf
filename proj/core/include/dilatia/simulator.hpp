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

#include "dilatia/circuit.hpp"
#include "dilatia/numerics.hpp"

namespace dilatia {

/// Applies the gates of `c` in order. `initial` must span c.width() qubits
/// and be normalized within 1e-12.
StateVector run_statevector(const Circuit& c, const StateVector& initial);

/// Applies gates without the normalization precondition.
void apply_gates(std::span<const Gate> gates, std::span<Complex> amplitudes);

struct Branch {
  ComplexVector amplitudes;  // un-normalized, ancilla bit removed
  double probability = 0.0;
};

/// Amplitudes whose `ancilla` bit equals `outcome`, with the bit removed
/// from the index, and their squared norm.
Branch postselect_ancilla(const StateVector& s, int ancilla, int outcome = 0);

struct NonUnitaryResult {
  ComplexVector output;  // (m / scale) psi
  double probability = 0.0;
  double scale = 1.0;
  Circuit circuit{1};
};

/// Applies m to psi through SVD, diagonal dilation, the one-ancilla circuit
/// and post-selection on ancilla 0. psi must be normalized; any length up to
/// 64 is accepted and padded internally to a power of two.
NonUnitaryResult apply_nonunitary(const ComplexMatrix& m,
                                  std::span<const Complex> psi,
                                  bool auto_rescale);

/// psi (x) |0>_ancilla for the dilation circuits (ancilla is the top bit).
StateVector with_ancilla(std::span<const Complex> psi);

}  // namespace dilatia
