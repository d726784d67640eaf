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

#include <span>
#include <vector>

#include "dilatia/circuit.hpp"

namespace dilatia {

/// Coefficients a_s with theta_x = sum_s a_s (-1)^{popcount(s & x)}.
RealVector walsh_coefficients(std::span<const double> phases);

struct DiagonalSynthesis {
  /// RZ and CNOT gates, plus a trailing GLOBAL_PHASE when the constant
  /// coefficient is non-zero.
  std::vector<Gate> gates;
  /// Sum of |dropped coefficients|; bounds the max phase deviation.
  double phase_error_bound = 0.0;
  std::size_t retained_rotations = 0;
  std::size_t dropped_rotations = 0;

  /// Gate count excluding GLOBAL_PHASE.
  std::size_t gate_count() const;
};

/// Exact Rz/CNOT synthesis of diag(exp(i phases)) on qubits 0..d-1 using
/// Gray-code ordered parity rotations; at most 2^(d+1) - 3 gates.
std::vector<Gate> decompose_diagonal(std::span<const double> phases);

/// As decompose_diagonal but drops Walsh coefficients with |a_s| < epsilon.
DiagonalSynthesis decompose_diagonal_approx(std::span<const double> phases,
                                            double epsilon);

/// Same synthesis with local qubit j mapped to qubits[j].
DiagonalSynthesis decompose_diagonal_on(std::span<const double> phases,
                                        const std::vector<int>& qubits,
                                        double epsilon);

/// Replaces DIAG gates by their synthesis and lowers UNITARY gates that are
/// a phase times identity or Pauli-X on one qubit. Other UNITARY gates are
/// kept as is.
Circuit lower_circuit(const Circuit& c, double epsilon = 0.0);

}  // namespace dilatia
