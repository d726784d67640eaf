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

#include "dilatia/dilation.hpp"
#include "dilatia/numerics.hpp"

namespace dilatia {

enum class GateKind { kH, kX, kRz, kCnot, kDiagonal, kUnitary, kGlobalPhase };

/// A gate acting on an ordered qubit span. For multi-qubit gates, bit j of
/// the local basis index refers to qubits[j]; CNOT spans {control, target}.
/// RZ(angle) = diag(exp(-i angle/2), exp(+i angle/2)).
struct Gate {
  GateKind kind = GateKind::kH;
  std::vector<int> qubits;
  double angle = 0.0;
  RealVector phases;
  std::optional<ComplexMatrix> matrix;

  static Gate h(int qubit);
  static Gate x(int qubit);
  static Gate rz(int qubit, double angle);
  static Gate cnot(int control, int target);
  static Gate diagonal(std::vector<int> qubits, RealVector phases);
  static Gate unitary(std::vector<int> qubits, ComplexMatrix matrix);
  static Gate global_phase(double angle);

  /// 2^span x 2^span matrix in local ordering.
  ComplexMatrix local_matrix() const;
  std::string name() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over `width` qubits. In dilation circuits the ancilla
/// is the highest index, i.e. the most significant basis bit.
class Circuit {
 public:
  explicit Circuit(int width);

  int width() const noexcept { return width_; }
  int ancilla_index() const noexcept { return width_ - 1; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  Circuit& append(Gate gate);
  Circuit& append(const Circuit& other);

  /// Gate count excluding GLOBAL_PHASE.
  std::size_t gate_count() const;
  std::size_t count(GateKind kind) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int width_;
  std::vector<Gate> gates_;
};

inline constexpr int kMaxMatrixWidth = 10;

/// UNITARY(V^dag) on the system, H on the ancilla, DIAG(sigma_plus (+)
/// sigma_minus) on everything, UNITARY(U), H on the ancilla. Factors smaller
/// than the padded diagonal are extended with an identity block.
Circuit build_svd_circuit(const SvdFactors& factors, const DilatedDiagonal& dd);

/// H on the ancilla, the dilated diagonal, H on the ancilla.
Circuit build_diagonal_circuit(const DilatedDiagonal& dd);

/// H on every qubit, the dilated diagonal of `target`, H on the ancilla.
/// Post-selecting ancilla 0 leaves target / 2^(k/2) on the system.
Circuit build_stateprep_circuit(std::span<const Complex> target, int system_qubits);

/// Product of gate matrices in order (width <= 10).
ComplexMatrix circuit_matrix(const Circuit& c);

}  // namespace dilatia
