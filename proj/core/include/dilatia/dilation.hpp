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

#include <utility>

#include "dilatia/numerics.hpp"

namespace dilatia {

/// Values with modulus in (1, 1 + kContractionSlack] are treated as unit
/// modulus; anything larger violates the contraction requirement.
inline constexpr double kContractionSlack = 1e-12;

/// Unit-modulus pair whose average is the original diagonal entry.
struct LiftedEntry {
  Complex plus;
  Complex minus;
};

/// Dilated diagonal U = diag(sigma_plus) (+) diag(sigma_minus). All vectors
/// have the padded (power of two) length; `logical_size` is the input length.
struct DilatedDiagonal {
  ComplexVector sigma_plus;
  ComplexVector sigma_minus;
  ComplexVector original;
  double scale = 1.0;
  std::size_t logical_size = 0;

  std::size_t size() const noexcept { return original.size(); }
  /// System qubits spanned by one block.
  int system_qubits() const { return exact_log2(size()); }
  /// Phases of the full 2N-entry diagonal, sigma_plus block first.
  RealVector phases() const;
  ComplexMatrix unitary() const;
};

struct ContractionReport {
  double max_singular_value = 0.0;
  bool was_rescaled = false;
  /// Largest modulus after rescaling (the norm bound of the shifted operator).
  double shifted_operator_norm_bound = 0.0;
};

/// sigma +/- i sqrt(1 - |sigma|^2) e^{i arg sigma}; sigma = 0 maps to (+i, -i).
LiftedEntry lift_entry(Complex sigma);

struct DilationResult {
  DilatedDiagonal diagonal;
  ContractionReport report;
};

/// Builds the dilated diagonal for `diag`, padding with 1 up to a power of
/// two. With auto_rescale the entries are divided by their largest modulus
/// when it exceeds one; otherwise such entries raise ContractionViolation.
DilationResult build_dilated_diagonal(std::span<const Complex> diag,
                                      bool auto_rescale);

/// The 2r x 2r unitary [[M, sqrt(I - MM^dag)], [sqrt(I - M^dag M), -M^dag]].
/// Used as an independent oracle for the diagonal construction.
ComplexMatrix sznagy_dilate(const ComplexMatrix& m);

}  // namespace dilatia
