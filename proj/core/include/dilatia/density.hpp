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

#include "dilatia/numerics.hpp"

namespace dilatia {

/// Hermitian positive semidefinite matrix, possibly sub-normalized.
///
/// Construction checks hermiticity (1e-10) and eigenvalues >= -1e-9; the
/// stored matrix is the Hermitian part of the input. The trace is not capped
/// at one: shot-noise estimates of nearly normalized states can land just
/// above it. Use is_subnormalized() where the bound matters.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);
  /// |psi><psi| for an arbitrary (possibly un-normalized) vector.
  static DensityMatrix from_state(std::span<const Complex> psi);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dimension() const noexcept { return m_.rows(); }
  double trace() const { return m_.trace().real(); }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  bool is_subnormalized(double tolerance = 1e-9) const {
    return trace() <= 1.0 + tolerance;
  }
  /// Copy scaled to unit trace; throws DomainError for zero trace.
  DensityMatrix normalized() const;

 private:
  ComplexMatrix m_;
};

/// Uhlmann fidelity Tr(sqrt(sqrt(rs) re sqrt(rs)))^2 of the trace-normalized
/// inputs.
double fidelity(const DensityMatrix& rho_s, const DensityMatrix& rho_e);

/// Frobenius norm of the difference of the raw (un-normalized) inputs.
double distance(const DensityMatrix& rho_s, const DensityMatrix& rho_e);

}  // namespace dilatia
