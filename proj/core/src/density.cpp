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

#include "dilatia/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dilatia/errors.hpp"

namespace dilatia {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kNegativeTolerance = 1e-9;
constexpr double kZeroTrace = 1e-15;

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DimensionError("density matrix must be square");
  if (hermiticity_residual(m_) > kHermitianTolerance) {
    throw DomainError("density matrix is not Hermitian");
  }
  m_ = m_.hermitian_part();
  const auto e = hermitian_eig(m_);
  if (e.eigenvalues.back() < -kNegativeTolerance) {
    throw DomainError("density matrix has negative eigenvalue " +
                      std::to_string(e.eigenvalues.back()));
  }
}

DensityMatrix DensityMatrix::from_state(std::span<const Complex> psi) {
  return DensityMatrix(ComplexMatrix::outer(psi, psi));
}

DensityMatrix DensityMatrix::normalized() const {
  const double t = trace();
  if (!(t > kZeroTrace)) throw DomainError("density matrix has zero trace");
  return DensityMatrix(Complex{1.0 / t, 0.0} * m_);
}

double fidelity(const DensityMatrix& rho_s, const DensityMatrix& rho_e) {
  if (rho_s.dimension() != rho_e.dimension()) {
    throw DimensionError("fidelity: dimension mismatch");
  }
  const DensityMatrix s = rho_s.normalized();
  const DensityMatrix e = rho_e.normalized();
  // Eigenvalues at rounding level are zeroed before the square root, otherwise
  // pure states come out with F - 1 ~ sqrt(eps).
  const auto floor_of = [](const RealVector& values) {
    double top = 0.0;
    for (double v : values) top = std::max(top, std::abs(v));
    return 64.0 * std::numeric_limits<double>::epsilon() * top;
  };
  const auto es = hermitian_eig(s.matrix());
  const double s_floor = floor_of(es.eigenvalues);
  const std::size_t n = s.dimension();
  ComplexMatrix root(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = es.eigenvalues[k];
    if (lambda < -kNegativeTolerance) {
      throw DomainError("fidelity: operand is not positive semidefinite");
    }
    if (lambda <= s_floor) continue;
    const auto v = es.eigenvectors.col(k);
    root += std::sqrt(lambda) * ComplexMatrix::outer(v, v);
  }
  const ComplexMatrix inner = (root * e.matrix() * root).hermitian_part();
  const auto ei = hermitian_eig(inner).eigenvalues;
  const double i_floor = floor_of(ei);
  double trace_root = 0.0;
  for (double lambda : ei) {
    if (lambda > i_floor) trace_root += std::sqrt(lambda);
  }
  return trace_root * trace_root;
}

double distance(const DensityMatrix& rho_s, const DensityMatrix& rho_e) {
  if (rho_s.dimension() != rho_e.dimension()) {
    throw DimensionError("distance: dimension mismatch");
  }
  return frobenius_norm(rho_s.matrix() - rho_e.matrix());
}

}  // namespace dilatia
