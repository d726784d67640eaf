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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dilatia {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

inline constexpr std::size_t kMaxDenseDimension = 64;

/// Dense complex matrix stored column-major.
class ComplexMatrix {
 public:
  /// Zero matrix; throws DimensionError unless rows >= 1 and cols >= 1.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// From row-major nested initializer data, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> entries);
  static ComplexMatrix diagonal(std::span<const double> entries);
  /// Single-column matrix |v><v| style helpers build on this.
  static ComplexMatrix column(std::span<const Complex> entries);
  static ComplexMatrix outer(std::span<const Complex> a,
                             std::span<const Complex> b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[c * rows_ + r];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[c * rows_ + r];
  }

  std::span<Complex> col(std::size_t c) {
    return {data_.data() + c * rows_, rows_};
  }
  std::span<const Complex> col(std::size_t c) const {
    return {data_.data() + c * rows_, rows_};
  }

  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  /// Copy of the block starting at (r0, c0).
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t rows,
                      std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);
  /// (M + M^dagger) / 2.
  ComplexMatrix hermitian_part() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// sqrt(sum |m_ij|^2).
double frobenius_norm(const ComplexMatrix& m);
double max_abs_entry(const ComplexMatrix& m);
double vector_norm(std::span<const Complex> v);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
/// ||M^dagger M - I||_F.
double unitarity_residual(const ComplexMatrix& m);
/// ||M - M^dagger||_F.
double hermiticity_residual(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}
std::size_t next_power_of_two(std::size_t n) noexcept;
/// log2 of a power of two.
int exact_log2(std::size_t n);

/// Amplitudes over q qubits; basis index bit i is qubit i.
class StateVector {
 public:
  explicit StateVector(ComplexVector amplitudes);
  /// |0...0> on the given qubit count.
  static StateVector zero_state(int qubit_count);
  static StateVector basis_state(int qubit_count, std::size_t index);

  int qubit_count() const noexcept { return qubit_count_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> mutable_amplitudes() noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  double norm() const { return vector_norm(amplitudes_); }

 private:
  ComplexVector amplitudes_;
  int qubit_count_;
};

struct SvdFactors {
  ComplexMatrix u;
  RealVector singular_values;
  ComplexMatrix v_dagger;

  /// u * diag(sigma) * v_dagger.
  ComplexMatrix reconstruct() const;
};

struct EigenDecomposition {
  RealVector eigenvalues;  // descending
  ComplexMatrix eigenvectors;  // columns
};

/// One-sided Jacobi SVD of a square matrix (r <= 64).
SvdFactors svd(const ComplexMatrix& m);

/// Jacobi eigendecomposition of a Hermitian matrix (within 1e-12).
EigenDecomposition hermitian_eig(const ComplexMatrix& h);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-negative_tolerance, 0) are clamped to zero; lower ones are a DomainError.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& p,
                             double negative_tolerance = 1e-12);

/// Projects onto the PSD cone by clamping negative eigenvalues, then rescales
/// so the trace matches the input trace.
ComplexMatrix project_psd(const ComplexMatrix& h);

/// Columns of a unitary whose leading columns are the given orthonormal set;
/// remaining columns come from Gram-Schmidt over the standard basis.
ComplexMatrix complete_orthonormal_basis(const ComplexMatrix& partial,
                                         std::size_t columns_in_use);

/// Rotates each column so its largest-magnitude entry is real non-negative
/// (ties broken by lowest row). Returns the applied phases.
ComplexVector canonicalize_column_phases(ComplexMatrix& m);

}  // namespace dilatia
