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

#include "dilatia/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dilatia/errors.hpp"

namespace dilatia {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 100;
constexpr double kSvdRotationThreshold = 1e-14;
constexpr double kHermitianTolerance = 1e-12;

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

void require_dense_square(const ComplexMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw DimensionError(std::string(op) + ": matrix must be square, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  if (m.rows() > kMaxDenseDimension) {
    throw SizeError(std::string(op) + ": dimension " +
                    std::to_string(m.rows()) + " exceeds " +
                    std::to_string(kMaxDenseDimension));
  }
  if (!all_finite(m)) {
    throw DomainError(std::string(op) + ": non-finite entry");
  }
}

// Columns sorted by key descending; equal keys keep index order.
std::vector<std::size_t> descending_order(const RealVector& keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return keys[a] > keys[b];
  });
  return order;
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  data_.assign(rows * cols, Complex{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ragged matrix initializer");
    }
    std::size_t c = 0;
    for (const auto& v : row) (*this)(r, c++) = v;
    ++r;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> entries) {
  ComplexMatrix m(entries.size(), 1);
  std::copy(entries.begin(), entries.end(), m.data_.begin());
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> a,
                                   std::span<const Complex> b) {
  ComplexMatrix m(a.size(), b.size());
  for (std::size_t c = 0; c < b.size(); ++c) {
    const Complex bc = std::conj(b[c]);
    for (std::size_t r = 0; r < a.size(); ++r) m(r, c) = a[r] * bc;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t r = 0; r < rows_; ++r) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t r = 0; r < rows_; ++r) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0,
                                   std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) {
    throw DimensionError("block out of range");
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0,
                              const ComplexMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw DimensionError("block out of range");
  }
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (std::size_t r = 0; r < b.rows(); ++r) (*this)(r0 + r, c0 + c) = b(r, c);
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  if (!is_square()) throw DimensionError("hermitian_part: non-square");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t r = 0; r < rows_; ++r)
      out(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& v : data_) v *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  return a += b;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  return a -= b;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: inner dimensions differ (" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex bkc = b(k, c);
      if (bkc == Complex{}) continue;
      for (std::size_t r = 0; r < a.rows(); ++r) out(r, c) += a(r, k) * bkc;
    }
  }
  return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) {
    throw DimensionError("matrix-vector product: dimension mismatch");
  }
  ComplexVector out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] += m(r, c) * v[c];
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ac = 0; ac < a.cols(); ++ac)
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
      for (std::size_t bc = 0; bc < b.cols(); ++bc)
        for (std::size_t br = 0; br < b.rows(); ++br)
          out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& v : m.data()) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs_entry(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& v : m.data()) s = std::max(s, std::abs(v));
  return s;
}

double vector_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("inner product: length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double unitarity_residual(const ComplexMatrix& m) {
  return frobenius_norm(m.adjoint() * m - ComplexMatrix::identity(m.cols()));
}

double hermiticity_residual(const ComplexMatrix& m) {
  return frobenius_norm(m - m.adjoint());
}

bool all_finite(const ComplexMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

std::size_t next_power_of_two(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

int exact_log2(std::size_t n) {
  if (!is_power_of_two(n)) {
    throw DimensionError("length " + std::to_string(n) +
                         " is not a power of two");
  }
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)),
      qubit_count_(exact_log2(amplitudes_.size())) {}

StateVector StateVector::zero_state(int qubit_count) {
  return basis_state(qubit_count, 0);
}

StateVector StateVector::basis_state(int qubit_count, std::size_t index) {
  if (qubit_count < 0 || qubit_count > 30) {
    throw SizeError("unsupported qubit count " + std::to_string(qubit_count));
  }
  ComplexVector amps(std::size_t{1} << qubit_count);
  if (index >= amps.size()) throw DimensionError("basis index out of range");
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

// ---------------------------------------------------------------------------
// Factorizations

ComplexMatrix SvdFactors::reconstruct() const {
  ComplexMatrix us = u;
  for (std::size_t c = 0; c < us.cols(); ++c)
    for (auto& v : us.col(c)) v *= singular_values[c];
  return us * v_dagger;
}

ComplexVector canonicalize_column_phases(ComplexMatrix& m) {
  ComplexVector phases(m.cols(), Complex{1.0, 0.0});
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto column = m.col(c);
    std::size_t best = 0;
    double best_mag = std::abs(column[0]);
    for (std::size_t r = 1; r < column.size(); ++r) {
      const double mag = std::abs(column[r]);
      // Relative slack keeps round-off from flipping near-ties.
      if (mag > best_mag * (1.0 + 1e-12) + 1e-300) {
        best = r;
        best_mag = mag;
      }
    }
    if (best_mag == 0.0) continue;
    const Complex phase = std::conj(column[best]) / best_mag;
    for (auto& v : column) v *= phase;
    column[best] = Complex{std::abs(column[best]), 0.0};
    phases[c] = phase;
  }
  return phases;
}

ComplexMatrix complete_orthonormal_basis(const ComplexMatrix& partial,
                                         std::size_t columns_in_use) {
  const std::size_t n = partial.rows();
  ComplexMatrix out = partial;
  std::size_t filled = columns_in_use;
  for (std::size_t k = 0; k < n && filled < out.cols(); ++k) {
    ComplexVector w(n);
    w[k] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t c = 0; c < filled; ++c) {
        const Complex proj = inner_product(out.col(c), w);
        const auto col = out.col(c);
        for (std::size_t r = 0; r < n; ++r) w[r] -= proj * col[r];
      }
    }
    const double norm = vector_norm(w);
    if (norm < 1e-6) continue;
    auto dst = out.col(filled++);
    for (std::size_t r = 0; r < n; ++r) dst[r] = w[r] / norm;
  }
  if (filled < out.cols()) {
    throw ConvergenceError("basis completion failed", double(out.cols() - filled));
  }
  return out;
}

SvdFactors svd(const ComplexMatrix& m) {
  require_dense_square(m, "svd");
  const std::size_t n = m.rows();
  ComplexMatrix work = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  // A column this small is rounding noise left over from a parallel partner;
  // rotating it again never drives the ratio below threshold.
  const double fro = frobenius_norm(m);
  const double tiny = static_cast<double>(n) * kEps * fro;
  const double negligible = tiny * tiny;

  // Hestenes one-sided Jacobi: orthogonalize columns of work = m * v.
  bool converged = false;
  double worst_ratio = 0.0;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    worst_ratio = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        auto ap = work.col(p);
        auto aq = work.col(q);
        double alpha = 0.0, beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          alpha += std::norm(ap[r]);
          beta += std::norm(aq[r]);
          gamma += std::conj(ap[r]) * aq[r];
        }
        const double g = std::abs(gamma);
        if (alpha <= negligible || beta <= negligible || g == 0.0) continue;
        const double ratio = g / std::sqrt(alpha * beta);
        worst_ratio = std::max(worst_ratio, ratio);
        if (ratio <= kSvdRotationThreshold) continue;
        converged = false;

        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const Complex phase = std::conj(gamma) / g;

        auto rotate = [&](std::span<Complex> x, std::span<Complex> y) {
          for (std::size_t r = 0; r < x.size(); ++r) {
            const Complex xp = x[r];
            const Complex yq = phase * y[r];
            x[r] = c * xp - s * yq;
            y[r] = s * xp + c * yq;
          }
        };
        rotate(ap, aq);
        rotate(v.col(p), v.col(q));
      }
    }
  }
  if (!converged) {
    throw ConvergenceError("svd: Jacobi sweeps did not converge", worst_ratio);
  }

  RealVector norms(n);
  for (std::size_t c = 0; c < n; ++c) norms[c] = vector_norm(work.col(c));
  const auto order = descending_order(norms);
  const double largest = norms[order[0]];
  const double zero_cut = static_cast<double>(n) * kEps * largest;

  SvdFactors f{ComplexMatrix(n, n), RealVector(n, 0.0), ComplexMatrix(n, n)};
  ComplexMatrix v_sorted(n, n);
  std::size_t nonzero = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    std::copy(v.col(src).begin(), v.col(src).end(), v_sorted.col(j).begin());
    const double sigma = norms[src];
    if (largest == 0.0 || sigma <= zero_cut) continue;
    f.singular_values[j] = sigma;
    auto dst = f.u.col(j);
    const auto a = work.col(src);
    for (std::size_t r = 0; r < n; ++r) dst[r] = a[r] / sigma;
    ++nonzero;
  }
  if (nonzero < n) f.u = complete_orthonormal_basis(f.u, nonzero);

  const ComplexVector phases = canonicalize_column_phases(f.u);
  for (std::size_t j = 0; j < n; ++j)
    for (auto& x : v_sorted.col(j)) x *= phases[j];
  f.v_dagger = v_sorted.adjoint();
  return f;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& h) {
  require_dense_square(h, "hermitian_eig");
  const std::size_t n = h.rows();
  const double scale = std::max(1.0, max_abs_entry(h));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r <= c; ++r) {
      if (std::abs(h(r, c) - std::conj(h(c, r))) > kHermitianTolerance * scale) {
        throw DomainError("hermitian_eig: matrix is not Hermitian");
      }
    }
  }

  ComplexMatrix a = h.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = kEps * std::max(frobenius_norm(a), 1e-300);

  auto off_diagonal = [&] {
    double s = 0.0;
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r)
        if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep < kMaxSweeps && off_diagonal() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex hpq = a(p, q);
        const double g = std::abs(hpq);
        if (g == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double zeta = (aqq - app) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const Complex phase = std::conj(hpq) / g;
        // G = [[c, s], [-s*phase, c*phase]] on (p, q).
        const Complex gpp = c, gpq = s, gqp = -s * phase, gqq = c * phase;
        for (std::size_t r = 0; r < n; ++r) {
          const Complex xp = a(r, p), xq = a(r, q);
          a(r, p) = xp * gpp + xq * gqp;
          a(r, q) = xp * gpq + xq * gqq;
          const Complex vp = v(r, p), vq = v(r, q);
          v(r, p) = vp * gpp + vq * gqp;
          v(r, q) = vp * gpq + vq * gqq;
        }
        for (std::size_t col = 0; col < n; ++col) {
          const Complex xp = a(p, col), xq = a(q, col);
          a(p, col) = std::conj(gpp) * xp + std::conj(gqp) * xq;
          a(q, col) = std::conj(gpq) * xp + std::conj(gqq) * xq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (off_diagonal() > target) {
    throw ConvergenceError("hermitian_eig: Jacobi sweeps did not converge",
                           off_diagonal());
  }

  RealVector diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  const auto order = descending_order(diag);
  EigenDecomposition out{RealVector(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = diag[order[j]];
    std::copy(v.col(order[j]).begin(), v.col(order[j]).end(),
              out.eigenvectors.col(j).begin());
  }
  canonicalize_column_phases(out.eigenvectors);
  return out;
}

namespace {

ComplexMatrix rebuild(const EigenDecomposition& e, const RealVector& values) {
  ComplexMatrix scaled = e.eigenvectors;
  for (std::size_t c = 0; c < scaled.cols(); ++c)
    for (auto& x : scaled.col(c)) x *= values[c];
  return (scaled * e.eigenvectors.adjoint()).hermitian_part();
}

}  // namespace

ComplexMatrix hermitian_sqrt(const ComplexMatrix& p, double negative_tolerance) {
  const auto e = hermitian_eig(p);
  RealVector roots(e.eigenvalues.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double lambda = e.eigenvalues[i];
    if (lambda < -negative_tolerance) {
      throw DomainError("hermitian_sqrt: eigenvalue " + std::to_string(lambda) +
                        " is negative");
    }
    roots[i] = std::sqrt(std::max(lambda, 0.0));
  }
  return rebuild(e, roots);
}

ComplexMatrix project_psd(const ComplexMatrix& h) {
  const ComplexMatrix herm = h.hermitian_part();
  const double trace = herm.trace().real();
  const auto e = hermitian_eig(herm);
  RealVector clamped(e.eigenvalues.size());
  double clamped_sum = 0.0;
  for (std::size_t i = 0; i < clamped.size(); ++i) {
    clamped[i] = std::max(e.eigenvalues[i], 0.0);
    clamped_sum += clamped[i];
  }
  if (clamped_sum <= 0.0 || trace <= 0.0) {
    return ComplexMatrix(h.rows(), h.cols());
  }
  for (auto& x : clamped) x *= trace / clamped_sum;
  return rebuild(e, clamped);
}

}  // namespace dilatia
