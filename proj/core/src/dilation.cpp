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

#include "dilatia/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dilatia/errors.hpp"

namespace dilatia {

namespace {

constexpr double kSzNagySlack = 1e-10;

std::string describe(Complex z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

}  // namespace

LiftedEntry lift_entry(Complex sigma) {
  double magnitude = std::abs(sigma);
  if (!(magnitude <= 1.0 + kContractionSlack)) {
    throw ContractionViolation("diagonal entry " + describe(sigma) +
                               " has modulus " + std::to_string(magnitude) +
                               " > 1");
  }
  if (magnitude > 1.0) {
    sigma /= magnitude;
    magnitude = 1.0;
  }
  if (magnitude == 0.0) {
    return {Complex{0.0, 1.0}, Complex{0.0, -1.0}};
  }
  // i * sqrt((1 - |s|^2) / |s|^2) * s, written without the 1/|s| blow-up.
  const Complex unit = sigma / magnitude;
  const double defect = std::sqrt(std::max(0.0, 1.0 - magnitude * magnitude));
  const Complex offset = Complex{0.0, defect} * unit;
  return {sigma + offset, sigma - offset};
}

RealVector DilatedDiagonal::phases() const {
  RealVector out;
  out.reserve(2 * size());
  for (const auto& z : sigma_plus) out.push_back(std::arg(z));
  for (const auto& z : sigma_minus) out.push_back(std::arg(z));
  return out;
}

ComplexMatrix DilatedDiagonal::unitary() const {
  ComplexVector entries(sigma_plus);
  entries.insert(entries.end(), sigma_minus.begin(), sigma_minus.end());
  return ComplexMatrix::diagonal(std::span<const Complex>(entries));
}

DilationResult build_dilated_diagonal(std::span<const Complex> diag,
                                      bool auto_rescale) {
  if (diag.empty()) throw DimensionError("diagonal must be non-empty");
  DilationResult result;
  auto& report = result.report;
  for (const auto& z : diag) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("diagonal contains a non-finite entry");
    }
    report.max_singular_value = std::max(report.max_singular_value, std::abs(z));
  }
  report.was_rescaled = report.max_singular_value > 1.0 + kContractionSlack;
  if (report.was_rescaled && !auto_rescale) {
    throw ContractionViolation(
        "largest diagonal modulus " + std::to_string(report.max_singular_value) +
        " exceeds 1 and auto-rescale is off");
  }

  auto& dd = result.diagonal;
  dd.scale = report.was_rescaled ? report.max_singular_value : 1.0;
  dd.logical_size = diag.size();
  const std::size_t padded = next_power_of_two(diag.size());
  dd.original.assign(padded, Complex{1.0, 0.0});
  for (std::size_t i = 0; i < diag.size(); ++i) dd.original[i] = diag[i] / dd.scale;

  dd.sigma_plus.resize(padded);
  dd.sigma_minus.resize(padded);
  for (std::size_t i = 0; i < padded; ++i) {
    const auto lifted = lift_entry(dd.original[i]);
    dd.sigma_plus[i] = lifted.plus;
    dd.sigma_minus[i] = lifted.minus;
    report.shifted_operator_norm_bound =
        std::max(report.shifted_operator_norm_bound, std::abs(dd.original[i]));
  }
  return result;
}

ComplexMatrix sznagy_dilate(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("sznagy_dilate: matrix must be square");
  const std::size_t r = m.rows();
  const double largest = svd(m).singular_values.front();
  if (largest > 1.0 + kSzNagySlack) {
    throw ContractionViolation("sznagy_dilate: largest singular value " +
                               std::to_string(largest) + " exceeds 1");
  }
  const ComplexMatrix id = ComplexMatrix::identity(r);
  const ComplexMatrix m_dag = m.adjoint();
  // Defect operators are PSD for a contraction; the slack absorbs round-off.
  const double slack = 4.0 * kSzNagySlack;
  const ComplexMatrix left_defect = hermitian_sqrt(id - m * m_dag, slack);
  const ComplexMatrix right_defect = hermitian_sqrt(id - m_dag * m, slack);

  ComplexMatrix out(2 * r, 2 * r);
  out.set_block(0, 0, m);
  out.set_block(0, r, left_defect);
  out.set_block(r, 0, right_defect);
  out.set_block(r, r, Complex{-1.0, 0.0} * m_dag);
  return out;
}

}  // namespace dilatia
