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

#include "dilatia/synthesis.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "dilatia/errors.hpp"

namespace dilatia {

namespace {

// Coefficients this small are numerical noise from the transform.
constexpr double kNegligible = 1e-13;
constexpr double kLoweringTolerance = 1e-12;

bool close_to_scaled(const ComplexMatrix& m, const ComplexMatrix& ref,
                     Complex& phase) {
  // Pick the phase from the largest entry of the reference.
  std::size_t best = 0;
  for (std::size_t i = 0; i < ref.data().size(); ++i)
    if (std::abs(ref.data()[i]) > std::abs(ref.data()[best])) best = i;
  const Complex ratio = m.data()[best] / ref.data()[best];
  if (std::abs(std::abs(ratio) - 1.0) > kLoweringTolerance) return false;
  phase = ratio;
  return frobenius_norm(m - phase * ref) <= kLoweringTolerance;
}

}  // namespace

std::size_t DiagonalSynthesis::gate_count() const {
  std::size_t n = 0;
  for (const auto& g : gates) n += g.kind == GateKind::kGlobalPhase ? 0 : 1;
  return n;
}

RealVector walsh_coefficients(std::span<const double> phases) {
  const int d = exact_log2(phases.size());
  RealVector a(phases.begin(), phases.end());
  for (std::size_t half = 1; half < a.size(); half <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += 2 * half) {
      for (std::size_t j = i; j < i + half; ++j) {
        const double x = a[j];
        const double y = a[j + half];
        a[j] = x + y;
        a[j + half] = x - y;
      }
    }
  }
  const double norm = std::ldexp(1.0, -d);
  for (auto& v : a) v *= norm;
  return a;
}

DiagonalSynthesis decompose_diagonal_on(std::span<const double> phases,
                                        const std::vector<int>& qubits,
                                        double epsilon) {
  if (!(epsilon >= 0.0)) throw ArgumentError("epsilon must be non-negative");
  if (phases.size() < 2 || !is_power_of_two(phases.size())) {
    throw DimensionError("diagonal synthesis needs 2^d phases with d >= 1, got " +
                         std::to_string(phases.size()));
  }
  const int d = exact_log2(phases.size());
  if (qubits.size() != static_cast<std::size_t>(d)) {
    throw DimensionError("qubit map size does not match phase vector");
  }
  const RealVector a = walsh_coefficients(phases);
  DiagonalSynthesis out;
  auto keep = [&](double coeff) {
    return std::abs(coeff) > kNegligible && std::abs(coeff) >= epsilon;
  };

  for (int target = 0; target < d; ++target) {
    const std::size_t high = std::size_t{1} << target;
    std::size_t parity = 0;  // control bits currently folded into target
    auto move_parity = [&](std::size_t next) {
      const std::size_t diff = parity ^ next;
      for (int b = 0; b < target; ++b) {
        if ((diff >> b) & 1U) {
          out.gates.push_back(Gate::cnot(qubits[static_cast<std::size_t>(b)],
                                         qubits[static_cast<std::size_t>(target)]));
        }
      }
      parity = next;
    };
    for (std::size_t step = 0; step < high; ++step) {
      const std::size_t gray = step ^ (step >> 1);
      const double coeff = a[high | gray];
      if (!keep(coeff)) {
        out.phase_error_bound += std::abs(coeff);
        if (coeff != 0.0) ++out.dropped_rotations;
        continue;
      }
      move_parity(gray);
      // exp(i a Z) = RZ(-2a).
      out.gates.push_back(Gate::rz(qubits[static_cast<std::size_t>(target)],
                                   -2.0 * coeff));
      ++out.retained_rotations;
    }
    move_parity(0);
  }
  // The constant term costs no gates, so epsilon never drops it.
  if (std::abs(a[0]) > kNegligible) {
    out.gates.push_back(Gate::global_phase(a[0]));
  } else {
    out.phase_error_bound += std::abs(a[0]);
  }
  return out;
}

DiagonalSynthesis decompose_diagonal_approx(std::span<const double> phases,
                                            double epsilon) {
  std::vector<int> qubits;
  if (is_power_of_two(phases.size())) {
    for (int q = 0; q < exact_log2(phases.size()); ++q) qubits.push_back(q);
  }
  return decompose_diagonal_on(phases, qubits, epsilon);
}

std::vector<Gate> decompose_diagonal(std::span<const double> phases) {
  return decompose_diagonal_approx(phases, 0.0).gates;
}

Circuit lower_circuit(const Circuit& c, double epsilon) {
  Circuit out(c.width());
  const ComplexMatrix pauli_x{{0.0, 1.0}, {1.0, 0.0}};
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::kDiagonal) {
      for (auto& lowered : decompose_diagonal_on(g.phases, g.qubits, epsilon).gates) {
        out.append(std::move(lowered));
      }
      continue;
    }
    if (g.kind == GateKind::kUnitary) {
      const ComplexMatrix& m = *g.matrix;
      Complex phase;
      if (close_to_scaled(m, ComplexMatrix::identity(m.rows()), phase)) {
        if (std::abs(std::arg(phase)) > kLoweringTolerance) {
          out.append(Gate::global_phase(std::arg(phase)));
        }
        continue;
      }
      if (g.qubits.size() == 1 && close_to_scaled(m, pauli_x, phase)) {
        out.append(Gate::x(g.qubits[0]));
        if (std::abs(std::arg(phase)) > kLoweringTolerance) {
          out.append(Gate::global_phase(std::arg(phase)));
        }
        continue;
      }
    }
    out.append(g);
  }
  return out;
}

}  // namespace dilatia
