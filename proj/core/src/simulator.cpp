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

#include "dilatia/simulator.hpp"

#include <cmath>
#include <numbers>

#include "dilatia/dilation.hpp"
#include "dilatia/errors.hpp"

namespace dilatia {

namespace {

constexpr double kNormTolerance = 1e-12;

std::size_t span_mask(const std::vector<int>& qubits) {
  std::size_t mask = 0;
  for (int q : qubits) mask |= std::size_t{1} << q;
  return mask;
}

std::size_t scatter(std::size_t base, std::size_t local,
                    const std::vector<int>& qubits) {
  for (std::size_t j = 0; j < qubits.size(); ++j)
    if ((local >> j) & 1U) base |= std::size_t{1} << qubits[j];
  return base;
}

std::size_t gather(std::size_t index, const std::vector<int>& qubits) {
  std::size_t local = 0;
  for (std::size_t j = 0; j < qubits.size(); ++j)
    if ((index >> qubits[j]) & 1U) local |= std::size_t{1} << j;
  return local;
}

void apply_one(const Gate& g, std::span<Complex> a) {
  const std::size_t n = a.size();
  switch (g.kind) {
    case GateKind::kH: {
      const std::size_t bit = std::size_t{1} << g.qubits[0];
      const double r = std::numbers::sqrt2 / 2.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i & bit) continue;
        const Complex x = a[i], y = a[i | bit];
        a[i] = r * (x + y);
        a[i | bit] = r * (x - y);
      }
      return;
    }
    case GateKind::kX: {
      const std::size_t bit = std::size_t{1} << g.qubits[0];
      for (std::size_t i = 0; i < n; ++i)
        if (!(i & bit)) std::swap(a[i], a[i | bit]);
      return;
    }
    case GateKind::kRz: {
      const std::size_t bit = std::size_t{1} << g.qubits[0];
      const Complex lo = std::polar(1.0, -g.angle / 2.0);
      const Complex hi = std::polar(1.0, g.angle / 2.0);
      for (std::size_t i = 0; i < n; ++i) a[i] *= (i & bit) ? hi : lo;
      return;
    }
    case GateKind::kCnot: {
      const std::size_t control = std::size_t{1} << g.qubits[0];
      const std::size_t target = std::size_t{1} << g.qubits[1];
      for (std::size_t i = 0; i < n; ++i)
        if ((i & control) && !(i & target)) std::swap(a[i], a[i | target]);
      return;
    }
    case GateKind::kDiagonal: {
      ComplexVector factors(g.phases.size());
      for (std::size_t l = 0; l < factors.size(); ++l)
        factors[l] = std::polar(1.0, g.phases[l]);
      for (std::size_t i = 0; i < n; ++i) a[i] *= factors[gather(i, g.qubits)];
      return;
    }
    case GateKind::kUnitary: {
      const ComplexMatrix& m = *g.matrix;
      const std::size_t mask = span_mask(g.qubits);
      const std::size_t dim = m.rows();
      ComplexVector local(dim);
      std::vector<std::size_t> idx(dim);
      for (std::size_t base = 0; base < n; ++base) {
        if (base & mask) continue;
        for (std::size_t l = 0; l < dim; ++l) {
          idx[l] = scatter(base, l, g.qubits);
          local[l] = a[idx[l]];
        }
        const ComplexVector out = m * std::span<const Complex>(local);
        for (std::size_t l = 0; l < dim; ++l) a[idx[l]] = out[l];
      }
      return;
    }
    case GateKind::kGlobalPhase: {
      const Complex f = std::polar(1.0, g.angle);
      for (auto& x : a) x *= f;
      return;
    }
  }
}

}  // namespace

void apply_gates(std::span<const Gate> gates, std::span<Complex> amplitudes) {
  for (const auto& g : gates) {
    for (int q : g.qubits) {
      if ((std::size_t{1} << q) >= amplitudes.size()) {
        throw DimensionError(g.name() + " gate on qubit " + std::to_string(q) +
                             " outside the state");
      }
    }
    apply_one(g, amplitudes);
  }
}

StateVector run_statevector(const Circuit& c, const StateVector& initial) {
  if (initial.qubit_count() != c.width()) {
    throw DimensionError("state has " + std::to_string(initial.qubit_count()) +
                         " qubits, circuit has " + std::to_string(c.width()));
  }
  if (std::abs(initial.norm() - 1.0) > kNormTolerance) {
    throw DomainError("initial state is not normalized");
  }
  StateVector out = initial;
  apply_gates(c.gates(), out.mutable_amplitudes());
  return out;
}

Branch postselect_ancilla(const StateVector& s, int ancilla, int outcome) {
  if (ancilla < 0 || ancilla >= s.qubit_count()) {
    throw DimensionError("ancilla index out of range");
  }
  const std::size_t bit = std::size_t{1} << ancilla;
  const std::size_t low_mask = bit - 1;
  Branch b;
  b.amplitudes.resize(s.size() / 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (((i & bit) != 0) != (outcome != 0)) continue;
    const std::size_t packed = (i & low_mask) | ((i >> 1) & ~low_mask);
    b.amplitudes[packed] = s[i];
    b.probability += std::norm(s[i]);
  }
  return b;
}

StateVector with_ancilla(std::span<const Complex> psi) {
  ComplexVector amps(2 * psi.size());
  std::copy(psi.begin(), psi.end(), amps.begin());
  return StateVector(std::move(amps));
}

NonUnitaryResult apply_nonunitary(const ComplexMatrix& m,
                                  std::span<const Complex> psi,
                                  bool auto_rescale) {
  if (!m.is_square() || m.rows() != psi.size()) {
    throw DimensionError("operator of dimension " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) +
                         " does not match state of length " +
                         std::to_string(psi.size()));
  }
  const SvdFactors factors = svd(m);
  const ComplexVector sigma(factors.singular_values.begin(),
                            factors.singular_values.end());
  const auto dilation = build_dilated_diagonal(sigma, auto_rescale);

  NonUnitaryResult result;
  result.scale = dilation.diagonal.scale;
  result.circuit = build_svd_circuit(factors, dilation.diagonal);

  ComplexVector padded(psi.begin(), psi.end());
  padded.resize(dilation.diagonal.size(), Complex{0.0, 0.0});
  const StateVector final_state =
      run_statevector(result.circuit, with_ancilla(padded));
  Branch branch = postselect_ancilla(final_state, result.circuit.ancilla_index());
  branch.amplitudes.resize(psi.size());
  result.output = std::move(branch.amplitudes);
  result.probability = branch.probability;
  return result;
}

}  // namespace dilatia
