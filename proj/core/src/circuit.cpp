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

#include "dilatia/circuit.hpp"

#include <cmath>
#include <numbers>

#include "dilatia/errors.hpp"

namespace dilatia {

namespace {

constexpr double kUnitaryTolerance = 1e-10;

void require_distinct(const std::vector<int>& qubits) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0) throw ArgumentError("negative qubit index");
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw ArgumentError("repeated qubit index " + std::to_string(qubits[i]));
      }
    }
  }
}

Gate simple(GateKind kind, std::vector<int> qubits) {
  require_distinct(qubits);
  Gate g;
  g.kind = kind;
  g.qubits = std::move(qubits);
  return g;
}

ComplexMatrix pad_with_identity(const ComplexMatrix& m, std::size_t n) {
  if (m.rows() == n) return m;
  ComplexMatrix out = ComplexMatrix::identity(n);
  out.set_block(0, 0, m);
  return out;
}

std::vector<int> range(int first, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = first + i;
  return out;
}

}  // namespace

Gate Gate::h(int qubit) { return simple(GateKind::kH, {qubit}); }

Gate Gate::x(int qubit) { return simple(GateKind::kX, {qubit}); }

Gate Gate::rz(int qubit, double angle) {
  Gate g = simple(GateKind::kRz, {qubit});
  g.angle = angle;
  return g;
}

Gate Gate::cnot(int control, int target) {
  return simple(GateKind::kCnot, {control, target});
}

Gate Gate::diagonal(std::vector<int> qubits, RealVector phases) {
  Gate g = simple(GateKind::kDiagonal, std::move(qubits));
  if (g.qubits.empty() || phases.size() != (std::size_t{1} << g.qubits.size())) {
    throw DimensionError("DIAG gate needs 2^" + std::to_string(g.qubits.size()) +
                         " phases, got " + std::to_string(phases.size()));
  }
  g.phases = std::move(phases);
  return g;
}

Gate Gate::unitary(std::vector<int> qubits, ComplexMatrix matrix) {
  Gate g = simple(GateKind::kUnitary, std::move(qubits));
  const std::size_t dim = std::size_t{1} << g.qubits.size();
  if (g.qubits.empty() || !matrix.is_square() || matrix.rows() != dim) {
    throw DimensionError("UNITARY gate on " + std::to_string(g.qubits.size()) +
                         " qubits needs a " + std::to_string(dim) + "x" +
                         std::to_string(dim) + " matrix");
  }
  const double residual = unitarity_residual(matrix);
  if (!(residual <= kUnitaryTolerance)) {
    throw DomainError("UNITARY gate matrix is not unitary (residual " +
                      std::to_string(residual) + ")");
  }
  g.matrix = std::move(matrix);
  return g;
}

Gate Gate::global_phase(double angle) {
  Gate g;
  g.kind = GateKind::kGlobalPhase;
  g.angle = angle;
  return g;
}

ComplexMatrix Gate::local_matrix() const {
  const double r = std::numbers::sqrt2 / 2.0;
  switch (kind) {
    case GateKind::kH:
      return {{r, r}, {r, -r}};
    case GateKind::kX:
      return {{0.0, 1.0}, {1.0, 0.0}};
    case GateKind::kRz:
      return {{std::polar(1.0, -angle / 2.0), 0.0},
              {0.0, std::polar(1.0, angle / 2.0)}};
    case GateKind::kCnot: {
      // Local index = control + 2 * target.
      ComplexMatrix m(4, 4);
      m(0, 0) = 1.0;
      m(2, 2) = 1.0;
      m(3, 1) = 1.0;
      m(1, 3) = 1.0;
      return m;
    }
    case GateKind::kDiagonal: {
      ComplexVector d(phases.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::polar(1.0, phases[i]);
      return ComplexMatrix::diagonal(std::span<const Complex>(d));
    }
    case GateKind::kUnitary:
      return *matrix;
    case GateKind::kGlobalPhase:
      return {{std::polar(1.0, angle)}};
  }
  throw ArgumentError("unknown gate kind");
}

std::string Gate::name() const {
  switch (kind) {
    case GateKind::kH: return "H";
    case GateKind::kX: return "X";
    case GateKind::kRz: return "RZ";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kDiagonal: return "DIAG";
    case GateKind::kUnitary: return "UNITARY";
    case GateKind::kGlobalPhase: return "GLOBAL_PHASE";
  }
  return "?";
}

Circuit::Circuit(int width) : width_(width) {
  if (width < 1) throw DimensionError("circuit width must be at least 1");
}

Circuit& Circuit::append(Gate gate) {
  for (int q : gate.qubits) {
    if (q >= width_) {
      throw DimensionError(gate.name() + " gate on qubit " + std::to_string(q) +
                           " exceeds circuit width " + std::to_string(width_));
    }
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width_ > width_) {
    throw DimensionError("appended circuit is wider than the target");
  }
  for (const auto& g : other.gates_) append(g);
  return *this;
}

std::size_t Circuit::gate_count() const {
  return gates_.size() - count(GateKind::kGlobalPhase);
}

std::size_t Circuit::count(GateKind kind) const {
  std::size_t n = 0;
  for (const auto& g : gates_) n += g.kind == kind ? 1 : 0;
  return n;
}

Circuit build_svd_circuit(const SvdFactors& factors, const DilatedDiagonal& dd) {
  const std::size_t r = factors.u.rows();
  const std::size_t padded = dd.size();
  if (factors.v_dagger.rows() != r || factors.singular_values.size() != r ||
      next_power_of_two(r) != padded) {
    throw DimensionError("SVD factors of dimension " + std::to_string(r) +
                         " do not match dilated diagonal of length " +
                         std::to_string(padded));
  }
  const int k = dd.system_qubits();
  Circuit c(k + 1);
  const auto system = range(0, k);
  // A 1x1 factor is a pure phase.
  auto apply_factor = [&](const ComplexMatrix& f) {
    if (k > 0) {
      c.append(Gate::unitary(system, pad_with_identity(f, padded)));
    } else {
      c.append(Gate::global_phase(std::arg(f(0, 0))));
    }
  };
  apply_factor(factors.v_dagger);
  c.append(Gate::h(k));
  c.append(Gate::diagonal(range(0, k + 1), dd.phases()));
  apply_factor(factors.u);
  c.append(Gate::h(k));
  return c;
}

Circuit build_diagonal_circuit(const DilatedDiagonal& dd) {
  const int k = dd.system_qubits();
  Circuit c(k + 1);
  c.append(Gate::h(k));
  c.append(Gate::diagonal(range(0, k + 1), dd.phases()));
  c.append(Gate::h(k));
  return c;
}

Circuit build_stateprep_circuit(std::span<const Complex> target, int system_qubits) {
  if (system_qubits < 0 || system_qubits > 20) {
    throw SizeError("unsupported system qubit count");
  }
  const std::size_t n = std::size_t{1} << system_qubits;
  if (target.empty() || target.size() > n) {
    throw DimensionError("target of length " + std::to_string(target.size()) +
                         " does not fit " + std::to_string(system_qubits) +
                         " qubits");
  }
  // Basis states beyond the target carry zero amplitude.
  ComplexVector padded(target.begin(), target.end());
  padded.resize(n, Complex{0.0, 0.0});
  const auto dilation = build_dilated_diagonal(padded, /*auto_rescale=*/false);

  Circuit c(system_qubits + 1);
  for (int q = 0; q <= system_qubits; ++q) c.append(Gate::h(q));
  c.append(Gate::diagonal(range(0, system_qubits + 1), dilation.diagonal.phases()));
  c.append(Gate::h(system_qubits));
  return c;
}

ComplexMatrix circuit_matrix(const Circuit& c) {
  if (c.width() > kMaxMatrixWidth) {
    throw SizeError("circuit_matrix supports width <= " +
                    std::to_string(kMaxMatrixWidth) + ", got " +
                    std::to_string(c.width()));
  }
  const std::size_t dim = std::size_t{1} << c.width();
  ComplexMatrix total = ComplexMatrix::identity(dim);
  for (const auto& gate : c.gates()) {
    const ComplexMatrix local = gate.local_matrix();
    const std::size_t span_dim = local.rows();
    std::size_t span_mask = 0;
    for (int q : gate.qubits) span_mask |= std::size_t{1} << q;

    // Full-space index with the span bits replaced by local index `l`.
    auto scatter = [&](std::size_t base, std::size_t l) {
      std::size_t idx = base & ~span_mask;
      for (std::size_t j = 0; j < gate.qubits.size(); ++j)
        if ((l >> j) & 1U) idx |= std::size_t{1} << gate.qubits[j];
      return idx;
    };
    auto gather = [&](std::size_t idx) {
      std::size_t l = 0;
      for (std::size_t j = 0; j < gate.qubits.size(); ++j)
        if ((idx >> gate.qubits[j]) & 1U) l |= std::size_t{1} << j;
      return l;
    };

    ComplexMatrix next(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const auto in = total.col(col);
      auto out = next.col(col);
      for (std::size_t row = 0; row < dim; ++row) {
        const std::size_t lr = gather(row);
        Complex acc = 0.0;
        for (std::size_t lc = 0; lc < span_dim; ++lc) {
          acc += local(lr, lc) * in[scatter(row, lc)];
        }
        out[row] = acc;
      }
    }
    total = std::move(next);
  }
  return total;
}

}  // namespace dilatia
