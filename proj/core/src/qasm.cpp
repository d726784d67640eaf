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

#include "dilatia/qasm.hpp"

#include <cstdio>

#include "dilatia/errors.hpp"

namespace dilatia {

namespace {

std::string angle_text(double angle) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", angle == 0.0 ? 0.0 : angle);
  return buf;
}

std::string qubit(int q) { return "q[" + std::to_string(q) + "]"; }

}  // namespace

std::string export_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.width()) + "];\n";
  out += "creg c[" + std::to_string(c.width()) + "];\n";
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kH:
        out += "h " + qubit(g.qubits[0]) + ";\n";
        break;
      case GateKind::kX:
        out += "x " + qubit(g.qubits[0]) + ";\n";
        break;
      case GateKind::kRz:
        out += "rz(" + angle_text(g.angle) + ") " + qubit(g.qubits[0]) + ";\n";
        break;
      case GateKind::kCnot:
        out += "cx " + qubit(g.qubits[0]) + "," + qubit(g.qubits[1]) + ";\n";
        break;
      case GateKind::kGlobalPhase:
        out += "// gphase(" + angle_text(g.angle) + ")\n";
        break;
      case GateKind::kDiagonal:
      case GateKind::kUnitary:
        throw UnsupportedGate(g.name() +
                              " gate must be decomposed before QASM export");
    }
  }
  for (int q = 0; q < c.width(); ++q) {
    out += "measure " + qubit(q) + " -> c[" + std::to_string(q) + "];\n";
  }
  return out;
}

}  // namespace dilatia
