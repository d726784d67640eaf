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

#include <string>

#include "dilatia/circuit.hpp"

namespace dilatia {

/// OpenQASM 2.0 text for a circuit made of H, X, RZ, CNOT and GLOBAL_PHASE
/// gates, with every qubit measured at the end. GLOBAL_PHASE has no QASM 2.0
/// statement and is emitted as a `// gphase(...)` comment line. Throws
/// UnsupportedGate for DIAG or UNITARY gates.
std::string export_qasm(const Circuit& c);

}  // namespace dilatia
