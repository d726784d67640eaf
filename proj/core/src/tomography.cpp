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

#include "dilatia/tomography.hpp"

#include <numbers>

#include "dilatia/errors.hpp"
#include "dilatia/sampling.hpp"
#include "dilatia/simulator.hpp"

namespace dilatia {

std::vector<Gate> basis_change(PauliBasis basis, int qubit) {
  switch (basis) {
    case PauliBasis::kZ:
      return {};
    case PauliBasis::kX:
      return {Gate::h(qubit)};
    case PauliBasis::kY:
      return {Gate::rz(qubit, -std::numbers::pi / 2.0), Gate::h(qubit)};
  }
  return {};
}

PauliStatistics measure_pauli_statistics(const Circuit& prep,
                                         const SamplingMode& mode) {
  if (prep.width() != 2) {
    throw DimensionError("single-qubit tomography needs 1 system qubit + ancilla");
  }
  PauliStatistics stats{};
  for (int b = 0; b < 3; ++b) {
    Circuit measured(2);
    measured.append(prep);
    for (auto& g : basis_change(static_cast<PauliBasis>(b), 0)) measured.append(g);
    auto& out = stats[static_cast<std::size_t>(b)];
    if (const auto* shots = std::get_if<ShotMode>(&mode)) {
      // Bitstrings: ancilla (qubit 1) first, then system.
      const ShotRun run = sample_circuit(measured, shots->shots, shots->seed);
      out.total = static_cast<double>(run.shots);
      out.success_plus = static_cast<double>(run.count("00"));
      out.success = out.success_plus + static_cast<double>(run.count("01"));
    } else {
      const StateVector s =
          run_statevector(measured, StateVector::zero_state(2));
      const RealVector p = outcome_probabilities(s);
      out.total = 1.0;
      out.success_plus = p[0];
      out.success = p[0] + p[1];
    }
  }
  return stats;
}

TomographyEstimate estimate_from_statistics(const PauliStatistics& stats,
                                            double branch_scale,
                                            std::uint64_t shots_per_basis) {
  static constexpr const char* kNames[] = {"Z", "X", "Y"};
  double expectation[3];
  double success = 0.0;
  double total = 0.0;
  for (std::size_t b = 0; b < 3; ++b) {
    if (!(stats[b].success > 0.0)) {
      throw InsufficientStatistics(std::string("no ancilla-0 outcomes in the ") +
                                   kNames[b] + " basis");
    }
    expectation[b] = (2.0 * stats[b].success_plus - stats[b].success) /
                     stats[b].success;
    success += stats[b].success;
    total += stats[b].total;
  }
  const double z = expectation[0], x = expectation[1], y = expectation[2];
  const ComplexMatrix bloch{{0.5 * (1.0 + z), Complex{0.5 * x, -0.5 * y}},
                            {Complex{0.5 * x, 0.5 * y}, 0.5 * (1.0 - z)}};
  const double p0 = success / total;
  ComplexMatrix rho = project_psd(bloch);
  rho *= branch_scale * p0;
  return TomographyEstimate{DensityMatrix(std::move(rho)), p0, shots_per_basis};
}

TomographyEstimate tomography_1q(const Circuit& prep, const SamplingMode& mode,
                                 double branch_scale) {
  const auto* shots = std::get_if<ShotMode>(&mode);
  return estimate_from_statistics(measure_pauli_statistics(prep, mode),
                                  branch_scale, shots ? shots->shots : 0);
}

}  // namespace dilatia
