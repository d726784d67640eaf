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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dilatia/numerics.hpp"
#include "dilatia/tomography.hpp"

namespace dilatia {

inline constexpr const char* kVersion = "0.1.0";

enum class Experiment { kPrep, kDephasing, kDamping, kDecompose };

Experiment parse_experiment(const std::string& name);
std::string experiment_name(Experiment e);

/// Parameters for one CLI run. JSON field names match the member names;
/// `mode` is "exact" or "shots".
struct ExperimentConfig {
  Experiment experiment = Experiment::kPrep;
  std::uint64_t seed = 16;
  std::vector<std::uint64_t> shots;
  int n_states = 98;
  double theta = 0.5;    // 1/ps
  double lambda0 = 0.7;
  double lambda1 = 0.3;
  double gamma = 0.15;   // 1/ps
  double t_start = 0.0;  // ps
  double t_end = 0.0;
  double t_step = 1.0;
  bool exact = false;
  std::string output_dir = "out";
  // decompose only
  std::string input;
  std::optional<double> epsilon;
  bool auto_rescale = false;
  bool qasm = false;

  /// Defaults mirroring the published setup for each experiment.
  static ExperimentConfig defaults(Experiment e);
  /// Overlays JSON fields onto defaults(e); unknown fields are a ConfigError.
  static ExperimentConfig from_json(const std::string& text, Experiment e);

  void validate() const;
  nlohmann::ordered_json to_json() const;
  /// t_start, t_start + t_step, ... up to t_end (inclusive within 1e-9).
  std::vector<double> time_grid() const;
  SamplingMode mode(std::uint64_t shots_override, std::uint64_t seed_override) const;
};

struct RunReport {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::ordered_json metadata;

  /// Header row plus values at 12 significant digits.
  std::string to_csv() const;
  std::vector<double> column(const std::string& name) const;
};

/// First two amplitudes of n Haar-random two-qubit states (8 normals each).
std::vector<ComplexVector> gen_random_substates(int n, std::uint64_t seed);

/// Tomography of the state-preparation circuit for each random state at every
/// shot count. Rows: shots, mean/std distance, mean/std fidelity. Exact mode
/// yields one row with shots = 0.
RunReport run_prep_experiment(const ExperimentConfig& cfg);

/// Coherence of |+> under the dephasing channel over the time grid.
RunReport run_dephasing(const ExperimentConfig& cfg);

/// Mixed-state evolution under amplitude damping over the time grid.
RunReport run_damping(const ExperimentConfig& cfg);

struct DecomposeReport {
  std::string summary;
  std::size_t diagonal_qubits = 0;
  std::size_t exact_gate_count = 0;
  std::size_t gate_bound = 0;
  std::optional<std::size_t> approx_gate_count;
  std::optional<double> approx_phase_error_bound;
  std::optional<std::string> qasm;  // absent when a dense UNITARY remains
};

/// Decomposes the operator in `matrix`: a 1 x r row is a diagonal (one-ancilla
/// diagonal circuit), an r x r matrix goes through the SVD circuit.
DecomposeReport run_decompose(const ExperimentConfig& cfg, const ComplexMatrix& matrix);

/// SVG figures for a report, keyed by file name.
std::map<std::string, std::string> render_figures(const RunReport& report);

/// Writes <name>.csv, run_report.json and the figure SVGs for a report.
/// Returns the written paths.
std::vector<std::string> write_report_files(const RunReport& report,
                                            const std::string& output_dir);

}  // namespace dilatia
