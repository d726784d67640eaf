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

#include "dilatia/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>

#include "dilatia/channels.hpp"
#include "dilatia/circuit.hpp"
#include "dilatia/density.hpp"
#include "dilatia/dilation.hpp"
#include "dilatia/errors.hpp"
#include "dilatia/plot.hpp"
#include "dilatia/qasm.hpp"
#include "dilatia/sampling.hpp"
#include "dilatia/synthesis.hpp"

namespace dilatia {

namespace {

const std::vector<std::uint64_t> kTableShots = {64, 256, 1024, 4096, 16384};
constexpr std::uint64_t kDeviceShots = 32000;
constexpr int kDephasingPoints = 25;

std::string format_value(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

MeanStd summarize(const std::vector<double>& xs) {
  MeanStd out;
  if (xs.empty()) return out;
  for (double x : xs) out.mean += x;
  out.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return out;
}

nlohmann::ordered_json metadata_for(const ExperimentConfig& cfg,
                                    const std::string& name) {
  nlohmann::ordered_json m;
  m["report"] = name;
  m["version"] = kVersion;
  m["seed"] = cfg.seed;
  m["mode"] = cfg.exact ? "exact" : "shots";
  m["config"] = cfg.to_json();
  return m;
}

// One row of a dynamics table.
std::vector<double> dynamics_row(double t, const DensityMatrix& rho,
                                 double rho00_exact, double rho11_exact,
                                 Complex rho01_exact) {
  const Complex rho01 = rho(0, 1);
  const double rho00 = rho(0, 0).real();
  const double rho11 = rho(1, 1).real();
  return {t,
          rho00,
          rho11,
          rho01.real(),
          rho01.imag(),
          rho01_exact.real(),
          rho01_exact.imag(),
          rho00_exact,
          rho11_exact,
          2.0 * rho01.real(),
          -2.0 * rho01.imag(),
          rho00 - rho11};
}

const std::vector<std::string> kDynamicsColumns = {
    "t",          "rho00",        "rho11",        "re01",
    "im01",       "re01_exact",   "im01_exact",   "rho00_exact",
    "rho11_exact", "bloch_x",     "bloch_y",      "bloch_z"};

SamplingMode point_mode(const ExperimentConfig& cfg, std::uint64_t tag) {
  if (cfg.exact) return ExactMode{};
  return ShotMode{cfg.shots.front(), derive_seed(cfg.seed, tag)};
}

}  // namespace

Experiment parse_experiment(const std::string& name) {
  if (name == "prep") return Experiment::kPrep;
  if (name == "dephasing") return Experiment::kDephasing;
  if (name == "damping") return Experiment::kDamping;
  if (name == "decompose") return Experiment::kDecompose;
  throw ConfigError("unknown experiment '" + name + "'");
}

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::kPrep: return "prep";
    case Experiment::kDephasing: return "dephasing";
    case Experiment::kDamping: return "damping";
    case Experiment::kDecompose: return "decompose";
  }
  return "?";
}

ExperimentConfig ExperimentConfig::defaults(Experiment e) {
  ExperimentConfig cfg;
  cfg.experiment = e;
  switch (e) {
    case Experiment::kPrep:
      cfg.shots = kTableShots;
      break;
    case Experiment::kDephasing:
      cfg.shots = {kDeviceShots};
      cfg.t_end = std::numbers::pi / cfg.theta;
      cfg.t_step = cfg.t_end / (kDephasingPoints - 1);
      break;
    case Experiment::kDamping:
      cfg.shots = {kDeviceShots};
      cfg.t_end = 30.0;
      cfg.t_step = 1.0;
      break;
    case Experiment::kDecompose:
      cfg.shots = {1024};
      cfg.exact = true;
      break;
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text, Experiment e) {
  static const std::set<std::string> kKnown = {
      "experiment", "seed",   "shots",  "n_states",   "theta",   "lambda0",
      "lambda1",    "gamma",  "t_start", "t_end",     "t_step",  "mode",
      "output_dir", "input",  "epsilon", "auto_rescale", "qasm"};
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("config is not valid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!kKnown.count(key)) throw ConfigError("unknown config field '" + key + "'");
  }
  if (j.contains("experiment")) {
    const Experiment named = parse_experiment(j["experiment"].get<std::string>());
    if (named != e) {
      throw ConfigError("config is for '" + experiment_name(named) +
                        "' but the command is '" + experiment_name(e) + "'");
    }
  }
  ExperimentConfig cfg = defaults(e);
  try {
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("shots")) {
      cfg.shots = j["shots"].is_array()
                      ? j["shots"].get<std::vector<std::uint64_t>>()
                      : std::vector<std::uint64_t>{j["shots"].get<std::uint64_t>()};
    }
    if (j.contains("n_states")) cfg.n_states = j["n_states"].get<int>();
    if (j.contains("theta")) {
      cfg.theta = j["theta"].get<double>();
      if (e == Experiment::kDephasing && cfg.theta > 0.0) {
        cfg.t_end = std::numbers::pi / cfg.theta;
        cfg.t_step = cfg.t_end / (kDephasingPoints - 1);
      }
    }
    if (j.contains("lambda0")) cfg.lambda0 = j["lambda0"].get<double>();
    if (j.contains("lambda1")) cfg.lambda1 = j["lambda1"].get<double>();
    if (j.contains("gamma")) cfg.gamma = j["gamma"].get<double>();
    if (j.contains("t_start")) cfg.t_start = j["t_start"].get<double>();
    if (j.contains("t_end")) cfg.t_end = j["t_end"].get<double>();
    if (j.contains("t_step")) cfg.t_step = j["t_step"].get<double>();
    if (j.contains("mode")) {
      const auto mode = j["mode"].get<std::string>();
      if (mode != "exact" && mode != "shots") {
        throw ConfigError("mode must be 'exact' or 'shots'");
      }
      cfg.exact = mode == "exact";
    }
    if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
    if (j.contains("input")) cfg.input = j["input"].get<std::string>();
    if (j.contains("epsilon")) cfg.epsilon = j["epsilon"].get<double>();
    if (j.contains("auto_rescale")) cfg.auto_rescale = j["auto_rescale"].get<bool>();
    if (j.contains("qasm")) cfg.qasm = j["qasm"].get<bool>();
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("bad config value: ") + ex.what());
  }
  cfg.validate();
  return cfg;
}

void ExperimentConfig::validate() const {
  if (!(t_step > 0.0)) throw ConfigError("t_step must be positive");
  if (t_end < t_start) throw ConfigError("t_end must not precede t_start");
  if (n_states < 1) throw ConfigError("n_states must be at least 1");
  if (shots.empty()) throw ConfigError("shots must list at least one count");
  for (auto s : shots) {
    if (s < 1) throw ConfigError("shot counts must be at least 1");
  }
  if (epsilon && !(*epsilon >= 0.0)) throw ConfigError("epsilon must be non-negative");
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["experiment"] = experiment_name(experiment);
  j["seed"] = seed;
  j["shots"] = shots;
  j["n_states"] = n_states;
  j["theta"] = theta;
  j["lambda0"] = lambda0;
  j["lambda1"] = lambda1;
  j["gamma"] = gamma;
  j["t_start"] = t_start;
  j["t_end"] = t_end;
  j["t_step"] = t_step;
  j["mode"] = exact ? "exact" : "shots";
  j["output_dir"] = output_dir;
  if (experiment == Experiment::kDecompose) {
    j["input"] = input;
    if (epsilon) j["epsilon"] = *epsilon;
    j["auto_rescale"] = auto_rescale;
    j["qasm"] = qasm;
  }
  return j;
}

std::vector<double> ExperimentConfig::time_grid() const {
  validate();
  std::vector<double> grid;
  const auto steps =
      static_cast<std::size_t>(std::floor((t_end - t_start) / t_step + 1e-9));
  for (std::size_t i = 0; i <= steps; ++i) {
    grid.push_back(t_start + static_cast<double>(i) * t_step);
  }
  return grid;
}

SamplingMode ExperimentConfig::mode(std::uint64_t shots_override,
                                    std::uint64_t seed_override) const {
  if (exact) return ExactMode{};
  return ShotMode{shots_override, seed_override};
}

std::string RunReport::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_value(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::vector<double> RunReport::column(const std::string& name) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] != name) continue;
    std::vector<double> out;
    for (const auto& row : rows) out.push_back(row[c]);
    return out;
  }
  throw ArgumentError("report has no column '" + name + "'");
}

std::vector<ComplexVector> gen_random_substates(int n, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("need at least one state");
  Rng rng(seed);
  std::vector<ComplexVector> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ComplexVector full(4);
    for (auto& a : full) {
      const double re = rng.normal();
      const double im = rng.normal();
      a = {re, im};
    }
    const double norm = vector_norm(full);
    out.push_back({full[0] / norm, full[1] / norm});
  }
  return out;
}

RunReport run_prep_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto states = gen_random_substates(cfg.n_states, cfg.seed);
  RunReport report;
  report.name = "table1";
  report.columns = {"shots", "mean_distance", "std_distance", "mean_fidelity",
                    "std_fidelity"};
  report.metadata = metadata_for(cfg, report.name);

  std::vector<Circuit> circuits;
  std::vector<DensityMatrix> exact;
  std::vector<double> norms;
  for (const auto& phi : states) {
    circuits.push_back(build_stateprep_circuit(phi, 1));
    exact.push_back(DensityMatrix::from_state(phi));
    norms.push_back(vector_norm(phi));
  }
  const auto norm_stats = summarize(norms);
  report.metadata["mean_state_norm"] = norm_stats.mean;
  report.metadata["std_state_norm"] = norm_stats.std;

  const std::vector<std::uint64_t> schedule =
      cfg.exact ? std::vector<std::uint64_t>{0} : cfg.shots;
  for (std::uint64_t shots : schedule) {
    std::vector<double> distances, fidelities;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const SamplingMode mode =
          cfg.mode(shots, derive_seed(derive_seed(cfg.seed, i), shots));
      try {
        const auto estimate = tomography_1q(circuits[i], mode, 2.0);
        distances.push_back(distance(estimate.rho, exact[i]));
        fidelities.push_back(fidelity(estimate.rho, exact[i]));
      } catch (const InsufficientStatistics& ex) {
        throw InsufficientStatistics("state " + std::to_string(i) + " at " +
                                     std::to_string(shots) +
                                     " shots: " + ex.what());
      }
    }
    const auto d = summarize(distances);
    const auto f = summarize(fidelities);
    report.rows.push_back({static_cast<double>(shots), d.mean, d.std, f.mean, f.std});
  }
  return report;
}

RunReport run_dephasing(const ExperimentConfig& cfg) {
  const auto grid = cfg.time_grid();
  const double r = std::numbers::sqrt2 / 2.0;
  const Ensemble plus{{{1.0, {r, r}}}};
  RunReport report;
  report.name = "dephasing";
  report.columns = kDynamicsColumns;
  report.metadata = metadata_for(cfg, report.name);
  report.metadata["coherence_period_ps"] = std::numbers::pi / cfg.theta;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid[k];
    const auto channel = dephasing_channel(cfg.theta, cfg.lambda0, cfg.lambda1, t);
    const DensityMatrix rho = evolve_on_simulator(channel, plus, point_mode(cfg, k));
    const Complex coherence =
        0.5 * (cfg.lambda0 * std::polar(1.0, 2.0 * cfg.theta * t) +
               cfg.lambda1 * std::polar(1.0, -2.0 * cfg.theta * t));
    report.rows.push_back(dynamics_row(t, rho, 0.5, 0.5, coherence));
  }
  return report;
}

RunReport run_damping(const ExperimentConfig& cfg) {
  const auto grid = cfg.time_grid();
  const Ensemble ensemble =
      validate_ensemble(damping_initial_state(), damping_initial_ensemble());
  RunReport report;
  report.name = "damping";
  report.columns = kDynamicsColumns;
  report.metadata = metadata_for(cfg, report.name);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid[k];
    const auto channel = amplitude_damping_channel(cfg.gamma, t);
    const DensityMatrix rho = evolve_on_simulator(channel, ensemble, point_mode(cfg, k));
    const double excited = 0.75 * std::exp(-cfg.gamma * t);
    const Complex coherence = 0.25 * std::exp(-cfg.gamma * t / 2.0);
    report.rows.push_back(dynamics_row(t, rho, 1.0 - excited, excited, coherence));
  }
  return report;
}

DecomposeReport run_decompose(const ExperimentConfig& cfg, const ComplexMatrix& matrix) {
  DecomposeReport report;
  std::string text;
  char buf[160];
  Circuit circuit(1);
  if (matrix.rows() == 1) {
    const auto entries = matrix.data();
    const ComplexVector diag(entries.begin(), entries.end());
    const auto dilation = build_dilated_diagonal(diag, cfg.auto_rescale);
    text += "input: diagonal of length " + std::to_string(diag.size()) + "\n";
    std::snprintf(buf, sizeof buf, "max |entry|: %.12g  rescaled: %s  scale: %.12g\n",
                  dilation.report.max_singular_value,
                  dilation.report.was_rescaled ? "yes" : "no", dilation.diagonal.scale);
    text += buf;
    circuit = build_diagonal_circuit(dilation.diagonal);
  } else {
    if (!matrix.is_square()) {
      throw DimensionError("decompose expects a 1 x r diagonal or a square matrix");
    }
    if (matrix.rows() > kMaxDenseDimension) {
      throw SizeError("matrix dimension exceeds " + std::to_string(kMaxDenseDimension));
    }
    const SvdFactors factors = svd(matrix);
    text += "input: " + std::to_string(matrix.rows()) + "x" +
            std::to_string(matrix.cols()) + " matrix\n";
    text += "singular values:";
    for (double s : factors.singular_values) {
      std::snprintf(buf, sizeof buf, " %.12g", s);
      text += buf;
    }
    std::snprintf(buf, sizeof buf, "\nsvd reconstruction residual: %.3e\n",
                  frobenius_norm(factors.reconstruct() - matrix));
    text += buf;
    const ComplexVector sigma(factors.singular_values.begin(),
                              factors.singular_values.end());
    const auto dilation = build_dilated_diagonal(sigma, cfg.auto_rescale);
    std::snprintf(buf, sizeof buf,
                  "max singular value: %.12g  rescaled: %s  scale: %.12g\n",
                  dilation.report.max_singular_value,
                  dilation.report.was_rescaled ? "yes" : "no", dilation.diagonal.scale);
    text += buf;
    circuit = build_svd_circuit(factors, dilation.diagonal);
  }

  const Gate* diag_gate = nullptr;
  for (const auto& g : circuit.gates())
    if (g.kind == GateKind::kDiagonal) diag_gate = &g;
  report.diagonal_qubits = diag_gate->qubits.size();
  report.gate_bound = (std::size_t{1} << (report.diagonal_qubits + 1)) - 3;
  const auto exact = decompose_diagonal_on(diag_gate->phases, diag_gate->qubits, 0.0);
  report.exact_gate_count = exact.gate_count();
  text += "circuit width: " + std::to_string(circuit.width()) + " (ancilla q[" +
          std::to_string(circuit.ancilla_index()) + "])\n";
  text += "diagonal gates (exact): " + std::to_string(report.exact_gate_count) +
          " (bound " + std::to_string(report.gate_bound) + ")\n";
  const double epsilon = cfg.epsilon.value_or(0.0);
  if (cfg.epsilon) {
    const auto approx = decompose_diagonal_on(diag_gate->phases, diag_gate->qubits, epsilon);
    report.approx_gate_count = approx.gate_count();
    report.approx_phase_error_bound = approx.phase_error_bound;
    std::snprintf(buf, sizeof buf,
                  "diagonal gates (epsilon %.6g): %zu, phase error bound %.6g\n", epsilon,
                  approx.gate_count(), approx.phase_error_bound);
    text += buf;
  }

  const Circuit lowered = lower_circuit(circuit, epsilon);
  if (lowered.count(GateKind::kUnitary) == 0) {
    report.qasm = export_qasm(lowered);
    text += "qasm: " + std::to_string(lowered.gate_count()) + " gates\n";
  } else {
    text += "qasm: not written (dense U or V^dagger has no elementary decomposition here)\n";
  }
  report.summary = std::move(text);
  return report;
}

std::map<std::string, std::string> render_figures(const RunReport& report) {
  std::map<std::string, std::string> files;
  if (report.name == "dephasing") {
    const auto t = report.column("t");
    LinePlot coherence{"Coherence under dephasing", "t (ps)", "rho01", {}, false};
    coherence.series.push_back({"Re exact", t, report.column("re01_exact"), "#1f77b4", false});
    coherence.series.push_back({"Im exact", t, report.column("im01_exact"), "#d62728", false});
    coherence.series.push_back({"Re simulated", t, report.column("re01"), "#1f77b4", true});
    coherence.series.push_back({"Im simulated", t, report.column("im01"), "#d62728", true});
    files["fig3_coherence.svg"] = coherence.render_svg();

    std::vector<double> ex, ey;
    for (double v : report.column("re01_exact")) ex.push_back(2.0 * v);
    for (double v : report.column("im01_exact")) ey.push_back(-2.0 * v);
    LinePlot bloch{"Bloch trajectory (z = 0 plane)", "x", "y", {}, true};
    bloch.series.push_back({"exact", ex, ey, "#555555", false});
    bloch.series.push_back({"simulated", report.column("bloch_x"),
                            report.column("bloch_y"), "#d62728", true});
    files["fig4_bloch.svg"] = bloch.render_svg();
  } else if (report.name == "damping") {
    const auto t = report.column("t");
    LinePlot damping{"Amplitude damping", "t (ps)", "density matrix element", {}, false};
    damping.series.push_back({"rho00 exact", t, report.column("rho00_exact"), "#1f77b4", false});
    damping.series.push_back({"rho11 exact", t, report.column("rho11_exact"), "#d62728", false});
    damping.series.push_back({"Re rho01 exact", t, report.column("re01_exact"), "#2ca02c", false});
    damping.series.push_back({"rho00", t, report.column("rho00"), "#1f77b4", true});
    damping.series.push_back({"rho11", t, report.column("rho11"), "#d62728", true});
    damping.series.push_back({"Re rho01", t, report.column("re01"), "#2ca02c", true});
    files["fig5_damping.svg"] = damping.render_svg();
  }
  return files;
}

std::vector<std::string> write_report_files(const RunReport& report,
                                            const std::string& output_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + output_dir + "'");
  std::vector<std::string> written;
  auto write = [&](const std::string& name, const std::string& content) {
    const fs::path path = fs::path(output_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << content;
    written.push_back(path.string());
  };
  write(report.name + ".csv", report.to_csv());
  write("run_report.json", report.metadata.dump(2) + "\n");
  for (const auto& [name, svg] : render_figures(report)) write(name, svg);
  return written;
}

}  // namespace dilatia
