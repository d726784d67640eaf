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


// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "dilatia/channels.hpp"
#include "dilatia/circuit.hpp"
#include "dilatia/dilation.hpp"
#include "dilatia/experiments.hpp"
#include "dilatia/simulator.hpp"
#include "dilatia/synthesis.hpp"
#include "oracle.hpp"

using namespace dilatia;
using dilatia::dtest::EMatrix;
using dilatia::dtest::EVector;
using dilatia::dtest::from_eigen;
using dilatia::dtest::Gen;
using dilatia::dtest::to_eigen;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const char* what, double value) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s=%.3g", detail.empty() ? "" : " ", what, value);
    detail += buf;
    if (!ok) {
      pass = false;
      detail += "(!)";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome svd_round_trip() {
  const auto start = Clock::now();
  Gen gen(20260101);
  double worst_rec = 0.0, worst_unit = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 15;
    const EMatrix m = gen.matrix(n);
    const auto f = svd(from_eigen(m));
    const EMatrix u = to_eigen(f.u), vd = to_eigen(f.v_dagger);
    Eigen::VectorXd s(n);
    for (int k = 0; k < n; ++k) s(k) = f.singular_values[k];
    worst_rec = std::max(worst_rec, (u * s.cast<Complex>().asDiagonal() * vd - m).norm());
    worst_unit = std::max({worst_unit, (u.adjoint() * u - EMatrix::Identity(n, n)).norm(),
                           (vd * vd.adjoint() - EMatrix::Identity(n, n)).norm()});
  }
  Outcome o;
  o.require(worst_rec <= 1e-10, "max_residual", worst_rec);
  o.require(worst_unit <= 1e-12, "max_unitarity", worst_unit);
  const double t = seconds_since(start);
  o.require(t < 10.0, "seconds", t);
  return o;
}

Outcome dilation_unitarity() {
  Gen gen(20260102);
  double worst_unit = 0.0, worst_sum = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = gen.disk_entries(1 + trial % 32);
    const auto r = build_dilated_diagonal(d, false);
    const EMatrix u = to_eigen(r.diagonal.unitary());
    worst_unit = std::max(worst_unit,
                          (u.adjoint() * u - EMatrix::Identity(u.rows(), u.cols())).norm());
    for (std::size_t k = 0; k < d.size(); ++k) {
      worst_sum = std::max(
          worst_sum, std::abs((r.diagonal.sigma_plus[k] + r.diagonal.sigma_minus[k]) / 2.0 - d[k]));
    }
  }
  Outcome o;
  o.require(worst_unit <= 1e-12, "max_unitarity", worst_unit);
  o.require(worst_sum <= 1e-12, "max_recombination", worst_sum);
  return o;
}

Outcome end_to_end() {
  const auto start = Clock::now();
  Gen gen(20260103);
  double worst_out = 0.0, worst_prob = 0.0, worst_oracle = 0.0;
  const int sizes[] = {2, 4, 8};
  for (int trial = 0; trial < 500; ++trial) {
    const int n = sizes[trial % 3];
    const EMatrix m = gen.contraction(n);
    const EVector psi = gen.state(n);
    const auto r = apply_nonunitary(from_eigen(m), ComplexVector(psi.data(), psi.data() + n), false);
    const EVector direct = m * psi;
    worst_out = std::max(worst_out, dtest::max_diff(r.output, direct));
    worst_prob = std::max(worst_prob, std::abs(r.probability - direct.squaredNorm()));
    EVector lifted = EVector::Zero(2 * n);
    lifted.head(n) = psi;
    const EVector oracle = (dtest::oracle_sznagy(m) * lifted).head(n);
    worst_oracle = std::max(worst_oracle, dtest::phase_free_distance(to_eigen(r.output), oracle));
  }
  Outcome o;
  o.require(worst_out <= 1e-10, "max_output_error", worst_out);
  o.require(worst_prob <= 1e-10, "max_probability_error", worst_prob);
  o.require(worst_oracle <= 1e-10, "max_sznagy_gap", worst_oracle);
  const double t = seconds_since(start);
  o.require(t < 30.0, "seconds", t);
  return o;
}

Outcome diagonal_synthesis() {
  Gen gen(20260104);
  std::size_t over_bound = 0;
  double worst = 0.0;
  bool identical = true;
  for (int d = 1; d <= 6; ++d) {
    const std::size_t bound = (std::size_t{1} << (d + 1)) - 3;
    for (int trial = 0; trial < 200; ++trial) {
      const auto theta = gen.phases(std::size_t{1} << d);
      const auto exact = decompose_diagonal(theta);
      const auto approx = decompose_diagonal_approx(theta, 0.0);
      identical = identical && approx.gates == exact;
      if (approx.gate_count() > bound) ++over_bound;
      const auto diag = dtest::oracle_phase_circuit_diagonal(exact, d);
      double err = 0.0;
      for (std::size_t x = 0; x < diag.size(); ++x) err += std::norm(diag[x] - std::polar(1.0, theta[x]));
      worst = std::max(worst, std::sqrt(err));
    }
  }
  Outcome o;
  o.require(over_bound == 0, "over_bound", static_cast<double>(over_bound));
  o.require(worst <= 1e-10, "max_reconstruction", worst);
  o.require(identical, "eps0_identical", identical ? 1.0 : 0.0);
  return o;
}

EMatrix oracle_operator_sum(const KrausChannel& ch, const EMatrix& rho) {
  EMatrix out = EMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : ch.operators) out += to_eigen(k) * rho * to_eigen(k).adjoint();
  return out;
}

Outcome dephasing() {
  auto cfg = ExperimentConfig::defaults(Experiment::kDephasing);
  cfg.exact = true;
  const double s = std::numbers::sqrt2 / 2;
  EMatrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  const Ensemble ens{{{1.0, {s, s}}}};
  double worst_oracle = 0.0, worst_pop = 0.0;
  for (double t : cfg.time_grid()) {
    const auto ch = dephasing_channel(cfg.theta, cfg.lambda0, cfg.lambda1, t);
    const auto rho = evolve_on_simulator(ch, ens, ExactMode{});
    worst_oracle = std::max(worst_oracle, (to_eigen(rho.matrix()) - oracle_operator_sum(ch, plus)).norm());
    worst_pop = std::max({worst_pop, std::abs(rho(0, 0).real() - 0.5), std::abs(rho(1, 1).real() - 0.5)});
  }
  double worst_z = 0.0;
  for (double z : run_dephasing(cfg).column("bloch_z")) worst_z = std::max(worst_z, std::abs(z));
  Outcome o;
  o.require(worst_oracle <= 1e-10, "max_oracle_gap", worst_oracle);
  o.require(worst_pop <= 1e-10, "max_population_drift", worst_pop);
  o.require(worst_z <= 1e-10, "max_bloch_z", worst_z);
  return o;
}

Outcome damping() {
  const auto start = Clock::now();
  auto cfg = ExperimentConfig::defaults(Experiment::kDamping);
  cfg.exact = true;
  const auto exact = run_damping(cfg);
  const auto t = exact.column("t");
  double worst_exact = 0.0, worst_trace = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    worst_exact = std::max({worst_exact,
                            std::abs(exact.column("rho11")[k] - 0.75 * std::exp(-cfg.gamma * t[k])),
                            std::abs(exact.column("re01")[k] - 0.25 * std::exp(-cfg.gamma * t[k] / 2)),
                            std::abs(exact.column("im01")[k])});
    worst_trace = std::max(worst_trace, std::abs(exact.column("rho00")[k] + exact.column("rho11")[k] - 1.0));
  }
  const auto shots = run_damping(ExperimentConfig::defaults(Experiment::kDamping));
  double worst_shots = 0.0;
  for (const char* col : {"rho00", "rho11", "re01", "im01"}) {
    const auto sim = shots.column(col);
    const auto ref = shots.column(std::string(col) + "_exact");
    for (std::size_t k = 0; k < sim.size(); ++k) worst_shots = std::max(worst_shots, std::abs(sim[k] - ref[k]));
  }
  Outcome o;
  o.require(worst_exact <= 1e-9, "max_exact_error", worst_exact);
  o.require(worst_trace <= 1e-10, "max_trace_error", worst_trace);
  o.require(worst_shots <= 0.03, "max_shot_deviation", worst_shots);
  const double secs = seconds_since(start);
  o.require(secs < 120.0, "seconds", secs);
  return o;
}

Outcome state_prep() {
  const auto start = Clock::now();
  const auto cfg = ExperimentConfig::defaults(Experiment::kPrep);
  const auto report = run_prep_experiment(cfg);
  const auto shots = report.column("shots");
  const auto fid = report.column("mean_fidelity");
  const auto dist = report.column("mean_distance");
  auto at = [&](double n, const std::vector<double>& col) {
    for (std::size_t k = 0; k < shots.size(); ++k)
      if (shots[k] == n) return col[k];
    return std::nan("");
  };
  bool monotone = true;
  for (std::size_t k = 1; k < shots.size(); ++k)
    monotone = monotone && dist[k] <= dist[k - 1] && fid[k] >= fid[k - 1];
  const double norm = report.metadata["mean_state_norm"].get<double>();
  Outcome o;
  o.require(at(1024, fid) >= 0.98, "fidelity_2^10", at(1024, fid));
  o.require(at(16384, fid) >= 0.995, "fidelity_2^14", at(16384, fid));
  o.require(at(16384, dist) <= 0.06, "distance_2^14", at(16384, dist));
  o.require(monotone, "monotone", monotone ? 1.0 : 0.0);
  o.require(norm >= 0.60 && norm <= 0.75, "mean_norm", norm);
  const double secs = seconds_since(start);
  o.require(secs < 300.0, "seconds", secs);
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome reproducibility() {
  const auto root = std::filesystem::temp_directory_path() / "dilatia_acceptance";
  std::filesystem::remove_all(root);
  std::size_t compared = 0, mismatched = 0;
  for (Experiment e : {Experiment::kPrep, Experiment::kDephasing, Experiment::kDamping}) {
    auto cfg = ExperimentConfig::defaults(e);
    if (e == Experiment::kPrep) cfg.shots = {256, 1024};
    std::vector<std::string> runs[2];
    for (int pass = 0; pass < 2; ++pass) {
      const RunReport report = e == Experiment::kPrep        ? run_prep_experiment(cfg)
                               : e == Experiment::kDephasing ? run_dephasing(cfg)
                                                             : run_damping(cfg);
      write_report_files(report, (root / std::to_string(pass)).string());
      runs[pass].push_back(slurp(root / std::to_string(pass) / (report.name + ".csv")));
    }
    ++compared;
    if (runs[0] != runs[1] || runs[0].front().empty()) ++mismatched;
  }
  std::filesystem::remove_all(root);
  Outcome o;
  o.require(mismatched == 0, "mismatched_csv", static_cast<double>(mismatched));
  o.require(compared == 3, "experiments", static_cast<double>(compared));
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 svd round trip", svd_round_trip},
      {"2 dilation unitarity and recombination", dilation_unitarity},
      {"3 end-to-end non-unitary application", end_to_end},
      {"4 diagonal synthesis", diagonal_synthesis},
      {"5 dephasing dynamics", dephasing},
      {"6 amplitude damping", damping},
      {"7 state-prep study", state_prep},
      {"8 reproducibility", reproducibility},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
