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


// dilatia command line driver.
//
//   dilatia prep --config prep.json --shots 1024 --out results/
//   dilatia decompose --input k1.txt --epsilon 1e-3 --qasm

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dilatia/errors.hpp"
#include "dilatia/experiments.hpp"
#include "dilatia/matrix_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitContraction = 4;

int exit_code_for(const dilatia::Error& e) {
  switch (e.kind()) {
    case dilatia::ErrorKind::kConfig:
    case dilatia::ErrorKind::kParse:
    case dilatia::ErrorKind::kArgument:
      return kExitConfig;
    case dilatia::ErrorKind::kContraction:
      return kExitContraction;
    default:
      return kExitNumeric;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dilatia::ConfigError("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Overrides {
  std::string config;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> shots;
  bool exact = false;
  std::string out;
  double epsilon = 0.0;
  bool qasm = false;
  bool auto_rescale = false;
  std::string input;
};

dilatia::ExperimentConfig load_config(dilatia::Experiment e, const Overrides& o,
                                      const CLI::App& sub) {
  auto cfg = o.config.empty() ? dilatia::ExperimentConfig::defaults(e)
                              : dilatia::ExperimentConfig::from_json(slurp(o.config), e);
  if (sub.count("--seed")) cfg.seed = o.seed;
  if (sub.count("--shots")) cfg.shots = o.shots;
  if (o.exact) cfg.exact = true;
  if (sub.count("--out")) cfg.output_dir = o.out;
  if (sub.get_option_no_throw("--epsilon") && sub.count("--epsilon")) cfg.epsilon = o.epsilon;
  if (o.qasm) cfg.qasm = true;
  if (o.auto_rescale) cfg.auto_rescale = true;
  if (sub.get_option_no_throw("--input") && sub.count("--input")) cfg.input = o.input;
  cfg.validate();
  return cfg;
}

int run(dilatia::Experiment e, const dilatia::ExperimentConfig& cfg) {
  using dilatia::Experiment;
  if (e == Experiment::kDecompose) {
    if (cfg.input.empty()) throw dilatia::ConfigError("decompose needs --input <matrix file>");
    const auto matrix = dilatia::read_matrix_file(cfg.input);
    const auto report = dilatia::run_decompose(cfg, matrix);
    std::cout << report.summary;
    if (report.qasm) {
      std::filesystem::create_directories(cfg.output_dir);
      const auto path = std::filesystem::path(cfg.output_dir) / "circuit.qasm";
      std::ofstream(path, std::ios::binary) << *report.qasm;
      std::cout << "wrote " << path.string() << "\n";
      if (cfg.qasm) std::cout << *report.qasm;
    }
    return kExitOk;
  }

  dilatia::RunReport report;
  switch (e) {
    case Experiment::kPrep: report = dilatia::run_prep_experiment(cfg); break;
    case Experiment::kDephasing: report = dilatia::run_dephasing(cfg); break;
    case Experiment::kDamping: report = dilatia::run_damping(cfg); break;
    case Experiment::kDecompose: break;
  }
  for (const auto& path : dilatia::write_report_files(report, cfg.output_dir)) {
    std::cout << "wrote " << path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-unitary operators as dilated quantum circuits"};
  app.set_version_flag("--version", std::string(dilatia::kVersion));
  app.require_subcommand(1);

  Overrides o;
  std::vector<std::pair<CLI::App*, dilatia::Experiment>> subs;
  const std::pair<const char*, const char*> commands[] = {
      {"prep", "tomography of random sub-normalized state preparations"},
      {"dephasing", "qubit coherence under a dephasing channel"},
      {"damping", "mixed state under zero-temperature amplitude damping"},
      {"decompose", "build and count gates for a matrix or diagonal"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", o.config, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--shots", o.shots, "shot counts (repeatable)")->delimiter(',');
    sub->add_flag("--exact", o.exact, "exact probabilities instead of sampling");
    sub->add_option("--out", o.out, "output directory");
    if (std::string(name) == "decompose") {
      sub->add_option("--input", o.input, "matrix text file");
      sub->add_option("--epsilon", o.epsilon, "drop rotations with |angle/2| below this");
      sub->add_flag("--qasm", o.qasm, "echo the OpenQASM output");
      sub->add_flag("--auto-rescale", o.auto_rescale,
                    "divide by the largest singular value when above one");
    }
    subs.emplace_back(sub, dilatia::parse_experiment(name));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  for (const auto& [sub, experiment] : subs) {
    if (!sub->parsed()) continue;
    try {
      return run(experiment, load_config(experiment, o, *sub));
    } catch (const dilatia::Error& e) {
      std::fprintf(stderr, "dilatia: %s\n", e.what());
      return exit_code_for(e);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "dilatia: %s\n", e.what());
      return kExitNumeric;
    }
  }
  return kExitConfig;
}
