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
#include <random>
#include <string>
#include <vector>

#include "dilatia/circuit.hpp"
#include "dilatia/numerics.hpp"

namespace dilatia {

/// Deterministic generator: std::mt19937_64 (fully specified by the C++
/// standard) with hand-rolled conversions, so streams are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform();
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// SplitMix64 finalizer over (seed, tag); used to derive independent streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

/// FNV-1a hash of a gate list (kinds, qubits and the bit patterns of all
/// numeric payloads).
std::uint64_t fingerprint(std::span<const Gate> gates);
std::uint64_t fingerprint(const Circuit& c);

struct ShotRun {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  /// Bitstrings are written most significant qubit first.
  std::map<std::string, std::uint64_t> counts;

  std::uint64_t count(const std::string& bits) const;
  /// {"shots": n, "seed": s, "counts": {"bitstring": n, ...}}
  std::string to_json() const;
  static ShotRun from_json(const std::string& text);
};

std::string bitstring(std::size_t index, int qubit_count);

/// |amplitude|^2 per basis index.
RealVector outcome_probabilities(const StateVector& s);

/// Draws `shots` outcomes from `probabilities` by inverse-CDF lookup.
std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities,
                                         std::uint64_t shots, Rng& rng);

/// Applies `basis_changes` to a copy of `s` and samples all qubits. The
/// stream depends only on (seed, basis_changes).
ShotRun sample_measurements(const StateVector& s, std::uint64_t shots,
                            std::uint64_t seed,
                            std::span<const Gate> basis_changes);

/// Executes `c` on |0...0> and samples. The stream depends on (seed, c).
ShotRun sample_circuit(const Circuit& c, std::uint64_t shots, std::uint64_t seed);

}  // namespace dilatia
