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

#include "dilatia/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "dilatia/errors.hpp"
#include "dilatia/simulator.hpp"

namespace dilatia {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

class Fnv1a {
 public:
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      hash_ ^= (v >> (8 * i)) & 0xFFU;
      hash_ *= 0x100000001B3ULL;
    }
  }
  void add(double v) { add(std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v)); }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xCBF29CE484222325ULL;
};

}  // namespace

std::uint64_t fingerprint(std::span<const Gate> gates) {
  Fnv1a h;
  for (const auto& g : gates) {
    h.add(static_cast<std::uint64_t>(g.kind));
    h.add(static_cast<std::uint64_t>(g.qubits.size()));
    for (int q : g.qubits) h.add(static_cast<std::uint64_t>(q));
    h.add(g.angle);
    for (double p : g.phases) h.add(p);
    if (g.matrix) {
      for (const auto& z : g.matrix->data()) {
        h.add(z.real());
        h.add(z.imag());
      }
    }
  }
  return h.value();
}

std::uint64_t fingerprint(const Circuit& c) {
  Fnv1a h;
  h.add(static_cast<std::uint64_t>(c.width()));
  h.add(fingerprint(c.gates()));
  return h.value();
}

std::uint64_t ShotRun::count(const std::string& bits) const {
  const auto it = counts.find(bits);
  return it == counts.end() ? 0 : it->second;
}

std::string ShotRun::to_json() const {
  nlohmann::ordered_json j;
  j["shots"] = shots;
  j["seed"] = seed;
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [bits, n] : counts) j["counts"][bits] = n;
  return j.dump();
}

ShotRun ShotRun::from_json(const std::string& text) {
  ShotRun run;
  try {
    const auto j = nlohmann::json::parse(text);
    run.shots = j.at("shots").get<std::uint64_t>();
    run.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [bits, n] : j.at("counts").items()) {
      run.counts[bits] = n.get<std::uint64_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid counts JSON: ") + e.what());
  }
  std::uint64_t total = 0;
  for (const auto& [bits, n] : run.counts) total += n;
  if (total != run.shots) {
    throw ConfigError("counts sum to " + std::to_string(total) + ", expected " +
                      std::to_string(run.shots) + " shots");
  }
  return run;
}

std::string bitstring(std::size_t index, int qubit_count) {
  std::string out(static_cast<std::size_t>(qubit_count), '0');
  for (int q = 0; q < qubit_count; ++q) {
    if ((index >> q) & 1U) out[static_cast<std::size_t>(qubit_count - 1 - q)] = '1';
  }
  return out;
}

RealVector outcome_probabilities(const StateVector& s) {
  RealVector p(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) p[i] = std::norm(s[i]);
  return p;
}

std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities,
                                         std::uint64_t shots, Rng& rng) {
  RealVector cdf(probabilities.size());
  double running = 0.0;
  for (std::size_t i = 0; i < cdf.size(); ++i) {
    running += std::max(probabilities[i], 0.0);
    cdf[i] = running;
  }
  if (!(running > 0.0)) throw DomainError("outcome distribution has zero mass");
  std::vector<std::uint64_t> counts(probabilities.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    // Skip trailing zero-probability outcomes if u lands on the total.
    if (idx >= cdf.size()) idx = cdf.size() - 1;
    while (probabilities[idx] <= 0.0 && idx > 0) --idx;
    ++counts[idx];
  }
  return counts;
}

namespace {

ShotRun collect(const StateVector& s, std::uint64_t shots, std::uint64_t seed,
                std::uint64_t stream) {
  if (shots == 0) throw ArgumentError("shots must be at least 1");
  Rng rng(derive_seed(seed, stream));
  const auto counts = sample_counts(outcome_probabilities(s), shots, rng);
  ShotRun run;
  run.shots = shots;
  run.seed = seed;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) run.counts[bitstring(i, s.qubit_count())] = counts[i];
  }
  return run;
}

}  // namespace

ShotRun sample_measurements(const StateVector& s, std::uint64_t shots,
                            std::uint64_t seed,
                            std::span<const Gate> basis_changes) {
  StateVector rotated = s;
  apply_gates(basis_changes, rotated.mutable_amplitudes());
  return collect(rotated, shots, seed, fingerprint(basis_changes));
}

ShotRun sample_circuit(const Circuit& c, std::uint64_t shots, std::uint64_t seed) {
  const StateVector s = run_statevector(c, StateVector::zero_state(c.width()));
  return collect(s, shots, seed, fingerprint(c));
}

}  // namespace dilatia
