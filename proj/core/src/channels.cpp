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

#include "dilatia/channels.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "dilatia/circuit.hpp"
#include "dilatia/errors.hpp"
#include "dilatia/sampling.hpp"
#include "dilatia/simulator.hpp"

namespace dilatia {

namespace {

constexpr double kSimplexTolerance = 1e-12;
constexpr double kEnsembleTolerance = 1e-10;
constexpr double kOperatorContractionSlack = 1e-10;
constexpr std::size_t kMaxExactDimension = 16;

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops, std::string name,
                           std::vector<std::optional<SvdFactors>> factors)
    : operators(std::move(ops)),
      label(std::move(name)),
      factorizations(std::move(factors)) {
  if (operators.empty()) throw DimensionError("channel needs at least one operator");
  const std::size_t r = operators.front().rows();
  for (const auto& k : operators) {
    if (!k.is_square() || k.rows() != r) {
      throw DimensionError("Kraus operators must share one square dimension");
    }
  }
  if (factorizations.empty()) factorizations.resize(operators.size());
  if (factorizations.size() != operators.size()) {
    throw DimensionError("factorization list does not match operator list");
  }
}

SvdFactors KrausChannel::factors(std::size_t i) const {
  if (factorizations.at(i)) return *factorizations[i];
  return svd(operators.at(i));
}

ComplexMatrix Ensemble::reconstruct() const {
  if (members.empty()) throw DimensionError("empty ensemble");
  const std::size_t n = members.front().state.size();
  ComplexMatrix rho(n, n);
  for (const auto& m : members) {
    if (m.state.size() != n) throw DimensionError("ensemble states differ in length");
    rho += Complex{m.weight, 0.0} * ComplexMatrix::outer(m.state, m.state);
  }
  return rho;
}

double Ensemble::total_weight() const {
  double w = 0.0;
  for (const auto& m : members) w += m.weight;
  return w;
}

KrausChannel dephasing_channel(double theta, double lambda0, double lambda1,
                               double t) {
  if (!(lambda0 >= 0.0) || !(lambda1 >= 0.0) ||
      std::abs(lambda0 + lambda1 - 1.0) > kSimplexTolerance) {
    throw ArgumentError("dephasing weights must be non-negative and sum to 1");
  }
  if (!std::isfinite(theta) || !std::isfinite(t)) {
    throw ArgumentError("dephasing angle and time must be finite");
  }
  const Complex forward = std::polar(1.0, theta * t);
  const Complex backward = std::polar(1.0, -theta * t);
  const double a = std::sqrt(lambda0), b = std::sqrt(lambda1);
  return KrausChannel({ComplexMatrix{{a * forward, 0.0}, {0.0, a * backward}},
                       ComplexMatrix{{b * backward, 0.0}, {0.0, b * forward}}},
                      "dephasing");
}

KrausChannel amplitude_damping_channel(double gamma, double t) {
  if (!(gamma >= 0.0) || !(t >= 0.0) || !std::isfinite(gamma * t)) {
    throw ArgumentError("damping rate and time must be non-negative");
  }
  const double decay = std::exp(-gamma * t);
  const double keep = std::sqrt(decay);
  const double jump = std::sqrt(1.0 - decay);
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix k0{{1.0, 0.0}, {0.0, keep}};
  ComplexMatrix k1{{0.0, jump}, {0.0, 0.0}};
  SvdFactors f0{id, {1.0, keep}, id};
  SvdFactors f1{id, {jump, 0.0}, pauli_x()};
  return KrausChannel({std::move(k0), std::move(k1)}, "damping",
                      {std::move(f0), std::move(f1)});
}

DensityMatrix operator_sum_evolve(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dimension() != ch.dimension()) {
    throw DimensionError("channel dimension " + std::to_string(ch.dimension()) +
                         " does not match state dimension " +
                         std::to_string(rho.dimension()));
  }
  ComplexMatrix out(rho.dimension(), rho.dimension());
  for (const auto& k : ch.operators) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(out.hermitian_part());
}

bool ChannelContractionReport::all_contractions() const {
  for (const auto& r : operators)
    if (r.max_singular_value > 1.0 + kOperatorContractionSlack) return false;
  return true;
}

ChannelContractionReport check_contraction(const KrausChannel& ch) {
  ChannelContractionReport report;
  const std::size_t n = ch.dimension();
  ComplexMatrix outer_sum(n, n), inner_sum(n, n);
  for (std::size_t i = 0; i < ch.operators.size(); ++i) {
    const auto& k = ch.operators[i];
    const double largest = svd(k).singular_values.front();
    ContractionReport r;
    r.max_singular_value = largest;
    r.was_rescaled = largest > 1.0 + kContractionSlack;
    r.shifted_operator_norm_bound = r.was_rescaled ? 1.0 : largest;
    report.operators.push_back(r);
    outer_sum += k * k.adjoint();
    inner_sum += k.adjoint() * k;
  }
  const ComplexMatrix id = ComplexMatrix::identity(n);
  report.outer_completeness_residual = frobenius_norm(outer_sum - id);
  report.inner_completeness_residual = frobenius_norm(inner_sum - id);
  return report;
}

Ensemble ensemble_decompose(const DensityMatrix& rho) {
  const auto e = hermitian_eig(rho.matrix());
  Ensemble ens;
  // Eigenvalues below this are round-off of a rank-deficient state.
  const double cut = 1e-13 * std::max(1.0, std::abs(rho.trace()));
  for (std::size_t j = 0; j < e.eigenvalues.size(); ++j) {
    if (e.eigenvalues[j] <= cut) continue;
    const auto col = e.eigenvectors.col(j);
    ens.members.push_back({e.eigenvalues[j], ComplexVector(col.begin(), col.end())});
  }
  return ens;
}

Ensemble validate_ensemble(const DensityMatrix& rho, Ensemble supplied) {
  if (supplied.members.empty()) throw DomainError("ensemble is empty");
  for (const auto& m : supplied.members) {
    if (!(m.weight > 0.0)) throw DomainError("ensemble weights must be positive");
    if (m.state.size() != rho.dimension()) {
      throw DimensionError("ensemble state length does not match rho");
    }
    if (std::abs(vector_norm(m.state) - 1.0) > kEnsembleTolerance) {
      throw DomainError("ensemble states must be normalized");
    }
  }
  const double residual = frobenius_norm(supplied.reconstruct() - rho.matrix());
  if (residual > kEnsembleTolerance) {
    throw DomainError("ensemble does not reconstruct rho (residual " +
                      std::to_string(residual) + ")");
  }
  return supplied;
}

Ensemble damping_initial_ensemble() {
  const double r = std::numbers::sqrt2 / 2.0;
  return Ensemble{{{0.5, {0.0, 1.0}}, {0.5, {r, r}}}};
}

DensityMatrix damping_initial_state() {
  return DensityMatrix(ComplexMatrix{{0.25, 0.25}, {0.25, 0.75}});
}

Gate state_preparation_gate(std::span<const Complex> psi) {
  if (psi.size() < 2 || !is_power_of_two(psi.size())) {
    throw DimensionError("state preparation needs a power-of-two length >= 2");
  }
  if (std::abs(vector_norm(psi) - 1.0) > kEnsembleTolerance) {
    throw DomainError("state to prepare must be normalized");
  }
  ComplexMatrix partial(psi.size(), psi.size());
  std::copy(psi.begin(), psi.end(), partial.col(0).begin());
  std::vector<int> qubits;
  for (int q = 0; q < exact_log2(psi.size()); ++q) qubits.push_back(q);
  return Gate::unitary(std::move(qubits), complete_orthonormal_basis(partial, 1));
}

Circuit kraus_branch_circuit(const SvdFactors& factors, std::span<const Complex> psi) {
  if (psi.size() != factors.u.rows()) {
    throw DimensionError("state length does not match operator dimension");
  }
  const ComplexVector sigma(factors.singular_values.begin(),
                            factors.singular_values.end());
  const auto dilation = build_dilated_diagonal(sigma, /*auto_rescale=*/false);
  const Circuit body = build_svd_circuit(factors, dilation.diagonal);

  ComplexVector padded(psi.begin(), psi.end());
  padded.resize(dilation.diagonal.size(), Complex{0.0, 0.0});
  Circuit c(body.width());
  if (padded.size() >= 2) {
    c.append(state_preparation_gate(padded));
  } else {
    c.append(Gate::global_phase(std::arg(padded[0])));
  }
  c.append(body);
  return c;
}

DensityMatrix evolve_on_simulator(const KrausChannel& ch, const Ensemble& ens,
                                  const SamplingMode& mode) {
  const std::size_t n = ch.dimension();
  for (const auto& m : ens.members) {
    if (m.state.size() != n) {
      throw DimensionError("ensemble state length does not match channel");
    }
  }
  const auto* shots = std::get_if<ShotMode>(&mode);
  if (shots && n != 2) {
    throw DimensionError("shot-mode evolution supports single-qubit channels only");
  }
  if (!shots && n > kMaxExactDimension) {
    throw SizeError("exact-mode evolution supports dimension <= 16");
  }

  ComplexMatrix acc(n, n);
  for (std::size_t i = 0; i < ch.operators.size(); ++i) {
    const SvdFactors factors = ch.factors(i);
    for (std::size_t j = 0; j < ens.members.size(); ++j) {
      const auto& member = ens.members[j];
      const Circuit circuit = kraus_branch_circuit(factors, member.state);
      if (!shots) {
        const StateVector final_state =
            run_statevector(circuit, StateVector::zero_state(circuit.width()));
        Branch b = postselect_ancilla(final_state, circuit.ancilla_index());
        b.amplitudes.resize(n);
        acc += Complex{member.weight, 0.0} *
               ComplexMatrix::outer(b.amplitudes, b.amplitudes);
        continue;
      }
      const ShotMode pair_mode{shots->shots,
                               derive_seed(shots->seed, (i << 32) | j)};
      const PauliStatistics stats = measure_pauli_statistics(circuit, pair_mode);
      double successes = 0.0;
      for (const auto& s : stats) successes += s.success;
      // No ancilla-0 outcome at all: the pooled norm estimate is exactly 0.
      if (successes == 0.0) continue;
      const auto estimate = estimate_from_statistics(stats, 1.0, shots->shots);
      acc += Complex{member.weight, 0.0} * estimate.rho.matrix();
    }
  }
  return DensityMatrix(acc.hermitian_part());
}

namespace {

ComplexMatrix matrix_from_json(const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty()) throw ConfigError("Kraus matrix must be a non-empty array");
  ComplexMatrix m(rows.size(), rows.at(0).size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw ConfigError("ragged Kraus matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& entry = rows[r][c];
      if (!entry.is_array() || entry.size() != 2) {
        throw ConfigError("Kraus entries must be [re, im] pairs");
      }
      m(r, c) = {entry[0].get<double>(), entry[1].get<double>()};
    }
  }
  return m;
}

}  // namespace

KrausChannel channel_from_json(const std::string& text, double t) {
  try {
    const auto j = nlohmann::json::parse(text);
    const std::string type = j.at("type").get<std::string>();
    const nlohmann::json params = j.value("params", nlohmann::json::object());
    const double time = params.value("t", t);
    if (type == "dephasing") {
      return dephasing_channel(params.value("theta", 0.5), params.value("lambda0", 0.7),
                               params.value("lambda1", 0.3), time);
    }
    if (type == "damping") {
      return amplitude_damping_channel(params.value("gamma", 0.15), time);
    }
    if (type == "custom") {
      std::vector<ComplexMatrix> ops;
      for (const auto& k : j.at("kraus")) ops.push_back(matrix_from_json(k));
      return KrausChannel(std::move(ops), "custom");
    }
    throw ConfigError("unknown channel type '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid channel JSON: ") + e.what());
  }
}

std::string channel_to_json(const KrausChannel& ch) {
  nlohmann::ordered_json j;
  j["type"] = "custom";
  j["params"] = nlohmann::ordered_json::object();
  j["kraus"] = nlohmann::ordered_json::array();
  for (const auto& k : ch.operators) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < k.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < k.cols(); ++c) row.push_back({k(r, c).real(), k(r, c).imag()});
      rows.push_back(row);
    }
    j["kraus"].push_back(rows);
  }
  return j.dump();
}

}  // namespace dilatia
