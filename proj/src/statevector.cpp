// Copyright 2026 The sqgenlab Authors
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

#include "sqgen/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "sqgen/errors.hpp"

namespace sqgen {

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

Statevector Statevector::zero(int n_qubits) {
  check_size(n_qubits);
  std::vector<cplx> amps(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  amps[0] = 1.0;
  return Statevector(n_qubits, std::move(amps));
}

Statevector Statevector::from_amplitudes(std::vector<cplx> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw SizeError("amplitude count " + std::to_string(dim) +
                    " is not a power of two");
  }
  const int n = std::countr_zero(dim);
  check_size(n);
  Statevector s(n, std::move(amplitudes));
  if (std::abs(s.norm_squared() - 1.0) > 1e-10) {
    throw ValidationError("amplitudes are not normalized");
  }
  return s;
}

double Statevector::norm_squared() const {
  return std::accumulate(amplitudes_.begin(), amplitudes_.end(), 0.0,
                         [](double acc, cplx a) { return acc + std::norm(a); });
}

void Statevector::apply(const GateOp& gate) {
  validate(gate, n_qubits_);
  std::uint64_t ctrl_mask = 0;
  std::uint64_t ctrl_value = 0;
  for (const auto& c : gate.controls) {
    const auto m = qubit_mask(c.qubit, n_qubits_);
    ctrl_mask |= m;
    if (c.on_one) ctrl_value |= m;
  }
  if (gate.kind == GateKind::GlobalPhase) {
    // with controls this is a phase on the matching basis states
    const cplx f = std::polar(1.0, gate.angle);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
      if ((i & ctrl_mask) == ctrl_value) amplitudes_[i] *= f;
    }
    return;
  }
  const std::uint64_t tmask = qubit_mask(gate.target, n_qubits_);
  const Eigen::Matrix2cd u = gate.target_matrix();
  const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);

  // Enumerate indices with the target bit cleared by inserting a zero at the
  // target position of a counter over the remaining bits.
  const std::uint64_t half = amplitudes_.size() >> 1;
  const std::uint64_t low = tmask - 1;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = ((k & ~low) << 1) | (k & low);
    if ((i0 & ctrl_mask) != ctrl_value) continue;
    const std::uint64_t i1 = i0 | tmask;
    const cplx a0 = amplitudes_[i0];
    const cplx a1 = amplitudes_[i1];
    amplitudes_[i0] = u00 * a0 + u01 * a1;
    amplitudes_[i1] = u10 * a0 + u11 * a1;
  }
}

void Statevector::apply(const CircuitSpec& circuit) {
  if (circuit.n_qubits != n_qubits_) {
    throw ShapeError("circuit on " + std::to_string(circuit.n_qubits) +
                     " qubits applied to a " + std::to_string(n_qubits_) +
                     "-qubit state");
  }
  for (const auto& g : circuit.gates) apply(g);
}

Statevector init_zero(int n_qubits) { return Statevector::zero(n_qubits); }

Statevector apply_gate(Statevector state, const GateOp& gate) {
  state.apply(gate);
  return state;
}

Statevector apply_circuit(Statevector state, const CircuitSpec& circuit) {
  state.apply(circuit);
  return state;
}

std::vector<double> probabilities(const Statevector& state) {
  std::vector<double> p(state.dimension());
  std::transform(state.amplitudes().begin(), state.amplitudes().end(), p.begin(),
                 [](cplx a) { return std::norm(a); });
  return p;
}

double marginal_probability(const Statevector& state, std::span<const int> qubits,
                            std::span<const int> outcome) {
  if (qubits.size() != outcome.size()) {
    throw ShapeError("outcome pattern has " + std::to_string(outcome.size()) +
                     " bits for " + std::to_string(qubits.size()) + " qubits");
  }
  const int n = state.n_qubits();
  std::uint64_t mask = 0;
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n) {
      throw IndexError("qubit " + std::to_string(qubits[i]) + " out of range");
    }
    const auto m = qubit_mask(qubits[i], n);
    mask |= m;
    if (outcome[i] != 0) value |= m;
  }
  double p = 0.0;
  const auto amps = state.amplitudes();
  if (mask == (amps.size() - 1)) return std::norm(amps[value]);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if ((i & mask) == value) p += std::norm(amps[i]);
  }
  return p;
}

Postselected postselect(const Statevector& state, int qubit, int outcome) {
  const int q[] = {qubit};
  const int b[] = {outcome};
  const double p = marginal_probability(state, q, b);
  if (p <= 0.0) {
    throw DegeneratePostselection("outcome " + std::to_string(outcome) +
                                  " on qubit " + std::to_string(qubit) +
                                  " has zero probability");
  }
  const auto mask = qubit_mask(qubit, state.n_qubits());
  const std::uint64_t value = outcome != 0 ? mask : 0;
  const double scale = 1.0 / std::sqrt(p);
  std::vector<cplx> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    amps[i] = ((i & mask) == value) ? amps[i] * scale : cplx{0.0, 0.0};
  }
  return {Statevector::from_amplitudes(std::move(amps)), p};
}

std::map<std::uint64_t, std::uint64_t> sample_counts(const Statevector& state,
                                                     std::uint64_t shots,
                                                     std::uint64_t seed) {
  if (shots == 0) throw SizeError("shots must be at least 1");
  const auto p = probabilities(state);
  std::vector<double> cdf(p.size());
  std::partial_sum(p.begin(), p.end(), cdf.begin());
  const double total = cdf.back();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, total);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uniform(rng);
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    auto idx = static_cast<std::uint64_t>(it - cdf.begin());
    if (it == cdf.end()) {
      // u landed on the rounding edge of the last bin
      idx = p.size() - 1;
      while (p[idx] == 0.0 && idx > 0) --idx;
    }
    ++counts[idx];
  }
  return counts;
}

cplx inner_product(const Statevector& a, const Statevector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ShapeError("states have different qubit counts");
  }
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double fidelity_pure(const Statevector& a, const Statevector& b) {
  return std::min(1.0, std::norm(inner_product(a, b)));
}

}  // namespace sqgen
