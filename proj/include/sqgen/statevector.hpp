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

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sqgen/circuit.hpp"

namespace sqgen {

/// Largest register the simulator accepts.
inline constexpr int kMaxQubits = 24;

/**
 * Pure state over `n_qubits` qubits.
 *
 * Qubit 0 is the most significant bit of the basis index, so the top line of
 * a circuit diagram is the leftmost character of a bit pattern.
 */
class Statevector {
 public:
  /// |0...0>. Throws SizeError outside [1, kMaxQubits].
  static Statevector zero(int n_qubits);

  /// Takes ownership of the amplitudes; the length must be a power of two
  /// and the norm must be 1 within 1e-10.
  static Statevector from_amplitudes(std::vector<cplx> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  cplx operator[](std::size_t i) const { return amplitudes_[i]; }

  void apply(const GateOp& gate);
  void apply(const CircuitSpec& circuit);

  double norm_squared() const;

 private:
  Statevector(int n, std::vector<cplx> amps)
      : n_qubits_(n), amplitudes_(std::move(amps)) {}

  int n_qubits_ = 0;
  std::vector<cplx> amplitudes_;
};

/// Bit mask of qubit `q` in the basis index of an `n`-qubit register.
inline std::uint64_t qubit_mask(int q, int n) {
  return std::uint64_t{1} << (n - 1 - q);
}

Statevector init_zero(int n_qubits);
Statevector apply_gate(Statevector state, const GateOp& gate);
/// Throws ShapeError when the circuit and state sizes differ.
Statevector apply_circuit(Statevector state, const CircuitSpec& circuit);

std::vector<double> probabilities(const Statevector& state);

/// Probability that Z measurements of `qubits` give `outcome` (one bit per
/// listed qubit, in the same order).
double marginal_probability(const Statevector& state, std::span<const int> qubits,
                            std::span<const int> outcome);

struct Postselected {
  Statevector state;
  double probability = 0.0;
};

/// Projects `qubit` onto `outcome` and renormalizes. The register keeps its
/// size; the measured qubit is left in |outcome>.
Postselected postselect(const Statevector& state, int qubit, int outcome);

/// Basis index -> count. Inverse-CDF sampling driven by a 64-bit Mersenne
/// twister seeded with `seed`.
std::map<std::uint64_t, std::uint64_t> sample_counts(const Statevector& state,
                                                     std::uint64_t shots,
                                                     std::uint64_t seed);

/// |<a|b>|^2.
double fidelity_pure(const Statevector& a, const Statevector& b);

cplx inner_product(const Statevector& a, const Statevector& b);

}  // namespace sqgen
