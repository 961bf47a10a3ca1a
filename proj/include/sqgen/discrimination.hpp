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

// Closed-form two-state discrimination in the plane spanned by two pure
// states. Used as a reference for circuit-level checks.

#pragma once

#include <cstdint>
#include <utility>

#include "sqgen/circuit.hpp"
#include "sqgen/statevector.hpp"

namespace sqgen::discrimination {

/// Two pure states and the angle between them, cos(beta) = |<r|g>|,
/// beta in [0, pi/2].
struct PlanePair {
  Statevector r;
  Statevector g;
  double beta = 0.0;
};

/// Computes beta. Throws ShapeError when the qubit counts differ.
PlanePair make_pair(Statevector r, Statevector g);

/**
 * Orthonormal basis {a, b} of span{r, g} that maximizes the success
 * probability, with |<r|a>|^2 = cos^2(pi/4 - beta/2) and
 * |<g|a>|^2 = cos^2(pi/4 + beta/2).
 *
 * The relative phase of g is absorbed first so the construction is real in
 * the basis {r, (g' - cos(beta) r) / sin(beta)}. Throws DegeneratePair when
 * beta is 0.
 */
std::pair<Statevector, Statevector> optimal_basis(const PlanePair& pair);

/// (1 + sin^2 beta) / 2. Throws ValidationError outside [0, pi/2].
double discrimination_probability(double beta);

/// |<psi|a>|^2 |<g|b>|^2 + |<psi|b>|^2 |<g|a>|^2. Throws BasisError unless
/// a and b are orthogonal within 1e-10.
double discrimination_probability_states(const Statevector& psi, const Statevector& g,
                                         const Statevector& a, const Statevector& b);

/**
 * Two-qubit measurement of the optimal strategy: qubit 0 holds r = |0>,
 * qubit 1 holds g = RY(-beta)|0>, and both are rotated so that a -> |0> and
 * b -> |1>. Success is outcome 01 or 10.
 */
CircuitSpec build_discrimination_circuit(double beta);

/// Success frequency of build_discrimination_circuit over `shots` samples.
/// Throws SizeError when shots is 0.
double sampled_discrimination_probability(double beta, std::uint64_t shots, std::uint64_t seed);

}  // namespace sqgen::discrimination
