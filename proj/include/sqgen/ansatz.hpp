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

#include <cstddef>
#include <span>
#include <vector>

#include "sqgen/circuit.hpp"

namespace sqgen::ansatz {

enum class Structure {
  /// For each qubit k: uniformly controlled RZ, RY, RZ on qubit k with
  /// qubits 0..k-1 as controls, followed by one global phase.
  FullCascade,
  /// Independent RZ RY RZ on every qubit, followed by one global phase.
  SingleQubitZyz,
};

struct AnsatzSpec {
  int n_qubits = 1;
  Structure structure = Structure::FullCascade;
};

using AnsatzParams = std::vector<double>;

/// FullCascade: 3 (2^n - 1) + 1. SingleQubitZyz: 3 n + 1.
std::size_t param_count(const AnsatzSpec& spec);

/// Index of the global-phase angle within the parameter vector.
std::size_t global_phase_index(const AnsatzSpec& spec);

/// Parameters whose only effect on a computational-basis input is a phase:
/// the global phase and every leading RZ that still sees a basis state.
/// Costs that only depend on U|b> up to phase are flat along them.
std::vector<std::size_t> basis_input_phase_indices(const AnsatzSpec& spec);

/**
 * Emits the parameterized block on qubits [offset, offset + n).
 *
 * Uniformly controlled rotations are emitted as one multi-controlled rotation
 * per control pattern. Every gate is tagged with ParamTerm{param_base + i, 1}
 * so gradients can be traced back to the flat parameter vector of a larger
 * model. Throws ShapeError when the parameter count does not match.
 */
CircuitSpec build_unitary_block(const AnsatzSpec& spec, std::span<const double> params,
                                int total_qubits, int offset = 0,
                                std::size_t param_base = 0);

/// Same block on exactly spec.n_qubits qubits.
CircuitSpec build_unitary_block(const AnsatzSpec& spec, std::span<const double> params);

/**
 * Rewrites a (multi-)controlled gate into single-qubit rotations and CNOTs.
 *
 * Controlled RY/RZ become a uniformly controlled rotation demultiplexed with
 * two CNOTs per recursion level. Controlled X, Z and Phase are reduced to
 * controlled phases and RZ rotations first. Parameter terms are carried over
 * with the linear coefficients produced by the rewrite. Uncontrolled gates and
 * CNOTs come back unchanged. Throws UnsupportedGate for controlled H, Y or
 * Matrix gates.
 */
std::vector<GateOp> decompose_multicontrolled(const GateOp& gate);

/// Applies decompose_multicontrolled to every gate.
CircuitSpec decompose_circuit(const CircuitSpec& circuit);

/// Greedy layering depth of the decomposed circuit. Global phases take no
/// layer.
int circuit_depth(const CircuitSpec& circuit);

/// Layering depth of the gates as given, without decomposition.
int layered_depth(const CircuitSpec& circuit);

}  // namespace sqgen::ansatz
