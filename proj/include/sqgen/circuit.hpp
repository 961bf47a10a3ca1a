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

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sqgen {

using cplx = std::complex<double>;

/**
 * Gate kinds understood by the simulator.
 *
 * Rotations follow R(t) = cos(t) 1 + i sin(t) P for the Pauli P of the axis,
 * i.e. R(t) = exp(i t P). Note the absence of the usual factor 1/2 and the
 * opposite sign with respect to exp(-i t P / 2).
 *
 * Phase(t) is diag(1, e^{it}); GlobalPhase(t) multiplies the whole register
 * by e^{it} and has no target. Matrix carries an arbitrary 2x2 unitary.
 */
enum class GateKind { X, Y, Z, H, RY, RZ, Phase, GlobalPhase, Matrix };

const char* to_string(GateKind kind);

/// Control qubit with polarity. `on_one == false` means the gate fires when
/// the control reads |0>.
struct Control {
  int qubit = 0;
  bool on_one = true;

  friend bool operator==(const Control&, const Control&) = default;
};

/// The angle of a gate depends linearly on trainable parameters:
/// angle = sum(coeff * params[index]) for the terms listed on the gate.
struct ParamTerm {
  std::size_t index = 0;
  double coeff = 1.0;

  friend bool operator==(const ParamTerm&, const ParamTerm&) = default;
};

struct GateOp {
  GateKind kind = GateKind::X;
  int target = 0;
  std::vector<Control> controls;
  double angle = 0.0;
  Eigen::Matrix2cd matrix = Eigen::Matrix2cd::Identity();
  std::vector<ParamTerm> params;

  static GateOp x(int q);
  static GateOp y(int q);
  static GateOp z(int q);
  static GateOp h(int q);
  static GateOp ry(int q, double angle);
  static GateOp rz(int q, double angle);
  static GateOp phase(int q, double angle);
  static GateOp global_phase(double angle);
  static GateOp unitary(int q, const Eigen::Matrix2cd& u);
  static GateOp cnot(int control, int target);

  GateOp&& controlled_by(int qubit, bool on_one = true) &&;
  GateOp&& with_param(std::size_t index, double coeff = 1.0) &&;

  bool is_rotation() const {
    return kind == GateKind::RY || kind == GateKind::RZ ||
           kind == GateKind::Phase || kind == GateKind::GlobalPhase;
  }

  /// 2x2 action on the target (controls excluded). GlobalPhase returns
  /// e^{i angle} times the identity.
  Eigen::Matrix2cd target_matrix() const;

  /// Inverse gate. Parameter terms are negated along with the angle.
  GateOp adjoint() const;

  /// Qubits touched by the gate (target first, then controls).
  std::vector<int> qubits() const;
};

struct CircuitSpec {
  int n_qubits = 0;
  std::vector<GateOp> gates;
  std::optional<std::string> classical_label;

  CircuitSpec() = default;
  explicit CircuitSpec(int n) : n_qubits(n) {}

  CircuitSpec& add(GateOp g) {
    gates.push_back(std::move(g));
    return *this;
  }
  /// Appends every gate of `other`, shifted by `offset` qubits.
  CircuitSpec& append(const CircuitSpec& other, int offset = 0);

  bool empty() const { return gates.empty(); }
};

/// Reversed gate order with each gate replaced by its adjoint.
CircuitSpec inverse(const CircuitSpec& circuit);

/// Throws IndexError when a gate refers to a qubit outside [0, n) or when
/// targets and controls overlap.
void validate(const GateOp& gate, int n_qubits);
void validate(const CircuitSpec& circuit);

/// Preparation circuit for (|0..0> + |1..1>)/sqrt(2).
CircuitSpec ghz_preparation(int n_qubits);

}  // namespace sqgen
