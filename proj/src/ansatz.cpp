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

#include "sqgen/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "sqgen/errors.hpp"

namespace sqgen::ansatz {

namespace {

/// An angle together with its linear dependence on trainable parameters.
struct LinearAngle {
  double value = 0.0;
  std::vector<ParamTerm> terms;

  bool is_zero() const { return value == 0.0 && terms.empty(); }
};

LinearAngle combine(const LinearAngle& a, double ca, const LinearAngle& b, double cb) {
  LinearAngle out;
  out.value = ca * a.value + cb * b.value;
  std::map<std::size_t, double> acc;
  for (const auto& t : a.terms) acc[t.index] += ca * t.coeff;
  for (const auto& t : b.terms) acc[t.index] += cb * t.coeff;
  for (const auto& [idx, c] : acc) {
    if (c != 0.0) out.terms.push_back({idx, c});
  }
  return out;
}

LinearAngle scaled(const GateOp& g, double factor) {
  LinearAngle a{g.angle * factor, g.params};
  for (auto& t : a.terms) t.coeff *= factor;
  return a;
}

GateOp rotation(GateKind axis, int target, const LinearAngle& a) {
  GateOp g;
  g.kind = axis;
  g.target = target;
  g.angle = a.value;
  g.params = a.terms;
  return g;
}

// angles[j] fires when the controls read the bits of j, controls[0] being the
// most significant bit.
void demultiplex(GateKind axis, std::span<const int> controls, int target,
                 const std::vector<LinearAngle>& angles, std::vector<GateOp>& out) {
  if (controls.empty()) {
    if (!angles[0].is_zero()) out.push_back(rotation(axis, target, angles[0]));
    return;
  }
  const std::size_t mid = angles.size() / 2;
  std::vector<LinearAngle> diff(mid);
  std::vector<LinearAngle> sum(mid);
  bool diff_zero = true;
  for (std::size_t i = 0; i < mid; ++i) {
    diff[i] = combine(angles[i], 0.5, angles[mid + i], -0.5);
    sum[i] = combine(angles[i], 0.5, angles[mid + i], 0.5);
    diff_zero = diff_zero && diff[i].is_zero();
  }
  const auto rest = controls.subspan(1);
  if (!diff_zero) {
    out.push_back(GateOp::cnot(controls[0], target));
    demultiplex(axis, rest, target, diff, out);
    out.push_back(GateOp::cnot(controls[0], target));
  }
  demultiplex(axis, rest, target, sum, out);
}

void controlled_rotation(GateKind axis, std::span<const Control> controls, int target,
                         const LinearAngle& angle, std::vector<GateOp>& out) {
  std::vector<int> qs;
  std::size_t pattern = 0;
  for (const auto& c : controls) {
    qs.push_back(c.qubit);
    pattern = (pattern << 1) | (c.on_one ? 1u : 0u);
  }
  std::vector<LinearAngle> angles(std::size_t{1} << qs.size());
  angles[pattern] = angle;
  demultiplex(axis, qs, target, angles, out);
}

// Multiplies the amplitude by e^{i phi} when every listed qubit matches its
// polarity. Uses diag(1, e^{i phi}) = e^{i phi / 2} RZ(-phi / 2).
void controlled_phase(std::span<const Control> qubits, const LinearAngle& phi,
                      std::vector<GateOp>& out) {
  if (qubits.empty()) {
    if (!phi.is_zero()) out.push_back(rotation(GateKind::GlobalPhase, -1, phi));
    return;
  }
  const Control last = qubits.back();
  const auto rest = qubits.first(qubits.size() - 1);
  if (rest.empty()) {
    if (!last.on_one) out.push_back(GateOp::x(last.qubit));
    out.push_back(rotation(GateKind::Phase, last.qubit, phi));
    if (!last.on_one) out.push_back(GateOp::x(last.qubit));
    return;
  }
  const LinearAngle half = combine(phi, 0.5, LinearAngle{}, 0.0);
  const LinearAngle rz = combine(phi, last.on_one ? -0.5 : 0.5, LinearAngle{}, 0.0);
  controlled_rotation(GateKind::RZ, rest, last.qubit, rz, out);
  controlled_phase(rest, half, out);
}

void append_block_gate(CircuitSpec& c, GateKind axis, int target,
                       std::span<const int> controls, std::size_t pattern, double angle,
                       std::size_t param_index) {
  GateOp g = rotation(axis, target, LinearAngle{angle, {{param_index, 1.0}}});
  const std::size_t k = controls.size();
  for (std::size_t i = 0; i < k; ++i) {
    const bool bit = (pattern >> (k - 1 - i)) & 1u;
    g.controls.push_back({controls[i], bit});
  }
  c.add(std::move(g));
}

}  // namespace

std::size_t param_count(const AnsatzSpec& spec) {
  if (spec.n_qubits < 1) throw SizeError("ansatz needs at least one qubit");
  const auto n = static_cast<std::size_t>(spec.n_qubits);
  switch (spec.structure) {
    case Structure::FullCascade:
      return 3 * ((std::size_t{1} << n) - 1) + 1;
    case Structure::SingleQubitZyz:
      return 3 * n + 1;
  }
  return 0;
}

std::size_t global_phase_index(const AnsatzSpec& spec) { return param_count(spec) - 1; }

std::vector<std::size_t> basis_input_phase_indices(const AnsatzSpec& spec) {
  std::vector<std::size_t> out;
  if (spec.structure == Structure::SingleQubitZyz) {
    for (int k = 0; k < spec.n_qubits; ++k) out.push_back(3 * static_cast<std::size_t>(k));
  } else {
    out.push_back(0);
  }
  out.push_back(global_phase_index(spec));
  return out;
}

CircuitSpec build_unitary_block(const AnsatzSpec& spec, std::span<const double> params,
                                int total_qubits, int offset, std::size_t param_base) {
  const std::size_t expected = param_count(spec);
  if (params.size() != expected) {
    throw ShapeError("ansatz expects " + std::to_string(expected) + " parameters, got " +
                     std::to_string(params.size()));
  }
  CircuitSpec c(total_qubits);
  std::size_t next = 0;
  const GateKind stages[] = {GateKind::RZ, GateKind::RY, GateKind::RZ};
  for (int k = 0; k < spec.n_qubits; ++k) {
    const int target = offset + k;
    std::vector<int> controls;
    if (spec.structure == Structure::FullCascade) {
      for (int j = 0; j < k; ++j) controls.push_back(offset + j);
    }
    const std::size_t patterns = std::size_t{1} << controls.size();
    for (GateKind axis : stages) {
      for (std::size_t pattern = 0; pattern < patterns; ++pattern) {
        append_block_gate(c, axis, target, controls, pattern, params[next],
                          param_base + next);
        ++next;
      }
    }
  }
  c.add(rotation(GateKind::GlobalPhase, -1,
                 LinearAngle{params[next], {{param_base + next, 1.0}}}));
  validate(c);
  return c;
}

CircuitSpec build_unitary_block(const AnsatzSpec& spec, std::span<const double> params) {
  return build_unitary_block(spec, params, spec.n_qubits);
}

std::vector<GateOp> decompose_multicontrolled(const GateOp& gate) {
  if (gate.controls.empty()) return {gate};
  std::vector<GateOp> out;
  switch (gate.kind) {
    case GateKind::RY:
    case GateKind::RZ:
      controlled_rotation(gate.kind, gate.controls, gate.target, scaled(gate, 1.0), out);
      return out;
    case GateKind::X: {
      if (gate.controls.size() == 1 && gate.controls[0].on_one) return {gate};
      // X = -i RX(pi/2) and RX(t) = H RZ(t) H.
      const double quarter = std::numbers::pi / 2.0;
      out.push_back(GateOp::h(gate.target));
      controlled_rotation(GateKind::RZ, gate.controls, gate.target,
                          LinearAngle{quarter, {}}, out);
      out.push_back(GateOp::h(gate.target));
      controlled_phase(gate.controls, LinearAngle{-quarter, {}}, out);
      return out;
    }
    case GateKind::Z:
    case GateKind::Phase: {
      std::vector<Control> all = gate.controls;
      all.push_back({gate.target, true});
      const LinearAngle phi = gate.kind == GateKind::Z ? LinearAngle{std::numbers::pi, {}}
                                                       : scaled(gate, 1.0);
      controlled_phase(all, phi, out);
      return out;
    }
    case GateKind::GlobalPhase:
      controlled_phase(gate.controls, scaled(gate, 1.0), out);
      return out;
    default:
      throw UnsupportedGate(std::string("cannot decompose controlled ") +
                            to_string(gate.kind));
  }
}

CircuitSpec decompose_circuit(const CircuitSpec& circuit) {
  CircuitSpec out(circuit.n_qubits);
  out.classical_label = circuit.classical_label;
  for (const auto& g : circuit.gates) {
    for (auto& d : decompose_multicontrolled(g)) out.gates.push_back(std::move(d));
  }
  return out;
}

int layered_depth(const CircuitSpec& circuit) {
  std::vector<int> level(static_cast<std::size_t>(std::max(circuit.n_qubits, 0)), 0);
  int depth = 0;
  for (const auto& g : circuit.gates) {
    if (g.kind == GateKind::GlobalPhase) continue;
    const auto qs = g.qubits();
    int layer = 0;
    for (int q : qs) layer = std::max(layer, level[q]);
    ++layer;
    for (int q : qs) level[q] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

int circuit_depth(const CircuitSpec& circuit) {
  return layered_depth(decompose_circuit(circuit));
}

}  // namespace sqgen::ansatz
