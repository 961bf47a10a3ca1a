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

#include "sqgen/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sqgen/errors.hpp"

namespace sqgen {

namespace {

const cplx kI{0.0, 1.0};

GateOp make(GateKind kind, int q, double angle = 0.0) {
  GateOp g;
  g.kind = kind;
  g.target = q;
  g.angle = angle;
  return g;
}

}  // namespace

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::Phase: return "PHASE";
    case GateKind::GlobalPhase: return "GPHASE";
    case GateKind::Matrix: return "U";
  }
  return "?";
}

GateOp GateOp::x(int q) { return make(GateKind::X, q); }
GateOp GateOp::y(int q) { return make(GateKind::Y, q); }
GateOp GateOp::z(int q) { return make(GateKind::Z, q); }
GateOp GateOp::h(int q) { return make(GateKind::H, q); }
GateOp GateOp::ry(int q, double angle) { return make(GateKind::RY, q, angle); }
GateOp GateOp::rz(int q, double angle) { return make(GateKind::RZ, q, angle); }
GateOp GateOp::phase(int q, double angle) {
  return make(GateKind::Phase, q, angle);
}
GateOp GateOp::global_phase(double angle) {
  return make(GateKind::GlobalPhase, -1, angle);
}
GateOp GateOp::unitary(int q, const Eigen::Matrix2cd& u) {
  GateOp g = make(GateKind::Matrix, q);
  g.matrix = u;
  return g;
}
GateOp GateOp::cnot(int control, int target) {
  return GateOp::x(target).controlled_by(control);
}

GateOp&& GateOp::controlled_by(int qubit, bool on_one) && {
  controls.push_back({qubit, on_one});
  return std::move(*this);
}

GateOp&& GateOp::with_param(std::size_t index, double coeff) && {
  params.push_back({index, coeff});
  return std::move(*this);
}

Eigen::Matrix2cd GateOp::target_matrix() const {
  Eigen::Matrix2cd m;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  switch (kind) {
    case GateKind::X:
      m << 0, 1, 1, 0;
      break;
    case GateKind::Y:
      m << 0, -kI, kI, 0;
      break;
    case GateKind::Z:
      m << 1, 0, 0, -1;
      break;
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      break;
    }
    case GateKind::RY:
      // cos(t) 1 + i sin(t) Y
      m << c, s, -s, c;
      break;
    case GateKind::RZ:
      m << cplx(c, s), 0, 0, cplx(c, -s);
      break;
    case GateKind::Phase:
      m << 1, 0, 0, cplx(c, s);
      break;
    case GateKind::GlobalPhase:
      m << cplx(c, s), 0, 0, cplx(c, s);
      break;
    case GateKind::Matrix:
      m = matrix;
      break;
  }
  return m;
}

GateOp GateOp::adjoint() const {
  GateOp g = *this;
  switch (kind) {
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::Phase:
    case GateKind::GlobalPhase:
      g.angle = -angle;
      for (auto& t : g.params) t.coeff = -t.coeff;
      break;
    case GateKind::Matrix:
      g.matrix = matrix.adjoint();
      break;
    default:
      break;
  }
  return g;
}

std::vector<int> GateOp::qubits() const {
  std::vector<int> out;
  if (kind != GateKind::GlobalPhase) out.push_back(target);
  for (const auto& c : controls) out.push_back(c.qubit);
  return out;
}

CircuitSpec& CircuitSpec::append(const CircuitSpec& other, int offset) {
  for (GateOp g : other.gates) {
    if (g.kind != GateKind::GlobalPhase) g.target += offset;
    for (auto& c : g.controls) c.qubit += offset;
    gates.push_back(std::move(g));
  }
  return *this;
}

CircuitSpec inverse(const CircuitSpec& circuit) {
  CircuitSpec out(circuit.n_qubits);
  out.classical_label = circuit.classical_label;
  out.gates.reserve(circuit.gates.size());
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    out.gates.push_back(it->adjoint());
  }
  return out;
}

void validate(const GateOp& gate, int n_qubits) {
  const auto qs = gate.qubits();
  for (int q : qs) {
    if (q < 0 || q >= n_qubits) {
      throw IndexError(std::string(to_string(gate.kind)) + " gate refers to qubit " +
                       std::to_string(q) + " in a " + std::to_string(n_qubits) +
                       "-qubit register");
    }
  }
  auto sorted = qs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw IndexError(std::string(to_string(gate.kind)) +
                     " gate has overlapping target and control qubits");
  }
}

void validate(const CircuitSpec& circuit) {
  for (const auto& g : circuit.gates) validate(g, circuit.n_qubits);
}

CircuitSpec ghz_preparation(int n_qubits) {
  CircuitSpec c(n_qubits);
  c.add(GateOp::h(0));
  for (int q = 1; q < n_qubits; ++q) c.add(GateOp::cnot(q - 1, q));
  return c;
}

}  // namespace sqgen
