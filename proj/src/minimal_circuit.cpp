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

#include "sqgen/minimal_circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "sqgen/errors.hpp"

namespace sqgen::minimal {

namespace {

constexpr double kTol = 1e-9;
const cplx kI{0.0, 1.0};

Mat2 pauli(int j) {
  Mat2 m;
  switch (j) {
    case 0: m << 0, 1, 1, 0; break;
    case 1: m << 0, -kI, kI, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

void check_unitary(const Mat2& u) {
  if ((u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ValidationError("matrix is not unitary");
  }
}

// Reduces x to (-2 pi, 2 pi].
double wrap4pi(double x) {
  const double period = 4 * std::numbers::pi;
  double r = std::fmod(x, period);
  if (r > period / 2) r -= period;
  if (r <= -period / 2) r += period;
  return r;
}

}  // namespace

Mat2 compose_XUdagXU(const Mat2& u) {
  check_unitary(u);
  const Mat2 x = pauli(0);
  return x * u.adjoint() * x * u;
}

RotationDecomposition extract_rotation(const Mat2& v) {
  check_unitary(v);
  RotationDecomposition r;
  r.omega = std::arg(v.determinant()) / 2;
  if (r.omega <= -std::numbers::pi / 2) r.omega += std::numbers::pi;
  const Mat2 w = std::exp(-kI * r.omega) * v;

  // W = cos(d/2) 1 - i sin(d/2) n.sigma, so Tr W = 2 cos(d/2) and
  // Tr(W sigma_j) = -2i sin(d/2) n_j.
  const double c = w.trace().real() / 2;
  std::array<double, 3> s{};
  double s_norm = 0;
  for (int j = 0; j < 3; ++j) {
    s[j] = (kI * (w * pauli(j)).trace() / 2.0).real();
    s_norm += s[j] * s[j];
  }
  s_norm = std::sqrt(s_norm);
  if (s_norm < 1e-12) {
    r.axis = {0, 0, 1};
    r.delta = c >= 0 ? 0.0 : 2 * std::numbers::pi;
    r.degenerate = c >= 0;
    return r;
  }
  for (int j = 0; j < 3; ++j) r.axis[j] = s[j] / s_norm;
  r.delta = 2 * std::atan2(s_norm, c);

  const auto& n = r.axis;
  const bool flip = n[1] < -1e-12 || (std::abs(n[1]) <= 1e-12 &&
                                       (n[2] < -1e-12 || (std::abs(n[2]) <= 1e-12 && n[0] < 0)));
  if (flip) {
    for (auto& a : r.axis) a = -a;
    r.delta = -r.delta;
  }
  return r;
}

Mat2 rebuild(const RotationDecomposition& r) {
  Mat2 m = std::cos(r.delta / 2) * Mat2::Identity();
  for (int j = 0; j < 3; ++j) m -= kI * std::sin(r.delta / 2) * r.axis[j] * pauli(j);
  return std::exp(kI * r.omega) * m;
}

AxisAngles axis_angles(const std::array<double, 3>& axis) {
  AxisAngles out;
  out.eta = std::acos(std::clamp(axis[2], -1.0, 1.0));
  const double rho = std::hypot(axis[0], axis[1]);
  if (rho < 1e-12) {
    out.gamma = 0.0;
    out.pole = true;
  } else {
    out.gamma = std::atan2(axis[1], axis[0]);
  }
  return out;
}

CircuitSpec build_minimal_circuit(const Mat2& u, const Mat2& a, const Mat2& b, const Mat2& g,
                                  const Mat2& r) {
  CircuitSpec c(2);
  c.add(GateOp::unitary(1, r));
  c.add(GateOp::unitary(0, a)).add(GateOp::unitary(1, b));
  c.add(GateOp::unitary(0, compose_XUdagXU(u)).controlled_by(1));
  c.add(GateOp::x(0));
  c.add(GateOp::unitary(0, a.adjoint())).add(GateOp::unitary(1, b.adjoint()));
  c.add(GateOp::unitary(1, g.adjoint()));
  return c;
}

CircuitSpec build_reference_circuit(const Mat2& u, const Mat2& a, const Mat2& b, const Mat2& g,
                                    const Mat2& r) {
  check_unitary(u);
  CircuitSpec c(2);
  c.add(GateOp::unitary(1, r));
  c.add(GateOp::unitary(0, a)).add(GateOp::unitary(1, b));
  c.add(GateOp::unitary(0, u).controlled_by(1));
  c.add(GateOp::x(0));
  c.add(GateOp::unitary(0, u.adjoint()).controlled_by(1));
  c.add(GateOp::unitary(0, a.adjoint())).add(GateOp::unitary(1, b.adjoint()));
  c.add(GateOp::unitary(1, g.adjoint()));
  return c;
}

MzReport verify_mz_relations(const Mat2& u) {
  MzReport rep;
  rep.u = extract_rotation(u);
  rep.v = extract_rotation(compose_XUdagXU(u));
  const auto& m = rep.u.axis;
  const auto& n = rep.v.axis;
  rep.mx_zero = std::abs(m[0]) < kTol;
  // The axes are only defined up to a joint sign flip with the angle.
  auto same = [](double x, double y) { return std::abs(std::abs(x) - std::abs(y)) < kTol; };
  rep.my_equals_nz = same(m[1], n[2]);
  rep.mz_equals_nz = same(m[2], n[2]);
  rep.my_equals_ny = same(m[1], n[1]);
  rep.delta_twice_phi =
      std::abs(std::abs(wrap4pi(rep.v.delta)) - std::abs(wrap4pi(2 * rep.u.delta))) < kTol;
  return rep;
}

}  // namespace sqgen::minimal
