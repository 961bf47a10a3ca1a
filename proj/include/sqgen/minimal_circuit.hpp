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

// Single-qubit rotation extraction and the reduced two-qubit circuit in
// which the controlled U, X, controlled U^dagger sandwich becomes one
// controlled X U^dagger X U.

#pragma once

#include <array>

#include <Eigen/Core>

#include "sqgen/circuit.hpp"

namespace sqgen::minimal {

using Mat2 = Eigen::Matrix2cd;

/// V = e^{i omega} (cos(delta/2) - i sin(delta/2) axis . sigma).
struct RotationDecomposition {
  double omega = 0.0;
  std::array<double, 3> axis{0.0, 0.0, 1.0};
  double delta = 0.0;
  /// delta is 0 and the axis is the conventional (0, 0, 1).
  bool degenerate = false;
};

struct AxisAngles {
  double eta = 0.0;
  double gamma = 0.0;
  /// Axis at a pole: gamma is set to 0 by convention.
  bool pole = false;
};

/// X U^dagger X U. Throws ValidationError when U is not unitary within 1e-10.
Mat2 compose_XUdagXU(const Mat2& u);

/**
 * Solves the trace equations for (omega, axis, delta).
 *
 * omega = arg(det V) / 2 in (-pi/2, pi/2], so the remaining SU(2) part
 * fixes delta in (-2 pi, 2 pi]. The axis is made canonical with n_y >= 0
 * (ties broken on n_z, then n_x) by flipping (axis, delta) -> (-axis, -delta).
 */
RotationDecomposition extract_rotation(const Mat2& v);

/// Inverse of extract_rotation.
Mat2 rebuild(const RotationDecomposition& r);

/// n = (sin eta cos gamma, sin eta sin gamma, cos eta).
AxisAngles axis_angles(const std::array<double, 3>& axis);

/**
 * Two-qubit circuit with qubit 0 the ancilla and qubit 1 the data:
 * R on 1; A on 0, B on 1; controlled-(X U^dagger X U) from 1 onto 0; X on 0;
 * A^dagger on 0, B^dagger on 1; G^dagger on 1.
 */
CircuitSpec build_minimal_circuit(const Mat2& u, const Mat2& a, const Mat2& b, const Mat2& g,
                                  const Mat2& r);

/// Same operator with the controlled U, X on 0, controlled U^dagger sandwich.
CircuitSpec build_reference_circuit(const Mat2& u, const Mat2& a, const Mat2& b, const Mat2& g,
                                    const Mat2& r);

struct MzReport {
  RotationDecomposition u;  ///< axis m, angle phi
  RotationDecomposition v;  ///< axis n, angle delta of X U^dagger X U
  bool mx_zero = false;
  bool my_equals_nz = false;
  bool mz_equals_nz = false;
  bool my_equals_ny = false;
  /// |delta| = 2 |phi| with both reduced modulo 4 pi.
  bool delta_twice_phi = false;
};

/// Evaluates the stated relations between U's axis/angle and those of
/// X U^dagger X U, within 1e-9. Reports; does not throw on failure.
MzReport verify_mz_relations(const Mat2& u);

}  // namespace sqgen::minimal
