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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracle/dense.hpp"
#include "sqgen/errors.hpp"
#include "sqgen/minimal_circuit.hpp"
#include "sqgen/synergic.hpp"

using namespace sqgen;
using namespace sqgen::minimal;

namespace {

const double pi = std::numbers::pi;

Mat2 single_qubit_matrix(const CircuitSpec& c) { return oracle::circuit_matrix(c); }

Mat2 ry(double t) { return single_qubit_matrix(CircuitSpec(1).add(GateOp::ry(0, t))); }
Mat2 rz(double t) { return single_qubit_matrix(CircuitSpec(1).add(GateOp::rz(0, t))); }

}  // namespace

TEST_CASE("extract and rebuild random unitaries") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const Mat2 v = oracle::random_unitary2(rng);
    const auto r = extract_rotation(v);
    CHECK((rebuild(r) - v).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(r.omega > -pi / 2);
    CHECK(r.omega <= pi / 2 + 1e-12);
    CHECK(r.delta > -2 * pi);
    CHECK(r.delta <= 2 * pi + 1e-12);
    CHECK(r.axis[1] >= -1e-12);
    CHECK(std::hypot(std::hypot(r.axis[0], r.axis[1]), r.axis[2]) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("X U^dagger X U has unit determinant and no x component") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 50; ++k) {
    const Mat2 u = oracle::random_unitary2(rng);
    const Mat2 v = compose_XUdagXU(u);
    CHECK(std::abs(v.determinant() - cplx{1, 0}) < 1e-10);
    CHECK(std::abs(v.trace().imag()) < 1e-10);
    const auto r = extract_rotation(v);
    CHECK(std::abs(r.omega) < 1e-9);
    CHECK(std::abs(r.axis[0]) < 1e-9);
    const auto ang = axis_angles(r.axis);
    if (!ang.pole && r.axis[1] > 1e-9) CHECK(ang.gamma == doctest::Approx(pi / 2).epsilon(1e-9));
  }
}

TEST_CASE("rotation examples") {
  const auto r = extract_rotation(compose_XUdagXU(rz(0.3)));
  CHECK(r.delta == doctest::Approx(-1.2).epsilon(1e-12));
  CHECK(r.axis[2] == doctest::Approx(1.0));

  const auto id = extract_rotation(Mat2::Identity());
  CHECK(id.degenerate);
  CHECK(id.delta == 0.0);

  const auto ang = axis_angles({0, 0, 1});
  CHECK(ang.pole);
  CHECK(ang.eta == 0.0);

  Mat2 bad = Mat2::Identity();
  bad(0, 0) = 2;
  CHECK_THROWS_AS(compose_XUdagXU(bad), ValidationError);
  CHECK_THROWS_AS(extract_rotation(bad), ValidationError);
}

TEST_CASE("reduced circuit equals the reference circuit") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 20; ++k) {
    const Mat2 u = oracle::random_unitary2(rng), a = oracle::random_unitary2(rng),
               b = oracle::random_unitary2(rng), g = oracle::random_unitary2(rng),
               r = oracle::random_unitary2(rng);
    const auto m = oracle::circuit_matrix(build_minimal_circuit(u, a, b, g, r));
    const auto ref = oracle::circuit_matrix(build_reference_circuit(u, a, b, g, r));
    CHECK(oracle::max_abs_diff(m, ref) < 1e-9);
  }
}

TEST_CASE("reference circuit is the one-qubit branch-1 circuit") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> ang(-pi, pi);
  const ansatz::AnsatzSpec spec{1, ansatz::Structure::FullCascade};
  for (int k = 0; k < 10; ++k) {
    ansatz::AnsatzParams pg(4), pd(4), pr(4);
    for (auto* p : {&pg, &pd, &pr})
      for (auto& v : *p) v = ang(rng);
    const double theta = std::uniform_real_distribution<double>(0, pi)(rng);

    synergic::GeneratorModel gen;
    gen.spec = spec;
    gen.params["e"] = pg;
    synergic::DiscriminatorModel disc;
    disc.spec = spec;
    disc.banks["e"] = {{pd, 1.0}};
    disc.theta = theta;
    const CircuitSpec prep = ansatz::build_unitary_block(spec, pr);
    const synergic::SourceSpec src{"e", 1, {{prep, 1.0}}};

    const Mat2 v = single_qubit_matrix(ansatz::build_unitary_block(spec, pd));
    const Mat2 g = single_qubit_matrix(synergic::generator_circuit(gen, "e", 0, 1, 0));
    const Mat2 r = single_qubit_matrix(prep);

    const auto full =
        oracle::circuit_matrix(synergic::build_sqgen_circuit(src, gen, disc, "e", 0, 0, 1));
    const auto ref = oracle::circuit_matrix(
        build_reference_circuit(ry(theta), Mat2::Identity(), v.adjoint(), g, r));
    CHECK(oracle::max_abs_diff(full, ref) < 1e-9);
  }
}

TEST_CASE("axis relations between U and X U^dagger X U") {
  // With m_x = 0 the composite is U^2: same axis, twice the angle.
  for (double t : {0.2, 0.9, -1.3}) {
    const auto rep = verify_mz_relations(ry(t));
    CHECK(rep.mx_zero);
    CHECK(rep.my_equals_ny);
    CHECK(rep.mz_equals_nz);
    CHECK(rep.delta_twice_phi);
  }
  // A generic U has m_x != 0 and none of the relations need hold; the report
  // must still be produced without throwing.
  CHECK_NOTHROW(verify_mz_relations(ry(0.5) * rz(0.4)));
}
