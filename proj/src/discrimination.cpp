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

#include "sqgen/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sqgen/errors.hpp"

namespace sqgen::discrimination {

PlanePair make_pair(Statevector r, Statevector g) {
  const double overlap = std::min(1.0, std::abs(inner_product(r, g)));
  const double beta = std::acos(overlap);
  return {std::move(r), std::move(g), beta};
}

std::pair<Statevector, Statevector> optimal_basis(const PlanePair& pair) {
  const double beta = pair.beta;
  if (!(beta > 1e-12)) throw DegeneratePair("states are parallel; no plane to discriminate in");

  const cplx ov = inner_product(pair.r, pair.g);
  const cplx phase = std::abs(ov) > 0 ? std::conj(ov) / std::abs(ov) : cplx{1, 0};
  const double c = std::cos(beta), s = std::sin(beta);
  const double phi_a = beta / 2 - std::numbers::pi / 4;
  const double phi_b = phi_a + std::numbers::pi / 2;

  const std::size_t dim = pair.r.dimension();
  std::vector<cplx> a(dim), b(dim);
  double na = 0, nb = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    const cplx e1 = pair.r[i];
    const cplx e2 = (phase * pair.g[i] - c * e1) / s;
    a[i] = std::cos(phi_a) * e1 + std::sin(phi_a) * e2;
    b[i] = std::cos(phi_b) * e1 + std::sin(phi_b) * e2;
    na += std::norm(a[i]);
    nb += std::norm(b[i]);
  }
  // remove rounding drift so from_amplitudes accepts the vectors
  for (auto& v : a) v /= std::sqrt(na);
  for (auto& v : b) v /= std::sqrt(nb);
  return {Statevector::from_amplitudes(std::move(a)), Statevector::from_amplitudes(std::move(b))};
}

double discrimination_probability(double beta) {
  if (!(beta >= 0 && beta <= std::numbers::pi / 2 + 1e-12)) {
    throw ValidationError("beta must lie in [0, pi/2]");
  }
  const double s = std::sin(beta);
  return (1 + s * s) / 2;
}

double discrimination_probability_states(const Statevector& psi, const Statevector& g,
                                         const Statevector& a, const Statevector& b) {
  if (std::abs(inner_product(a, b)) > 1e-10) throw BasisError("a and b are not orthogonal");
  return fidelity_pure(psi, a) * fidelity_pure(g, b) + fidelity_pure(psi, b) * fidelity_pure(g, a);
}

CircuitSpec build_discrimination_circuit(double beta) {
  if (!(beta >= 0 && beta <= std::numbers::pi / 2)) {
    throw ValidationError("beta must lie in [0, pi/2]");
  }
  const double phi_a = beta / 2 - std::numbers::pi / 4;
  CircuitSpec c(2);
  c.add(GateOp::ry(1, -beta)).add(GateOp::ry(0, phi_a)).add(GateOp::ry(1, phi_a));
  return c;
}

double sampled_discrimination_probability(double beta, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw SizeError("shot count must be at least 1");
  const auto state = apply_circuit(init_zero(2), build_discrimination_circuit(beta));
  auto counts = sample_counts(state, shots, seed);
  return static_cast<double>(counts[1] + counts[2]) / static_cast<double>(shots);
}

}  // namespace sqgen::discrimination
