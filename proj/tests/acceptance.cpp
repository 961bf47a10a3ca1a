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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracle/dense.hpp"
#include "sqgen/discrimination.hpp"
#include "sqgen/minimal_circuit.hpp"
#include "sqgen/qgan.hpp"
#include "sqgen/synergic.hpp"

using namespace sqgen;
using synergic::SqgenTrainConfig;

namespace {

const double pi = std::numbers::pi;
int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string str(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

SqgenTrainConfig single_qubit(std::uint64_t seed) {
  SqgenTrainConfig cfg;
  cfg.source = synergic::hadamard_source();
  cfg.generator_ansatz = {1, ansatz::Structure::FullCascade};
  cfg.discriminator_ansatz = {1, ansatz::Structure::FullCascade};
  cfg.seed = seed;
  cfg.timing = false;
  return cfg;
}

SqgenTrainConfig ghz(int n, std::uint64_t seed, std::size_t epochs) {
  SqgenTrainConfig cfg;
  cfg.source = synergic::ghz_source(n);
  cfg.generator_ansatz = {n, ansatz::Structure::FullCascade};
  cfg.discriminator_ansatz = {n, ansatz::Structure::FullCascade};
  cfg.optimizer = synergic::OptimizerKind::Bfgs;
  cfg.epochs = epochs;
  cfg.iters_per_epoch = 1;
  cfg.seed = seed;
  cfg.timing = false;
  return cfg;
}

Statevector prepared(const CircuitSpec& c) { return apply_circuit(init_zero(c.n_qubits), c); }

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  int ok = 0;
  bool within_cap = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto cfg = single_qubit(seed);
    cfg.epochs = 60;
    cfg.max_evaluations = 300;
    const auto trace = synergic::train_sqgen(cfg);
    const auto& m = trace.records.back().metrics;
    within_cap = within_cap && trace.evaluations <= 300;
    if (m.J_linear < 1e-3 && m.F > 0.999) ++ok;
  }
  const double elapsed = seconds_since(t0);
  report(1, ok >= 18 && within_cap && elapsed < 60,
         str("%.0f/20 seeds reach J<1e-3 and F>0.999, all runs within 300 evaluations: %.0f, "
             "%.2f s",
             ok, within_cap, elapsed));
}

void criterion2() {
  std::vector<double> final_f;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto cfg = single_qubit(seed);
    cfg.shots = 10000;
    cfg.epochs = 60;
    cfg.max_evaluations = 150;
    final_f.push_back(synergic::train_sqgen(cfg).records.back().metrics.F);
  }
  const double med_f = median(final_f);

  // Exact mode with a wider initial simplex: evaluations spent when the
  // linear cost first drops below 1e-3, recorded after every iteration.
  std::vector<double> first_hit;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto cfg = single_qubit(seed);
    cfg.simplex_step = 1.0;
    cfg.iters_per_epoch = 1;
    cfg.epochs = 400;
    cfg.max_evaluations = 400;
    const auto trace = synergic::train_sqgen(cfg);
    double hit = 1e9;
    for (const auto& r : trace.records) {
      if (r.metrics.J_linear < 1e-3) {
        hit = static_cast<double>(r.evaluations);
        break;
      }
    }
    first_hit.push_back(hit);
  }
  const double med_hit = median(first_hit);
  report(2, med_f >= 0.95 && med_hit <= 120,
         str("shots 1e4: median F = %.4f after <= 150 evaluations; exact: median %.0f "
             "evaluations to J < 1e-3 (max %.0f)",
             med_f, med_hit, *std::max_element(first_hit.begin(), first_hit.end())));
}

void criterion3() {
  bool pass = true;
  std::string detail;
  for (int n = 2; n <= 4; ++n) {
    double best_s = 0, best_q = 0, gap_best = 1;
    bool monotone = true;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto cfg = ghz(n, seed, 20);
      const auto s = synergic::train_sqgen(cfg);
      for (std::size_t i = 1; i < s.records.size(); ++i) {
        monotone = monotone && s.records[i].metrics.J <= s.records[i - 1].metrics.J + 1e-9;
      }
      best_s = std::max(best_s, s.records.back().metrics.F);

      const auto q = qgan::train_qgan(cfg, {});
      const auto& last = q.records.back().metrics;
      const auto& first = q.records.front().metrics;
      if (last.F > best_q) {
        best_q = last.F;
        gap_best = std::abs(last.p - last.q) - std::abs(first.p - first.q);
      }
      pass = pass && q.freeze_audit;
    }
    // p and q approach each other: the best QGAN run ends with a smaller gap
    // than it started with, or with none at all.
    const bool ok = best_s >= 0.99 && best_q >= 0.99 && monotone && gap_best <= 1e-9;
    pass = pass && ok;
    detail += str("n=%.0f: best F sqgen %.4f qgan %.4f, sqgen J monotone %.0f; ", n, best_s,
                  best_q, monotone);
  }
  for (int n = 5; n <= 6; ++n) {
    const auto cfg = ghz(n, 0, 2);
    const auto s = synergic::train_sqgen(cfg);
    const auto q = qgan::train_qgan(cfg, {});
    const bool finite = std::isfinite(s.records.back().metrics.J) &&
                        std::isfinite(q.records.back().metrics.F);
    pass = pass && finite;
    detail += str("n=%.0f smoke: F sqgen %.3f qgan %.3f; ", n, s.records.back().metrics.F,
                  q.records.back().metrics.F);
  }
  report(3, pass, detail);
}

void criterion4() {
  bool pass = true;
  for (int n = 1; n <= 6; ++n) {
    const auto a = qgan::audit_registers(n);
    pass = pass && a.sqgen == n + 1 && a.sqgen_monitored == n + 2 && a.qgan == 3 * n + 2 &&
           a.swap_variant == 2 * n + 4;
  }
  report(4, pass, "register audit n = 1..6: n+1, n+2, 3n+2, 2n+4");
}

void criterion5() {
  bool pass = true;
  std::string detail;
  std::uint64_t seed = 500;
  for (double beta : {pi / 8, pi / 4, 3 * pi / 8, pi / 2}) {
    const std::uint64_t shots = 100000;
    const double p = (1 + std::pow(std::sin(beta), 2)) / 2;
    const double se = std::sqrt(p * (1 - p) / shots);
    const double freq = discrimination::sampled_discrimination_probability(beta, shots, seed++);
    const double z = se > 0 ? std::abs(freq - p) / se : (freq == p ? 0 : 1e9);
    pass = pass && z <= 3;
    detail += str("beta=%.4f z=%.2f; ", beta, z);
  }
  report(5, pass, detail);
}

void criterion6() {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(-pi, pi);
  double worst = 0, worst_gap = 0;
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 3;
    const ansatz::AnsatzSpec spec{n, ansatz::Structure::FullCascade};
    ansatz::AnsatzParams pd(ansatz::param_count(spec)), pr(pd.size());
    for (auto& v : pd) v = u(rng);
    for (auto& v : pr) v = u(rng);
    synergic::DiscriminatorModel d;
    d.spec = spec;
    d.banks["e"] = {{pd, 1.0}};
    d.theta = std::uniform_real_distribution<double>(0, pi)(rng);
    const auto prep = ansatz::build_unitary_block(spec, pr);

    const oracle::Vec phi = oracle::to_vec(prepared(ansatz::build_unitary_block(spec, pd)));
    const oracle::Vec psi = oracle::to_vec(prepared(prep));
    const double a2 = std::norm(phi.dot(psi));
    const double expected = std::norm((1 - a2) * std::cos(d.theta) + a2);
    const double measured = std::norm(prepared(synergic::build_response_circuit(prep, d, "e"))[0]);
    worst = std::max(worst, std::abs(measured - expected));

    d.theta = pi / 2;
    const double p_alpha = std::norm(prepared(synergic::build_response_circuit(prep, d, "e"))[0]);
    const double p_one = std::norm(prepared(synergic::build_response_circuit(
        ansatz::build_unitary_block(spec, pd), d, "e"))[0]);
    worst_gap = std::max(worst_gap, std::abs(std::abs(p_alpha - p_one) - (1 - a2 * a2)));
  }
  report(6, worst < 1e-9 && worst_gap < 1e-9,
         str("max |p - closed form| = %.2e, max gap-law error = %.2e over 50 instances", worst,
             worst_gap));
}

void criterion7() {
  const double h = 1 / std::sqrt(2.0);
  auto real = [](double t) { return Statevector::from_amplitudes({std::cos(t), std::sin(t)}); };
  const synergic::PureAssemblage source{{real(0), Statevector::from_amplitudes({0, 1})},
                                        {0.5, 0.5}};
  const synergic::PureAssemblage gen_z = source;
  const synergic::PureAssemblage gen_x{
      {Statevector::from_amplitudes({h, h}), Statevector::from_amplitudes({h, -h})}, {0.5, 0.5}};

  // Optimal discriminator: the pair of real pointer states that best covers
  // the source, found on a grid.
  double best = 2, t1 = 0, t2 = 0;
  const int steps = 180;
  for (int i = 0; i < steps; ++i) {
    for (int j = i; j < steps; ++j) {
      const double a = pi * i / steps, b = pi * j / steps;
      const double v = synergic::closed_form_JD_star({{real(a), real(b)}, {0.5, 0.5}}, source);
      if (v < best) {
        best = v;
        t1 = a;
        t2 = b;
      }
    }
  }
  const synergic::PureAssemblage pointers{{real(t1), real(t2)}, {0.5, 0.5}};
  const double jz = synergic::closed_form_J(pointers, gen_z, source);
  const double jx = synergic::closed_form_J(pointers, gen_x, source);
  const double gz = synergic::generator_cost_JG(gen_z, source);
  const double gx = synergic::generator_cost_JG(gen_x, source);
  report(7, jz < jx && std::abs(gz - gx) < 1e-10,
         str("J({0,1} generator) = %.4f < J({+,-} generator) = %.4f; J_G = %.6f vs %.6f", jz, jx,
             gz, gx));
}

void criterion8() {
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> u(-pi, pi);
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    SqgenTrainConfig cfg;
    if (k % 2 == 0) {
      cfg.source = synergic::pauli_source('y');
      cfg.generator_ansatz = {1, ansatz::Structure::FullCascade};
      cfg.discriminator_ansatz = {1, ansatz::Structure::FullCascade};
      cfg.generator_variants = {{{}, 0.5}, {{0}, 0.5}};
    } else {
      cfg.source = synergic::ghz_source(2);
      cfg.generator_ansatz = {2, ansatz::Structure::FullCascade};
      cfg.discriminator_ansatz = {2, ansatz::Structure::SingleQubitZyz};
    }
    cfg.theta = std::uniform_real_distribution<double>(0.1, pi / 2)(rng);
    const std::size_t pg = ansatz::param_count(cfg.generator_ansatz);
    const synergic::ParamTags tags{0, pg, 0};
    const std::string& label = cfg.source.label;
    optim::Vector x(synergic::full_dimension(cfg));
    for (auto& v : x) v = u(rng);

    auto J = [&](std::span<const double> y) {
      const auto [gen, disc] = synergic::unpack(cfg, y);
      return synergic::eval_cost_J(cfg.source, gen, disc, label, synergic::EvalMode::exact());
    };
    const auto ps = optim::parameter_shift_gradient(
        [&](std::span<const double> y) {
          const auto [gen, disc] = synergic::unpack(cfg, y);
          return synergic::cost_objective(cfg.source, gen, disc, label, tags);
        },
        x);
    const double eps = 1e-5;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto xp = x, xm = x;
      xp[i] += eps;
      xm[i] -= eps;
      const double fd = (J(xp) - J(xm)) / (2 * eps);
      worst = std::max(worst, std::abs(fd - ps[i]));
    }
  }
  report(8, worst < 1e-5, str("max |shift rule - central difference| = %.2e over 50 points", worst));
}

void criterion9() {
  std::mt19937_64 rng(909);
  double worst_nx = 0, worst_omega = 0, worst_equiv = 0;
  for (int k = 0; k < 50; ++k) {
    const auto r = minimal::extract_rotation(minimal::compose_XUdagXU(oracle::random_unitary2(rng)));
    worst_nx = std::max(worst_nx, std::abs(r.axis[0]));
    worst_omega = std::max(worst_omega, std::abs(r.omega));
  }
  for (int k = 0; k < 20; ++k) {
    const auto u = oracle::random_unitary2(rng), a = oracle::random_unitary2(rng),
               b = oracle::random_unitary2(rng), g = oracle::random_unitary2(rng),
               r = oracle::random_unitary2(rng);
    worst_equiv = std::max(
        worst_equiv, oracle::max_abs_diff(
                         oracle::circuit_matrix(minimal::build_minimal_circuit(u, a, b, g, r)),
                         oracle::circuit_matrix(minimal::build_reference_circuit(u, a, b, g, r))));
  }
  report(9, worst_nx < 1e-9 && worst_omega < 1e-9 && worst_equiv < 1e-9,
         str("max |n_x| = %.2e, max |omega| = %.2e, max circuit difference = %.2e", worst_nx,
             worst_omega, worst_equiv));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("criterion 10: not reproducible (declared)  hardware traces, noise bands, "
              "wall-times and device convergence rates are out of scope\n");
  return failures == 0 ? 0 : 1;
}
