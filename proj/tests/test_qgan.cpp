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
#include "sqgen/qgan.hpp"

using namespace sqgen;
using namespace sqgen::qgan;

namespace {

const double pi = std::numbers::pi;

Statevector prepared(const CircuitSpec& c) { return apply_circuit(init_zero(c.n_qubits), c); }

ansatz::AnsatzParams random_params(const ansatz::AnsatzSpec& spec, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-pi, pi);
  ansatz::AnsatzParams p(ansatz::param_count(spec));
  for (auto& v : p) v = u(rng);
  return p;
}

synergic::SqgenTrainConfig hadamard_config() {
  synergic::SqgenTrainConfig cfg;
  cfg.source = synergic::hadamard_source();
  cfg.generator_ansatz = {1, ansatz::Structure::FullCascade};
  cfg.discriminator_ansatz = {1, ansatz::Structure::FullCascade};
  cfg.epochs = 15;
  cfg.seed = 5;
  cfg.timing = false;
  return cfg;
}

}  // namespace

TEST_CASE("real and fake responses at theta = pi/2") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 20; ++k) {
    const int n = 1 + k % 3;
    const ansatz::AnsatzSpec spec{n, ansatz::Structure::FullCascade};
    GeneratorModel gen;
    gen.spec = spec;
    gen.params["e"] = random_params(spec, rng);
    DiscriminatorModel disc;
    disc.spec = spec;
    disc.banks["e"] = {{random_params(spec, rng), 1.0}};
    disc.theta = 0.3;  // ignored: the readout always uses pi/2
    const auto src = synergic::ghz_source(n);

    const auto phi = prepared(ansatz::build_unitary_block(spec, disc.banks["e"][0].params));
    const double ar = fidelity_pure(phi, prepared(src.variants[0].prep));
    const double ag = fidelity_pure(phi, synergic::generator_state(gen, "e", 0));

    const auto real = build_qgan_disc_real(src, disc, "e", 0);
    const auto fake = build_qgan_disc_fake(gen, disc, "e", 0);
    CHECK(real.n_qubits == n + 1);
    CHECK(std::norm(prepared(real)[0]) == doctest::Approx(ar * ar).epsilon(1e-9));
    CHECK(std::norm(prepared(fake)[0]) == doctest::Approx(ag * ag).epsilon(1e-9));

    const auto pq = synergic::eval_pq(src, gen, disc, "e", synergic::EvalMode::exact());
    CHECK(pq.p == doctest::Approx(ar * ar).epsilon(1e-9));
    CHECK(pq.q == doctest::Approx(ag * ag).epsilon(1e-9));
  }
}

TEST_CASE("identity generator against a two-qubit GHZ source") {
  const ansatz::AnsatzSpec spec{2, ansatz::Structure::FullCascade};
  GeneratorModel gen;
  gen.spec = spec;
  gen.params["e"] = ansatz::AnsatzParams(ansatz::param_count(spec), 0.0);
  const auto src = synergic::ghz_source(2);
  const auto c = build_qgan_fidelity(src, gen, "e", 0, 0);
  CHECK(c.n_qubits == 2);
  CHECK(std::norm(prepared(c)[0]) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(synergic::mean_fidelity(src, gen, "e", synergic::EvalMode::exact()) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("register audit") {
  for (int n = 1; n <= 6; ++n) {
    const auto a = audit_registers(n);
    CHECK(a.sqgen == n + 1);
    CHECK(a.sqgen_monitored == n + 2);
    CHECK(a.qgan == 3 * n + 2);
    CHECK(a.swap_variant == 2 * n + 4);
  }
}

TEST_CASE("alternating training") {
  for (auto opt : {synergic::OptimizerKind::NelderMead, synergic::OptimizerKind::Bfgs}) {
    auto cfg = hadamard_config();
    cfg.optimizer = opt;
    QganHyperparams hp;
    hp.disc_iters_per_epoch = 2;
    hp.gen_iters_per_epoch = 2;
    const auto trace = train_qgan(cfg, hp);
    CHECK(trace.freeze_audit);
    CHECK(trace.records.size() == cfg.epochs + 1);
    CHECK(std::isnan(trace.records.back().metrics.J));
    CHECK(trace.records.back().metrics.F > trace.records.front().metrics.F);
    CHECK(trace.records.back().metrics.F > 0.99);
    CHECK(trace.evaluations == trace.disc_evaluations + trace.gen_evaluations);
    CHECK(trace.disc_evaluations > 0);

    const auto again = train_qgan(cfg, hp);
    CHECK(again.params == trace.params);
  }
}

TEST_CASE("training in shot mode") {
  auto cfg = hadamard_config();
  cfg.shots = 2000;
  cfg.epochs = 5;
  const auto trace = train_qgan(cfg, {});
  CHECK(trace.freeze_audit);
  CHECK(trace.records.size() == 6);
}

TEST_CASE("invalid configurations") {
  auto cfg = hadamard_config();
  QganHyperparams hp;
  hp.eta = -1;
  CHECK_THROWS_AS(train_qgan(cfg, hp), ValidationError);
  hp = {};
  hp.gen_iters_per_epoch = 0;
  CHECK_THROWS_AS(train_qgan(cfg, hp), ValidationError);
  cfg.discriminator_settings = 2;
  CHECK_THROWS_AS(train_qgan(cfg, {}), ValidationError);
  cfg = hadamard_config();
  cfg.shots = 0;
  CHECK_THROWS_AS(train_qgan(cfg, {}), SizeError);
}
