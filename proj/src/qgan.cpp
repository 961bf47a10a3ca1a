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

#include "sqgen/qgan.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <random>

#include "sqgen/errors.hpp"

namespace sqgen::qgan {

namespace {

DiscriminatorModel at_half_pi(const DiscriminatorModel& disc) {
  DiscriminatorModel d = disc;
  d.theta = synergic::regime_theta(synergic::Regime::Discriminator);
  return d;
}

// One player of the alternating game: its slice of the trainable vector and
// an optimizer that survives across epochs.
class Player {
 public:
  Player(std::vector<std::size_t> slots, optim::CostFn cost)
      : slots_(std::move(slots)), handle_(slots_.size(), std::move(cost)) {}

  const std::vector<std::size_t>& slots() const { return slots_; }
  std::uint64_t evaluations() const { return handle_.evaluations(); }

  optim::Vector gather(const optim::Vector& x) const {
    optim::Vector y(slots_.size());
    for (std::size_t i = 0; i < slots_.size(); ++i) y[i] = x[slots_[i]];
    return y;
  }
  void scatter(std::span<const double> y, optim::Vector& x) const {
    for (std::size_t i = 0; i < slots_.size(); ++i) x[slots_[i]] = y[i];
  }

  // Runs `iters` optimizer steps starting from the current shared vector and
  // writes the result back.
  void play(const synergic::SqgenTrainConfig& config, const optim::GradientFn& gradient,
            std::size_t iters, optim::Vector& x) {
    if (slots_.empty()) return;
    if (config.optimizer == synergic::OptimizerKind::NelderMead) {
      if (!nm_) {
        optim::NelderMeadOptions opt;
        opt.simplex_step = config.simplex_step;
        opt.max_iter = std::numeric_limits<std::size_t>::max();
        nm_ = std::make_unique<optim::NelderMead>(handle_, gather(x), opt);
      } else {
        nm_->refresh();
      }
      nm_->run(iters);
      scatter(nm_->best_params(), x);
    } else {
      if (!bfgs_) {
        optim::BfgsOptions opt;
        opt.max_iter = std::numeric_limits<std::size_t>::max();
        bfgs_ = std::make_unique<optim::Bfgs>(handle_, gradient, gather(x), opt);
      } else {
        bfgs_->refresh();
      }
      bfgs_->run(iters);
      scatter(bfgs_->params(), x);
    }
  }

 private:
  std::vector<std::size_t> slots_;
  optim::CostHandle handle_;
  std::unique_ptr<optim::NelderMead> nm_;
  std::unique_ptr<optim::Bfgs> bfgs_;
};

}  // namespace

CircuitSpec build_qgan_disc_real(const SourceSpec& source, const DiscriminatorModel& disc,
                                 const std::string& label, std::size_t z_R, std::size_t z_D) {
  if (z_R >= source.variants.size()) throw IndexError("source variant out of range");
  return synergic::build_response_circuit(source.variants[z_R].prep, at_half_pi(disc), label, z_D);
}

CircuitSpec build_qgan_disc_fake(const GeneratorModel& gen, const DiscriminatorModel& disc,
                                 const std::string& label, std::size_t z_G, std::size_t z_D) {
  const int n = gen.spec.n_qubits;
  return synergic::build_response_circuit(synergic::generator_circuit(gen, label, z_G, n, 0),
                                          at_half_pi(disc), label, z_D);
}

CircuitSpec build_qgan_fidelity(const SourceSpec& source, const GeneratorModel& gen,
                                const std::string& label, std::size_t z_R, std::size_t z_G) {
  if (z_R >= source.variants.size()) throw IndexError("source variant out of range");
  const int n = source.n_data_qubits;
  CircuitSpec c(n);
  c.classical_label = label;
  c.append(source.variants[z_R].prep);
  c.append(inverse(synergic::generator_circuit(gen, label, z_G, n, 0)));
  return c;
}

RegisterAudit audit_registers(int n_data) {
  const auto source = synergic::ghz_source(n_data);
  const ansatz::AnsatzSpec spec{n_data, ansatz::Structure::FullCascade};
  GeneratorModel gen;
  gen.spec = spec;
  gen.params[source.label] = ansatz::AnsatzParams(ansatz::param_count(spec), 0.0);
  DiscriminatorModel disc;
  disc.spec = spec;
  disc.banks[source.label] = {{ansatz::AnsatzParams(ansatz::param_count(spec), 0.0), 1.0}};

  RegisterAudit a;
  a.sqgen = synergic::build_sqgen_circuit(source, gen, disc, source.label, 0, 0, 1).n_qubits;
  a.sqgen_monitored =
      synergic::build_monitored_circuit(source, gen, disc, source.label, 0, 0).n_qubits;
  a.qgan = build_qgan_disc_real(source, disc, source.label, 0).n_qubits +
           build_qgan_disc_fake(gen, disc, source.label, 0).n_qubits +
           build_qgan_fidelity(source, gen, source.label, 0, 0).n_qubits;
  a.swap_variant = synergic::swap_variant_register_count(n_data);
  return a;
}

QganTrace train_qgan(const synergic::SqgenTrainConfig& config, const QganHyperparams& hyper) {
  config.source.validate();
  if (hyper.disc_iters_per_epoch < 1 || hyper.gen_iters_per_epoch < 1) {
    throw ValidationError("each player needs at least one iteration per epoch");
  }
  if (hyper.eta < 0) throw ValidationError("eta must be non-negative");
  if (config.discriminator_settings != 1) {
    throw ValidationError("adversarial training uses a single discriminator setting");
  }
  if (config.epochs == 0) throw ValidationError("epochs must be positive");
  if (config.shots && *config.shots == 0) throw SizeError("shot count must be at least 1");

  const std::string& label = config.source.label;
  const auto trainable = synergic::trainable_indices(config);
  const std::size_t pg = ansatz::param_count(config.generator_ansatz);
  std::vector<std::size_t> gen_slots, disc_slots;
  for (std::size_t i = 0; i < trainable.size(); ++i) {
    (trainable[i] < pg ? gen_slots : disc_slots).push_back(i);
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> init(-config.init_scale, config.init_scale);
  optim::Vector x(trainable.size());
  for (auto& v : x) v = init(rng);
  std::uint64_t shot_stream = rng();

  auto models = [&](const optim::Vector& y) {
    return synergic::unpack(config, synergic::expand(config, y));
  };
  auto mode = [&] {
    return config.shots ? synergic::EvalMode::sampled(*config.shots, shot_stream++)
                        : synergic::EvalMode::exact();
  };

  Player disc_player(disc_slots, [&](std::span<const double> y) {
    optim::Vector trial = x;
    for (std::size_t i = 0; i < disc_slots.size(); ++i) trial[disc_slots[i]] = y[i];
    const auto [gen, disc] = models(trial);
    const auto pq = synergic::eval_pq(config.source, gen, disc, label, mode());
    return -(std::abs(pq.p - pq.q) + hyper.eta * pq.p);
  });
  Player gen_player(gen_slots, [&](std::span<const double> y) {
    optim::Vector trial = x;
    for (std::size_t i = 0; i < gen_slots.size(); ++i) trial[gen_slots[i]] = y[i];
    const auto [gen, disc] = models(trial);
    return 1.0 - synergic::mean_fidelity(config.source, gen, label, mode());
  });
  const auto gradient = optim::finite_difference(config.fd_eps);

  QganTrace trace;
  const auto start = std::chrono::steady_clock::now();
  auto record = [&](std::size_t epoch) {
    const auto [gen, disc] = models(x);
    synergic::EpochRecord r;
    r.epoch = epoch;
    r.metrics.J = std::numeric_limits<double>::quiet_NaN();
    r.metrics.J_linear = std::numeric_limits<double>::quiet_NaN();
    r.metrics.F = synergic::mean_fidelity(config.source, gen, label, synergic::EvalMode::exact());
    const auto pq = synergic::eval_pq(config.source, gen, disc, label, synergic::EvalMode::exact());
    r.metrics.p = pq.p;
    r.metrics.q = pq.q;
    r.evaluations = disc_player.evaluations() + gen_player.evaluations();
    if (config.timing) {
      r.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    trace.records.push_back(r);
  };

  auto unchanged = [&](const optim::Vector& before, const std::vector<std::size_t>& slots) {
    for (auto s : slots) {
      if (before[s] != x[s]) return false;
    }
    return true;
  };

  record(0);
  for (std::size_t e = 1; e <= config.epochs; ++e) {
    optim::Vector before = x;
    auto t0 = std::chrono::steady_clock::now();
    disc_player.play(config, gradient, hyper.disc_iters_per_epoch, x);
    auto t1 = std::chrono::steady_clock::now();
    trace.freeze_audit = trace.freeze_audit && unchanged(before, gen_slots);
    before = x;
    gen_player.play(config, gradient, hyper.gen_iters_per_epoch, x);
    auto t2 = std::chrono::steady_clock::now();
    trace.freeze_audit = trace.freeze_audit && unchanged(before, disc_slots);
    if (config.timing) {
      trace.disc_wall_s += std::chrono::duration<double>(t1 - t0).count();
      trace.gen_wall_s += std::chrono::duration<double>(t2 - t1).count();
    }
    record(e);
  }

  trace.params = synergic::expand(config, x);
  trace.disc_evaluations = disc_player.evaluations();
  trace.gen_evaluations = gen_player.evaluations();
  trace.evaluations = trace.disc_evaluations + trace.gen_evaluations;
  const double final_f = trace.records.back().metrics.F;
  trace.converged = final_f > 1 - 1e-6;
  trace.message = trace.converged ? "generator reproduces the source" : "epoch budget exhausted";
  auto [gen, disc] = models(x);
  trace.generator = std::move(gen);
  trace.discriminator = std::move(disc);
  return trace;
}

}  // namespace sqgen::qgan
