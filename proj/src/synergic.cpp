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

#include "sqgen/synergic.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "sqgen/errors.hpp"

namespace sqgen::synergic {

namespace {

constexpr double kProbTol = 1e-12;

void check_distribution(double total, const char* what) {
  if (std::abs(total - 1.0) > kProbTol) {
    throw ValidationError(std::string(what) + " probabilities sum to " + std::to_string(total));
  }
}

const std::vector<DiscriminatorSetting>& bank(const DiscriminatorModel& disc,
                                              const std::string& label) {
  auto it = disc.banks.find(label);
  if (it == disc.banks.end() || it->second.empty()) {
    throw ValidationError("no discriminator bank for label '" + label + "'");
  }
  return it->second;
}

const ansatz::AnsatzParams& generator_params(const GeneratorModel& gen, const std::string& label) {
  auto it = gen.params.find(label);
  if (it == gen.params.end()) throw ValidationError("no generator bank for label '" + label + "'");
  return it->second;
}

// Mixes a term index into a seed so each sampled circuit gets its own stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (k + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Probability of `outcome` on `qubits`, exact or estimated from counts.
double measure(const CircuitSpec& circuit, std::span<const int> qubits,
               std::span<const int> outcome, const EvalMode& mode, std::uint64_t k) {
  const auto state = apply_circuit(init_zero(circuit.n_qubits), circuit);
  if (!mode.shots) return marginal_probability(state, qubits, outcome);
  if (*mode.shots == 0) throw SizeError("shot count must be at least 1");
  const auto counts = sample_counts(state, *mode.shots, derive_seed(mode.seed, k));
  std::uint64_t hits = 0;
  for (const auto& [index, n] : counts) {
    bool match = true;
    for (std::size_t j = 0; j < qubits.size() && match; ++j) {
      const bool bit = (index & qubit_mask(qubits[j], circuit.n_qubits)) != 0;
      match = bit == (outcome[j] != 0);
    }
    if (match) hits += n;
  }
  return static_cast<double>(hits) / static_cast<double>(*mode.shots);
}

std::vector<int> iota_qubits(int first, int count) {
  std::vector<int> q(count);
  for (int i = 0; i < count; ++i) q[i] = first + i;
  return q;
}

// |0>_ancilla (x) state
Statevector with_ancilla(const Statevector& state) {
  std::vector<cplx> amps(2 * state.dimension(), cplx{0, 0});
  for (std::size_t i = 0; i < state.dimension(); ++i) amps[i] = state[i];
  return Statevector::from_amplitudes(std::move(amps));
}

double transform(Regime regime, double p) { return regime == Regime::Comparator ? 2 * p - 1 : p; }

}  // namespace

// ------------------------------------------------------------------- models

void SourceSpec::validate() const {
  if (variants.empty()) throw ValidationError("source has no variants");
  double total = 0;
  for (const auto& v : variants) {
    if (v.prep.n_qubits != n_data_qubits) {
      throw ValidationError("source preparation acts on " + std::to_string(v.prep.n_qubits) +
                            " qubits, expected " + std::to_string(n_data_qubits));
    }
    total += v.probability;
  }
  check_distribution(total, "source");
}

SourceSpec hadamard_source() {
  CircuitSpec c(1);
  c.add(GateOp::h(0));
  return {"x", 1, {{c, 1.0}}};
}

SourceSpec pauli_source(char axis) {
  SourceSpec s{std::string(1, axis), 1, {}};
  for (int z = 0; z < 2; ++z) {
    CircuitSpec c(1);
    if (z == 1) c.add(GateOp::x(0));
    switch (axis) {
      case 'x': c.add(GateOp::h(0)); break;
      case 'y': c.add(GateOp::h(0)).add(GateOp::phase(0, std::numbers::pi / 2)); break;
      case 'z': break;
      default: throw ValidationError(std::string("unknown Pauli axis '") + axis + "'");
    }
    s.variants.push_back({c, 0.5});
  }
  return s;
}

SourceSpec ghz_source(int n) {
  if (n < 1) throw SizeError("GHZ source needs at least one qubit");
  return {"e", n, {{ghz_preparation(n), 1.0}}};
}

void GeneratorModel::validate() const {
  double total = 0;
  for (const auto& v : variants) {
    for (int q : v.flips) {
      if (q < 0 || q >= spec.n_qubits) throw IndexError("generator flip outside the register");
    }
    total += v.probability;
  }
  check_distribution(total, "generator");
  for (const auto& [label, p] : params) {
    if (p.size() != ansatz::param_count(spec)) {
      throw ShapeError("generator bank '" + label + "' has the wrong parameter count");
    }
  }
}

void DiscriminatorModel::validate() const {
  for (const auto& [label, settings] : banks) {
    double total = 0;
    for (const auto& s : settings) {
      if (s.params.size() != ansatz::param_count(spec)) {
        throw ShapeError("discriminator bank '" + label + "' has the wrong parameter count");
      }
      total += s.probability;
    }
    check_distribution(total, "discriminator");
  }
}

double regime_theta(Regime regime) {
  return regime == Regime::Discriminator ? std::numbers::pi / 2 : std::numbers::pi / 4;
}

// ----------------------------------------------------------------- circuits

CircuitSpec generator_circuit(const GeneratorModel& gen, const std::string& label,
                              std::size_t z_G, int n_qubits, int offset,
                              std::size_t param_base) {
  if (z_G >= gen.variants.size()) throw IndexError("generator variant out of range");
  CircuitSpec c(n_qubits);
  for (int q : gen.variants[z_G].flips) c.add(GateOp::x(offset + q));
  c.append(ansatz::build_unitary_block(gen.spec, generator_params(gen, label), n_qubits, offset,
                                       param_base));
  return c;
}

Statevector generator_state(const GeneratorModel& gen, const std::string& label,
                            std::size_t z_G) {
  const int n = gen.spec.n_qubits;
  return apply_circuit(init_zero(n), generator_circuit(gen, label, z_G, n, 0));
}

CircuitSpec discriminator_unitary(const DiscriminatorModel& disc, const std::string& label,
                                  std::size_t z_D, std::size_t param_base) {
  const auto& settings = bank(disc, label);
  if (z_D >= settings.size()) throw IndexError("discriminator setting out of range");
  const int n = disc.spec.n_qubits;
  const CircuitSpec u =
      ansatz::build_unitary_block(disc.spec, settings[z_D].params, n + 1, 1, param_base);
  CircuitSpec c(n + 1);
  c.append(inverse(u));
  c.add(GateOp::ry(0, disc.theta));
  GateOp undo = GateOp::ry(0, -disc.theta);
  for (int q = 1; q <= n; ++q) undo.controls.push_back({q, false});
  c.add(std::move(undo));
  c.append(u);
  return c;
}

double response_probability(const Statevector& state, const DiscriminatorModel& disc,
                            const std::string& label, double theta) {
  DiscriminatorModel d = disc;
  d.theta = theta;
  const auto& settings = bank(d, label);
  const auto input = with_ancilla(state);
  double p = 0;
  for (std::size_t z = 0; z < settings.size(); ++z) {
    const auto out = apply_circuit(input, discriminator_unitary(d, label, z));
    p += settings[z].probability * std::norm(inner_product(input, out));
  }
  return p;
}

CircuitSpec build_response_circuit(const CircuitSpec& prep, const DiscriminatorModel& disc,
                                   const std::string& label, std::size_t z_D) {
  const int n = disc.spec.n_qubits;
  if (prep.n_qubits != n) throw ShapeError("preparation does not match the data register");
  CircuitSpec c(n + 1);
  c.classical_label = label;
  c.append(prep, 1);
  c.append(discriminator_unitary(disc, label, z_D));
  c.append(inverse(prep), 1);
  return c;
}

Response disc_response_p(const Statevector& state, const DiscriminatorModel& disc,
                         Regime regime, const std::string& label) {
  const double p = response_probability(state, disc, label, regime_theta(regime));
  const double v = transform(regime, p);
  return {v, v < 0};
}

CircuitSpec build_sqgen_circuit(const SourceSpec& source, const GeneratorModel& gen,
                                const DiscriminatorModel& disc, const std::string& label,
                                std::size_t z_R, std::size_t z_G, int branch,
                                std::size_t z_D, const ParamTags& tags) {
  if (z_R >= source.variants.size()) throw IndexError("source variant out of range");
  if (branch != 0 && branch != 1) throw ValidationError("decision branch must be 0 or 1");
  const int n = source.n_data_qubits;
  if (gen.spec.n_qubits != n || disc.spec.n_qubits != n) {
    throw ShapeError("generator, discriminator and source disagree on the data register");
  }
  CircuitSpec c(n + 1);
  c.classical_label = label;
  c.append(source.variants[z_R].prep, 1);
  if (branch == 1) {
    const std::size_t stride =
        tags.discriminator_stride != 0 ? tags.discriminator_stride : ansatz::param_count(disc.spec);
    const CircuitSpec d = discriminator_unitary(disc, label, z_D, tags.discriminator + z_D * stride);
    c.append(d);
    c.add(GateOp::x(0));
    c.append(inverse(d));
  }
  c.append(inverse(generator_circuit(gen, label, z_G, n + 1, 1, tags.generator)));
  return c;
}

CircuitSpec build_monitored_circuit(const SourceSpec& source, const GeneratorModel& gen,
                                    const DiscriminatorModel& disc, const std::string& label,
                                    std::size_t z_R, std::size_t z_G, std::size_t z_D) {
  const int n = source.n_data_qubits;
  const int selector = n + 1;
  CircuitSpec c(n + 2);
  c.classical_label = label;
  c.add(GateOp::h(selector));
  c.append(source.variants.at(z_R).prep, 1);
  CircuitSpec section(n + 1);
  const CircuitSpec d = discriminator_unitary(disc, label, z_D);
  section.append(d);
  section.add(GateOp::x(0));
  section.append(inverse(d));
  for (GateOp g : section.gates) {
    g.controls.push_back({selector, true});
    c.add(std::move(g));
  }
  c.append(inverse(generator_circuit(gen, label, z_G, n + 1, 1)));
  return c;
}

// -------------------------------------------------------------- evaluation

optim::CircuitObjective cost_objective(const SourceSpec& source, const GeneratorModel& gen,
                                       const DiscriminatorModel& disc, const std::string& label,
                                       const ParamTags& tags, CostForm form) {
  source.validate();
  gen.validate();
  disc.validate();
  const double scale = form == CostForm::Symmetric ? 2.0 : 1.0;
  const auto& settings = bank(disc, label);
  const int n = source.n_data_qubits;
  const std::vector<int> qubits = iota_qubits(0, n + 1);
  const std::vector<int> zeros(n + 1, 0);

  optim::CircuitObjective obj;
  obj.constant = 1.0;
  for (std::size_t zg = 0; zg < gen.variants.size(); ++zg) {
    for (std::size_t zr = 0; zr < source.variants.size(); ++zr) {
      for (std::size_t zd = 0; zd < settings.size(); ++zd) {
        const double w = settings[zd].probability * gen.variants[zg].probability *
                         source.variants[zr].probability;
        if (w == 0) continue;
        obj.terms.push_back({build_sqgen_circuit(source, gen, disc, label, zr, zg, 1, zd, tags),
                             qubits, zeros, -scale * w});
      }
    }
  }
  return obj;
}

double eval_cost_J(const SourceSpec& source, const GeneratorModel& gen,
                   const DiscriminatorModel& disc, const std::string& label, const EvalMode& mode,
                   CostForm form) {
  if (mode.shots && *mode.shots == 0) throw SizeError("shot count must be at least 1");
  const auto obj = cost_objective(source, gen, disc, label, {}, form);
  if (!mode.shots) return obj.evaluate();
  double j = obj.constant;
  for (std::size_t k = 0; k < obj.terms.size(); ++k) {
    const auto& t = obj.terms[k];
    j += t.weight * measure(t.circuit, t.qubits, t.outcome, mode, k);
  }
  return j;
}

double eval_fidelity_F(const SourceSpec& source, const GeneratorModel& gen,
                       const std::string& label, std::size_t z_R, std::size_t z_G,
                       const EvalMode& mode) {
  if (z_R >= source.variants.size()) throw IndexError("source variant out of range");
  const int n = source.n_data_qubits;
  CircuitSpec c(n);
  c.append(source.variants[z_R].prep);
  c.append(inverse(generator_circuit(gen, label, z_G, n, 0)));
  const auto qubits = iota_qubits(0, n);
  const std::vector<int> zeros(n, 0);
  return measure(c, qubits, zeros, mode, z_R * 1315423911ull + z_G);
}

double mean_fidelity(const SourceSpec& source, const GeneratorModel& gen,
                     const std::string& label, const EvalMode& mode) {
  if (source.variants.size() != gen.variants.size()) {
    return eval_fidelity_F(source, gen, label, 0, 0, mode);
  }
  double f = 0;
  for (std::size_t z = 0; z < source.variants.size(); ++z) {
    f += eval_fidelity_F(source, gen, label, z, z, mode);
  }
  return f / static_cast<double>(source.variants.size());
}

PQ eval_pq(const SourceSpec& source, const GeneratorModel& gen, const DiscriminatorModel& disc,
           const std::string& label, const EvalMode& mode, Regime regime) {
  if (mode.shots && *mode.shots == 0) throw SizeError("shot count must be at least 1");
  DiscriminatorModel d = disc;
  d.theta = regime_theta(regime);
  const auto& settings = bank(d, label);
  const int n = source.n_data_qubits;
  const auto qubits = iota_qubits(0, n + 1);
  const std::vector<int> zeros(n + 1, 0);
  std::uint64_t k = 0;

  auto response = [&](const CircuitSpec& prep) {
    double p = 0;
    for (std::size_t zd = 0; zd < settings.size(); ++zd) {
      p += settings[zd].probability *
           measure(build_response_circuit(prep, d, label, zd), qubits, zeros, mode, k++);
    }
    return transform(regime, p);
  };

  PQ out;
  for (const auto& v : source.variants) out.p += v.probability * response(v.prep);
  for (std::size_t zg = 0; zg < gen.variants.size(); ++zg) {
    out.q += gen.variants[zg].probability * response(generator_circuit(gen, label, zg, n, 0));
  }
  out.p_negative = out.p < 0;
  out.q_negative = out.q < 0;
  return out;
}

SqgenMetrics evaluate_metrics(const SourceSpec& source, const GeneratorModel& gen,
                              const DiscriminatorModel& disc, const std::string& label) {
  const auto exact = EvalMode::exact();
  SqgenMetrics m;
  m.J = eval_cost_J(source, gen, disc, label, exact, CostForm::Symmetric);
  m.J_linear = (1 + m.J) / 2;
  m.F = mean_fidelity(source, gen, label, exact);
  const auto pq = eval_pq(source, gen, disc, label, exact);
  m.p = pq.p;
  m.q = pq.q;
  return m;
}

// -------------------------------------------------------------- closed form

namespace {

void check_assemblage(const PureAssemblage& a) {
  if (a.states.size() != a.probabilities.size() || a.states.empty()) {
    throw ShapeError("assemblage needs one probability per state");
  }
  double total = 0;
  for (double p : a.probabilities) total += p;
  check_distribution(total, "assemblage");
}

}  // namespace

double closed_form_J(const PureAssemblage& pointers, const PureAssemblage& generated,
                     const PureAssemblage& source) {
  check_assemblage(pointers);
  check_assemblage(generated);
  check_assemblage(source);
  double s = 0;
  for (std::size_t d = 0; d < pointers.states.size(); ++d) {
    for (std::size_t g = 0; g < generated.states.size(); ++g) {
      const double a2 = fidelity_pure(pointers.states[d], generated.states[g]);
      for (std::size_t r = 0; r < source.states.size(); ++r) {
        s += pointers.probabilities[d] * generated.probabilities[g] * source.probabilities[r] *
             a2 * a2 * fidelity_pure(generated.states[g], source.states[r]);
      }
    }
  }
  return 1 - 2 * s;
}

double closed_form_JD_star(const PureAssemblage& pointers, const PureAssemblage& source) {
  check_assemblage(pointers);
  check_assemblage(source);
  double s = 0;
  for (std::size_t d = 0; d < pointers.states.size(); ++d) {
    for (std::size_t r = 0; r < source.states.size(); ++r) {
      const double a2 = fidelity_pure(pointers.states[d], source.states[r]);
      s += pointers.probabilities[d] * source.probabilities[r] * a2 * a2;
    }
  }
  return 1 - s;
}

double generator_cost_JG(const PureAssemblage& generated, const PureAssemblage& source) {
  check_assemblage(generated);
  check_assemblage(source);
  double s = 0;
  for (std::size_t g = 0; g < generated.states.size(); ++g) {
    for (std::size_t r = 0; r < source.states.size(); ++r) {
      s += generated.probabilities[g] * source.probabilities[r] *
           fidelity_pure(generated.states[g], source.states[r]);
    }
  }
  return 1 - s;
}

int sqgen_register_count(int n_data) { return n_data + 1; }
int monitored_register_count(int n_data) { return n_data + 2; }
int swap_variant_register_count(int n_data) { return 2 * n_data + 4; }

// ----------------------------------------------------------------- training

std::size_t full_dimension(const SqgenTrainConfig& config) {
  return ansatz::param_count(config.generator_ansatz) +
         config.discriminator_settings * ansatz::param_count(config.discriminator_ansatz);
}

std::vector<std::size_t> trainable_indices(const SqgenTrainConfig& config) {
  const std::size_t pg = ansatz::param_count(config.generator_ansatz);
  const std::size_t pd = ansatz::param_count(config.discriminator_ansatz);
  std::vector<bool> frozen(full_dimension(config), false);
  if (config.freeze_phase_params) {
    for (auto i : ansatz::basis_input_phase_indices(config.generator_ansatz)) frozen[i] = true;
    for (std::size_t k = 0; k < config.discriminator_settings; ++k) {
      for (auto i : ansatz::basis_input_phase_indices(config.discriminator_ansatz)) {
        frozen[pg + k * pd + i] = true;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < frozen.size(); ++i) {
    if (!frozen[i]) out.push_back(i);
  }
  return out;
}

std::size_t training_dimension(const SqgenTrainConfig& config) {
  return trainable_indices(config).size();
}

optim::Vector expand(const SqgenTrainConfig& config, std::span<const double> trainable) {
  const auto idx = trainable_indices(config);
  if (trainable.size() != idx.size()) throw ShapeError("training vector has wrong size");
  optim::Vector full(full_dimension(config), 0.0);
  for (std::size_t i = 0; i < idx.size(); ++i) full[idx[i]] = trainable[i];
  return full;
}

std::pair<GeneratorModel, DiscriminatorModel> unpack(const SqgenTrainConfig& config,
                                                     std::span<const double> x) {
  if (x.size() != full_dimension(config)) throw ShapeError("parameter vector has wrong size");
  const std::size_t pg = ansatz::param_count(config.generator_ansatz);
  const std::size_t pd = ansatz::param_count(config.discriminator_ansatz);
  const std::string& label = config.source.label;

  GeneratorModel gen;
  gen.spec = config.generator_ansatz;
  gen.variants = config.generator_variants;
  gen.params[label].assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(pg));

  DiscriminatorModel disc;
  disc.spec = config.discriminator_ansatz;
  disc.theta = config.theta;
  const double g = 1.0 / static_cast<double>(config.discriminator_settings);
  for (std::size_t k = 0; k < config.discriminator_settings; ++k) {
    const auto first = x.begin() + static_cast<std::ptrdiff_t>(pg + k * pd);
    disc.banks[label].push_back({ansatz::AnsatzParams(first, first + static_cast<std::ptrdiff_t>(pd)), g});
  }
  return {std::move(gen), std::move(disc)};
}

TrainingTrace train_sqgen(const SqgenTrainConfig& config) {
  config.source.validate();
  if (config.discriminator_settings == 0) throw ValidationError("need at least one discriminator setting");
  if (config.epochs == 0 || config.iters_per_epoch == 0) {
    throw ValidationError("epochs and iterations per epoch must be positive");
  }
  if (config.shots && *config.shots == 0) throw SizeError("shot count must be at least 1");

  const std::string& label = config.source.label;
  const auto trainable = trainable_indices(config);
  const std::size_t dim = trainable.size();
  const std::size_t pg = ansatz::param_count(config.generator_ansatz);
  const ParamTags tags{0, pg, 0};

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> init(-config.init_scale, config.init_scale);
  optim::Vector x0(dim);
  for (auto& v : x0) v = init(rng);
  // one sampling stream per run, advanced once per cost call
  std::uint64_t shot_stream = rng();

  auto models = [&](std::span<const double> x) { return unpack(config, expand(config, x)); };
  auto cost = [&](std::span<const double> x) {
    const auto [gen, disc] = models(x);
    EvalMode mode;
    if (config.shots) mode = EvalMode::sampled(*config.shots, shot_stream++);
    return eval_cost_J(config.source, gen, disc, label, mode);
  };
  optim::CostHandle f(dim, cost);

  optim::GradientFn gradient = optim::finite_difference(config.fd_eps);
  if (config.gradient == GradientKind::ParameterShift) {
    if (config.shots) throw ValidationError("parameter-shift training runs in exact mode only");
    gradient = [&](optim::CostHandle& h, std::span<const double> x) {
      std::uint64_t shifted = 0;
      const auto full = optim::parameter_shift_gradient(
          [&](std::span<const double> y) {
            const auto [gen, disc] = unpack(config, y);
            return cost_objective(config.source, gen, disc, label, tags);
          },
          expand(config, x), &shifted);
      h.record_evaluations(shifted);
      optim::Vector g(dim);
      for (std::size_t i = 0; i < dim; ++i) g[i] = full[trainable[i]];
      return g;
    };
  }

  const auto start = std::chrono::steady_clock::now();
  TrainingTrace trace;
  auto record = [&](std::size_t epoch, std::span<const double> x) {
    const auto [gen, disc] = models(x);
    EpochRecord r;
    r.epoch = epoch;
    r.metrics = evaluate_metrics(config.source, gen, disc, label);
    r.evaluations = f.evaluations();
    if (config.timing) {
      r.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    trace.records.push_back(r);
  };
  // `reserve` is the most a single optimizer step can spend
  auto over_budget = [&](std::uint64_t reserve = 0) {
    return config.max_evaluations != 0 && f.evaluations() + reserve > config.max_evaluations;
  };

  if (config.optimizer == OptimizerKind::NelderMead) {
    optim::NelderMeadOptions opt;
    opt.simplex_step = config.simplex_step;
    opt.max_iter = config.epochs * config.iters_per_epoch;
    optim::NelderMead nm(f, x0, opt);
    record(0, nm.best_params());
    bool moving = true;
    const std::uint64_t reserve = dim + 2;
    for (std::size_t e = 1; e <= config.epochs && moving && !over_budget(reserve); ++e) {
      for (std::size_t i = 0; i < config.iters_per_epoch && !over_budget(reserve); ++i) {
        if (!nm.step()) {
          moving = false;
          break;
        }
      }
      record(e, nm.best_params());
    }
    trace.params = expand(config, nm.best_params());
    trace.converged = nm.converged();
    trace.message = nm.report().message;
  } else {
    optim::BfgsOptions opt;
    opt.max_iter = config.epochs * config.iters_per_epoch;
    optim::Bfgs solver(f, gradient, x0, opt);
    record(0, solver.params());
    bool moving = true;
    for (std::size_t e = 1; e <= config.epochs && moving && !over_budget(); ++e) {
      for (std::size_t i = 0; i < config.iters_per_epoch && !over_budget(); ++i) {
        if (!solver.step()) {
          moving = false;
          break;
        }
      }
      record(e, solver.params());
    }
    trace.params = expand(config, solver.params());
    trace.converged = solver.converged();
    trace.message = solver.report().message;
  }
  if (config.max_evaluations != 0 && !trace.converged &&
      f.evaluations() + dim + 2 > config.max_evaluations) trace.message = "evaluation budget exhausted";
  trace.evaluations = f.evaluations();
  auto [gen, disc] = unpack(config, trace.params);
  trace.generator = std::move(gen);
  trace.discriminator = std::move(disc);
  return trace;
}

}  // namespace sqgen::synergic
