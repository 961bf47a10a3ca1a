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

// Synergic generator/discriminator circuits, costs and training.
//
// Register layout for every circuit built here: qubit 0 is the
// discriminator ancilla and qubits 1..n hold the data register. The
// monitored circuit adds the branch selector as qubit n + 1.

#pragma once

#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "sqgen/ansatz.hpp"
#include "sqgen/circuit.hpp"
#include "sqgen/optim.hpp"
#include "sqgen/statevector.hpp"

namespace sqgen::synergic {

struct SourceVariant {
  CircuitSpec prep;
  double probability = 1.0;
};

/// Fixed preparation of the real data: one circuit per value of z_R.
struct SourceSpec {
  std::string label;
  int n_data_qubits = 1;
  std::vector<SourceVariant> variants;

  /// Throws ValidationError unless probabilities sum to 1 within 1e-12 and
  /// every circuit acts on n_data_qubits.
  void validate() const;
};

/// |+>, label "x".
SourceSpec hadamard_source();
/// The two eigenstates of X, Y or Z (axis 'x', 'y', 'z'), equiprobable.
SourceSpec pauli_source(char axis);
/// GHZ state on n qubits, label "e".
SourceSpec ghz_source(int n);

/// Value of z_G: X on the listed data qubits before the generator block.
struct GeneratorVariant {
  std::vector<int> flips;
  double probability = 1.0;
};

struct GeneratorModel {
  ansatz::AnsatzSpec spec;
  std::map<std::string, ansatz::AnsatzParams> params;
  std::vector<GeneratorVariant> variants{GeneratorVariant{}};

  void validate() const;
};

/// One value of z_D: the unitary U preparing the pointer state U|0>.
struct DiscriminatorSetting {
  ansatz::AnsatzParams params;
  double probability = 1.0;
};

struct DiscriminatorModel {
  ansatz::AnsatzSpec spec;
  std::map<std::string, std::vector<DiscriminatorSetting>> banks;
  double theta = std::numbers::pi / 4;

  void validate() const;
};

/// Discriminator regime measures at theta = pi/2 and reports p' = p; the
/// comparator regime uses theta = pi/4 and reports p' = 2p - 1.
enum class Regime { Discriminator, Comparator };

double regime_theta(Regime regime);

struct Response {
  double value = 0.0;  ///< raw p', may be negative in the comparator regime
  bool negative = false;
};

/// Parameter indices attached to the generated gates, so circuits can be
/// differentiated with respect to a flat training vector.
struct ParamTags {
  std::size_t generator = 0;
  std::size_t discriminator = 0;
  /// Stride between consecutive discriminator settings; 0 means the
  /// discriminator parameter count.
  std::size_t discriminator_stride = 0;
};

/// 𝒢 for variant z_G on `n_qubits` qubits with data starting at `offset`.
CircuitSpec generator_circuit(const GeneratorModel& gen, const std::string& label,
                              std::size_t z_G, int n_qubits, int offset,
                              std::size_t param_base = 0);
Statevector generator_state(const GeneratorModel& gen, const std::string& label,
                            std::size_t z_G);

/**
 * D = 1 (x) P + R_y(theta) (x) (1 - P) with P = U|0><0|U^dagger, on n + 1
 * qubits: U^dagger on data, R_y(theta) on the ancilla unless the data reads
 * all zeros, U on data.
 */
CircuitSpec discriminator_unitary(const DiscriminatorModel& disc, const std::string& label,
                                  std::size_t z_D = 0, std::size_t param_base = 0);

/// |<0|<state| D |0>|state>|^2 averaged over z_D: the probability that the
/// ancilla reads 0 and the data register returns to the input state.
double response_probability(const Statevector& state, const DiscriminatorModel& disc,
                            const std::string& label, double theta);

/// prep on data, D, prep^dagger on data, on n + 1 qubits. The probability of
/// reading all zeros is response_probability of prep|0>.
CircuitSpec build_response_circuit(const CircuitSpec& prep, const DiscriminatorModel& disc,
                                   const std::string& label, std::size_t z_D = 0);

Response disc_response_p(const Statevector& state, const DiscriminatorModel& disc,
                         Regime regime, const std::string& label);

/**
 * Branch 1: source prep, D, X on the ancilla, D^dagger, 𝒢^dagger.
 * Branch 0: source prep, 𝒢^dagger; the ancilla stays idle.
 */
CircuitSpec build_sqgen_circuit(const SourceSpec& source, const GeneratorModel& gen,
                                const DiscriminatorModel& disc, const std::string& label,
                                std::size_t z_R, std::size_t z_G, int branch,
                                std::size_t z_D = 0, const ParamTags& tags = {});

/**
 * Both branches in one circuit on n + 2 qubits: the selector (last qubit) is
 * put in |+> and the discriminator section is controlled on it reading 1.
 * P(selector = b, rest = 0) is half the branch-b joint probability.
 */
CircuitSpec build_monitored_circuit(const SourceSpec& source, const GeneratorModel& gen,
                                    const DiscriminatorModel& disc, const std::string& label,
                                    std::size_t z_R, std::size_t z_G, std::size_t z_D = 0);

struct EvalMode {
  /// Unset means exact probabilities from amplitudes.
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;

  static EvalMode exact() { return {}; }
  static EvalMode sampled(std::uint64_t shots, std::uint64_t seed) { return {shots, seed}; }
};

/// Symmetric: 1 - 2S in [-1, 1]. Linear: 1 - S in [0, 1]. S is the
/// weighted branch-1 joint probability of ancilla and data reading zero.
enum class CostForm { Symmetric, Linear };

/// Cost as constant + weighted projector terms, one term per (z_G, z_R, z_D).
optim::CircuitObjective cost_objective(const SourceSpec& source, const GeneratorModel& gen,
                                       const DiscriminatorModel& disc, const std::string& label,
                                       const ParamTags& tags = {},
                                       CostForm form = CostForm::Symmetric);

/// Throws SizeError when shots is set to 0.
double eval_cost_J(const SourceSpec& source, const GeneratorModel& gen,
                   const DiscriminatorModel& disc, const std::string& label, const EvalMode& mode,
                   CostForm form = CostForm::Symmetric);

/// Probability that 𝒢_{z_G}^dagger maps the z_R source state to |0...0>.
double eval_fidelity_F(const SourceSpec& source, const GeneratorModel& gen,
                       const std::string& label, std::size_t z_R, std::size_t z_G,
                       const EvalMode& mode);

/// F averaged over paired variants (z_R = z_G = k) when the variant counts
/// match, otherwise F for the first variant of each.
double mean_fidelity(const SourceSpec& source, const GeneratorModel& gen,
                     const std::string& label, const EvalMode& mode);

struct PQ {
  double p = 0.0;
  double q = 0.0;
  bool p_negative = false;
  bool q_negative = false;
};

/// p for the source assemblage, q for the generated one, each read from
/// build_response_circuit.
PQ eval_pq(const SourceSpec& source, const GeneratorModel& gen, const DiscriminatorModel& disc,
           const std::string& label, const EvalMode& mode,
           Regime regime = Regime::Discriminator);

struct SqgenMetrics {
  double J = 0.0;         ///< symmetric form
  double J_linear = 0.0;  ///< linear form
  double F = 0.0;
  double p = 0.0;
  double q = 0.0;
};

SqgenMetrics evaluate_metrics(const SourceSpec& source, const GeneratorModel& gen,
                              const DiscriminatorModel& disc, const std::string& label);

// Closed-form assemblage costs over pure states, used to reason about which
// generator a discriminator prefers without building circuits.

struct PureAssemblage {
  std::vector<Statevector> states;
  std::vector<double> probabilities;
};

/// 1 - 2 sum g p q <phi|sigma|phi>^2 Tr(sigma rho).
double closed_form_J(const PureAssemblage& pointers, const PureAssemblage& generated,
                     const PureAssemblage& source);
/// 1 - sum q g <phi|rho|phi>^2: how well the pointers cover the source.
double closed_form_JD_star(const PureAssemblage& pointers, const PureAssemblage& source);
/// 1 - sum p q Tr(sigma rho), the generator-only cost.
double generator_cost_JG(const PureAssemblage& generated, const PureAssemblage& source);

// Qubit accounting.
int sqgen_register_count(int n_data);            // n + 1
int monitored_register_count(int n_data);        // n + 2
int swap_variant_register_count(int n_data);     // 2n + 4

enum class OptimizerKind { NelderMead, Bfgs };
enum class GradientKind { FiniteDifference, ParameterShift };

struct SqgenTrainConfig {
  SourceSpec source;
  ansatz::AnsatzSpec generator_ansatz;
  ansatz::AnsatzSpec discriminator_ansatz;
  std::vector<GeneratorVariant> generator_variants{GeneratorVariant{}};
  std::size_t discriminator_settings = 1;

  OptimizerKind optimizer = OptimizerKind::NelderMead;
  GradientKind gradient = GradientKind::FiniteDifference;
  double fd_eps = 1e-6;
  std::size_t epochs = 60;
  std::size_t iters_per_epoch = 5;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
  double simplex_step = 0.5;
  /// Initial parameters are uniform in [-init_scale, init_scale].
  double init_scale = std::numbers::pi;
  double theta = std::numbers::pi / 4;
  /// Stop once this many cost evaluations have been spent (0: no limit).
  std::uint64_t max_evaluations = 0;
  /// Keep the parameters listed by ansatz::basis_input_phase_indices at 0
  /// instead of optimizing them; the cost does not depend on them.
  bool freeze_phase_params = true;
  bool timing = true;
};

struct EpochRecord {
  std::size_t epoch = 0;
  SqgenMetrics metrics;
  std::uint64_t evaluations = 0;
  double wall_s = 0.0;
};

struct TrainingTrace {
  std::vector<EpochRecord> records;
  optim::Vector params;  ///< full vector
  GeneratorModel generator;
  DiscriminatorModel discriminator;
  bool converged = false;
  std::uint64_t evaluations = 0;
  std::string message;
};

/// Length of the full parameter vector: the generator block first, then one
/// block per discriminator setting.
std::size_t full_dimension(const SqgenTrainConfig& config);
/// Positions in the full vector that the optimizer moves.
std::vector<std::size_t> trainable_indices(const SqgenTrainConfig& config);
std::size_t training_dimension(const SqgenTrainConfig& config);
/// Full vector from the trainable entries; frozen entries are 0.
optim::Vector expand(const SqgenTrainConfig& config, std::span<const double> trainable);
/// Models from a full parameter vector.
std::pair<GeneratorModel, DiscriminatorModel> unpack(const SqgenTrainConfig& config,
                                                     std::span<const double> full);

/**
 * Joint minimization of the symmetric cost over the concatenated generator
 * and discriminator parameters. Metrics at the end of each epoch are exact
 * and are not counted as cost evaluations. An optimizer that stops improving
 * returns a trace with converged = false rather than throwing.
 */
TrainingTrace train_sqgen(const SqgenTrainConfig& config);

}  // namespace sqgen::synergic
