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

// Adversarial baseline: the discriminator and generator are optimized in
// alternating rounds, each with the other held fixed.

#pragma once

#include <cstdint>
#include <string>

#include "sqgen/synergic.hpp"

namespace sqgen::qgan {

using synergic::DiscriminatorModel;
using synergic::GeneratorModel;
using synergic::SourceSpec;

struct QganHyperparams {
  std::size_t disc_iters_per_epoch = 1;
  std::size_t gen_iters_per_epoch = 1;
  /// Weight of the bonus for classifying real data as real.
  double eta = 0.0;
};

/// Source prep, D at theta = pi/2, prep^dagger. p is P(all zeros).
CircuitSpec build_qgan_disc_real(const SourceSpec& source, const DiscriminatorModel& disc,
                                 const std::string& label, std::size_t z_R,
                                 std::size_t z_D = 0);
/// Generator, D at theta = pi/2, generator^dagger. q is P(all zeros).
CircuitSpec build_qgan_disc_fake(const GeneratorModel& gen, const DiscriminatorModel& disc,
                                 const std::string& label, std::size_t z_G,
                                 std::size_t z_D = 0);
/// Source prep then generator^dagger on n qubits. F is P(all zeros).
CircuitSpec build_qgan_fidelity(const SourceSpec& source, const GeneratorModel& gen,
                                const std::string& label, std::size_t z_R, std::size_t z_G);

/// Qubit counts read off the circuits each method instantiates.
struct RegisterAudit {
  int sqgen = 0;            ///< the synergic circuit
  int sqgen_monitored = 0;  ///< with the branch selector
  int qgan = 0;             ///< sum over the three evaluation circuits
  int swap_variant = 0;     ///< controlled-SWAP variant (closed formula)
};

RegisterAudit audit_registers(int n_data);

struct QganTrace : synergic::TrainingTrace {
  std::uint64_t disc_evaluations = 0;
  std::uint64_t gen_evaluations = 0;
  /// Seconds spent in each round type; 0 when timing is off.
  double disc_wall_s = 0.0;
  double gen_wall_s = 0.0;
  /// Every discriminator round left the generator parameters untouched and
  /// vice versa.
  bool freeze_audit = true;
};

/**
 * Alternating training. The discriminator round maximizes |p - q| + eta p
 * with theta = pi/2; the generator round minimizes 1 - F. Each round keeps its
 * own optimizer across epochs and re-evaluates it when the other player has
 * moved. Records have J set to NaN.
 */
QganTrace train_qgan(const synergic::SqgenTrainConfig& config, const QganHyperparams& hyper);

}  // namespace sqgen::qgan
