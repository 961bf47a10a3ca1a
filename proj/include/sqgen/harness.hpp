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

// Experiment driver behind the sqgenlab CLI: builds the training configs,
// runs them and writes traces, the summary table and run metadata.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqgen/qgan.hpp"
#include "sqgen/synergic.hpp"

namespace sqgen::harness {

enum class Experiment { SingleQubitSource, GhzComparison, DiscriminationSweep, MinimalCircuitVerify };
enum class Method { Sqgen, Qgan, Both };

struct RunConfig {
  Experiment experiment = Experiment::SingleQubitSource;
  int n_qubits = 1;
  Method method = Method::Sqgen;
  synergic::OptimizerKind optimizer = synergic::OptimizerKind::NelderMead;
  std::size_t epochs = 20;
  /// Unset: 5 for SQGEN with Nelder-Mead, 1 otherwise. For QGAN it applies
  /// to each round.
  std::optional<std::size_t> iters_per_epoch;
  /// Unset means exact probabilities.
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
  /// Source for single-qubit-source: "x" is |+>; "y" and "z" are the two
  /// eigenstates of that Pauli with a matching two-valued generator.
  std::string lambda = "x";
  double eta = 0.0;
  double simplex_step = 0.5;
  std::filesystem::path out = ".";
  /// Off: wall-clock columns are left empty so outputs are byte-identical
  /// across runs.
  bool timing = true;

  /// Throws UsageError.
  void validate() const;
};

std::string to_string(Experiment e);
std::string to_string(Method m);
/// Throw UsageError on unknown names.
Experiment parse_experiment(std::string_view name);
Method parse_method(std::string_view name);
/// "nm", "nelder-mead", "bfgs".
synergic::OptimizerKind parse_optimizer(std::string_view name);
/// Integer >= 1 or "exact".
std::optional<std::uint64_t> parse_shots(std::string_view text);

/// Sets one field from its flag name without the leading dashes, e.g.
/// "simplex-step". Throws UsageError.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Flat key=value lines; '#' starts a comment, blank lines are skipped.
/// Settings are applied on top of `base`.
RunConfig parse_config_text(std::string_view text, RunConfig base = {});
RunConfig load_config_file(const std::filesystem::path& path, RunConfig base = {});

struct MethodRun {
  std::string method;  ///< "sqgen" or "qgan"
  int n_qubits = 0;
  synergic::TrainingTrace trace;
  /// Set for QGAN runs only.
  std::optional<qgan::QganTrace> qgan;
};

struct SummaryRow {
  int n = 0;
  std::string method;
  std::string phase;  ///< "joint" for SQGEN, "discriminator" / "generator" for QGAN
  int qubits = 0;
  double experiments_per_epoch = 0.0;
  int circuit_depth = 0;
  std::optional<double> time_per_epoch_s;
};

struct RunResult {
  std::vector<MethodRun> runs;
  std::vector<SummaryRow> summary;
  std::vector<std::filesystem::path> files;
  std::vector<std::string> notices;
};

/// Header `epoch,J,F,p,q,evals,wall_s`, one row per completed epoch. J is
/// empty for QGAN; wall_s is the duration of that epoch, empty when timing
/// was off.
std::string trace_csv(const synergic::TrainingTrace& trace, bool has_J, bool timing);

std::vector<SummaryRow> summarize(const MethodRun& run, const RunConfig& config);
/// Appends a notice for every column that is empty in all rows.
std::string summary_csv(const std::vector<SummaryRow>& rows, std::vector<std::string>* notices);

/// Training configuration used for one method of `config`.
synergic::SqgenTrainConfig training_config(const RunConfig& config, int n_qubits);

/// Runs the experiment and writes its files under config.out.
RunResult run_experiment(const RunConfig& config);

}  // namespace sqgen::harness
