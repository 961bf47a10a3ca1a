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

// sqgenlab run --experiment <name> [options]
//
// Exit codes: 0 success (whether or not training converged), 2 usage error,
// 3 numeric or runtime failure.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "sqgen/errors.hpp"
#include "sqgen/harness.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kRuntime = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sqgenlab: synergic and adversarial generator training on a statevector simulator"};
  app.require_subcommand(1);
  auto* run = app.add_subcommand("run", "run one experiment and write its outputs");

  // Every flag is kept as text and routed through the same setter as the
  // config file, so flags override file values key by key.
  const std::vector<std::pair<std::string, std::string>> flags = {
      {"experiment", "single-qubit-source | ghz-comparison | discrimination-sweep | "
                     "minimal-circuit-verify"},
      {"n", "number of data qubits"},
      {"method", "sqgen | qgan | both"},
      {"optimizer", "nm | bfgs"},
      {"epochs", "number of epochs"},
      {"shots", "shots per probability estimate, or 'exact'"},
      {"seed", "random seed"},
      {"out", "output directory"},
      {"eta", "QGAN bonus weight for recognizing real data"},
      {"simplex-step", "initial Nelder-Mead simplex edge"},
      {"iters-per-epoch", "optimizer iterations per epoch"},
      {"lambda", "single-qubit source: x, y or z"},
  };
  std::map<std::string, std::string> values;
  for (const auto& [name, help] : flags) run->add_option("--" + name, values[name], help);
  std::string config_path;
  run->add_option("--config", config_path, "key=value file; flags override its entries");
  bool no_timing = false;
  run->add_flag("--no-timing", no_timing, "leave wall-clock columns empty for byte-stable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    sqgen::harness::RunConfig config;
    if (!config_path.empty()) config = sqgen::harness::load_config_file(config_path);
    for (const auto& [name, help] : flags) {
      if (run->count("--" + name) > 0) sqgen::harness::apply_setting(config, name, values[name]);
    }
    if (no_timing) config.timing = false;

    const auto result = sqgen::harness::run_experiment(config);
    for (const auto& r : result.runs) {
      const auto& m = r.trace.records.back().metrics;
      std::printf("%s n=%d epochs=%zu evals=%llu F=%.6f p=%.6f q=%.6f converged=%s\n",
                  r.method.c_str(), r.n_qubits, r.trace.records.size() - 1,
                  static_cast<unsigned long long>(r.trace.evaluations), m.F, m.p, m.q,
                  r.trace.converged ? "true" : "false");
    }
    for (const auto& note : result.notices) std::fprintf(stderr, "note: %s\n", note.c_str());
    for (const auto& f : result.files) std::printf("wrote %s\n", f.string().c_str());
    return 0;
  } catch (const sqgen::UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kRuntime;
  }
}
