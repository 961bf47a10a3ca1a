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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sqgen/errors.hpp"
#include "sqgen/harness.hpp"

using namespace sqgen;
using namespace sqgen::harness;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("sqgenlab_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("config text") {
  const auto c = parse_config_text(
      "# comment\n"
      "experiment = ghz-comparison\n"
      "n=3\n"
      "\n"
      "method=both   # trailing\n"
      "optimizer=bfgs\n"
      "shots=exact\n"
      "simplex-step=1.0\n");
  CHECK(c.experiment == Experiment::GhzComparison);
  CHECK(c.n_qubits == 3);
  CHECK(c.method == Method::Both);
  CHECK(c.optimizer == synergic::OptimizerKind::Bfgs);
  CHECK_FALSE(c.shots.has_value());
  CHECK(c.simplex_step == 1.0);

  auto d = c;
  apply_setting(d, "shots", "10000");
  CHECK(*d.shots == 10000);
  CHECK_THROWS_AS(parse_config_text("n 3\n"), UsageError);
  CHECK_THROWS_AS(parse_config_text("colour=red\n"), UsageError);
  CHECK_THROWS_AS(apply_setting(d, "epochs", "ten"), UsageError);
  CHECK_THROWS_AS(apply_setting(d, "shots", "0"), UsageError);
  CHECK_THROWS_AS(apply_setting(d, "optimizer", "adam"), UsageError);
  CHECK_THROWS_AS(apply_setting(d, "eta", "x1"), UsageError);
}

TEST_CASE("config validation") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.epochs = 0;
  CHECK_THROWS_AS(c.validate(), UsageError);
  c = {};
  c.n_qubits = 2;  // single-qubit-source
  CHECK_THROWS_AS(c.validate(), UsageError);
  c = {};
  c.lambda = "w";
  CHECK_THROWS_AS(c.validate(), UsageError);
}

TEST_CASE("epoch semantics") {
  RunConfig c;
  CHECK(training_config(c, 1).iters_per_epoch == 5);
  c.optimizer = synergic::OptimizerKind::Bfgs;
  CHECK(training_config(c, 1).iters_per_epoch == 1);
  c.iters_per_epoch = 3;
  CHECK(training_config(c, 1).iters_per_epoch == 3);
  c.lambda = "z";
  CHECK(training_config(c, 1).generator_variants.size() == 2);
}

TEST_CASE("summary arithmetic and omitted columns") {
  MethodRun run;
  run.method = "sqgen";
  run.n_qubits = 1;
  run.trace.records.resize(21);
  run.trace.records.back().wall_s = 2.0;
  run.trace.evaluations = 400;
  run.trace.generator.spec = {1, ansatz::Structure::FullCascade};
  run.trace.generator.params["x"] = ansatz::AnsatzParams(4, 0.0);
  run.trace.discriminator.spec = run.trace.generator.spec;
  run.trace.discriminator.banks["x"] = {{ansatz::AnsatzParams(4, 0.0), 1.0}};
  RunConfig cfg;
  auto rows = summarize(run, cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].experiments_per_epoch == 20.0);
  CHECK(rows[0].qubits == 2);
  CHECK(*rows[0].time_per_epoch_s == doctest::Approx(0.1));

  cfg.timing = false;
  rows = summarize(run, cfg);
  std::vector<std::string> notices;
  const auto csv = summary_csv(rows, &notices);
  CHECK(csv.rfind("n,method,phase,qubits,experiments_per_epoch,circuit_depth\n", 0) == 0);
  CHECK(notices.size() == 1);
}

TEST_CASE("single-qubit run writes a stable trace") {
  RunConfig c;
  c.seed = 4;
  c.epochs = 12;
  c.timing = false;
  c.out = scratch("single_a");
  const auto a = run_experiment(c);
  REQUIRE(a.runs.size() == 1);
  const auto trace = slurp(c.out / "trace_sqgen_1_4.csv");
  CHECK(trace.rfind("epoch,J,F,p,q,evals,wall_s\n", 0) == 0);
  CHECK(line_count(trace) == a.runs[0].trace.records.size());

  const auto first_json = slurp(c.out / "run.json");
  c.out = scratch("single_b");
  run_experiment(c);
  CHECK(slurp(c.out / "trace_sqgen_1_4.csv") == trace);
  const auto meta = nlohmann::json::parse(slurp(c.out / "run.json"));
  CHECK(meta["config"]["seed"] == 4);
  CHECK(meta["runs"][0]["seed"] == 4);
  CHECK(nlohmann::json::parse(first_json)["runs"] == meta["runs"]);
}

TEST_CASE("ghz comparison reports both methods") {
  RunConfig c;
  c.experiment = Experiment::GhzComparison;
  c.n_qubits = 2;
  c.method = Method::Both;
  c.optimizer = synergic::OptimizerKind::Bfgs;
  c.epochs = 20;
  c.seed = 1;
  c.out = scratch("ghz");
  const auto r = run_experiment(c);
  REQUIRE(r.runs.size() == 2);
  CHECK(r.summary.size() == 3);
  CHECK(r.summary[0].qubits == 3);
  CHECK(r.summary[1].qubits == 8);
  const auto qgan_trace = slurp(c.out / "trace_qgan_2_1.csv");
  CHECK(line_count(qgan_trace) == 21);
  // J is empty in every QGAN row
  std::istringstream in(qgan_trace);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) CHECK(line.find(",,") != std::string::npos);
  const auto meta = nlohmann::json::parse(slurp(c.out / "run.json"));
  CHECK(meta["qubits"]["sqgen"] == 3);
  CHECK(meta["qubits"]["qgan"] == 8);
  CHECK(meta["runs"][1]["final"]["J"].is_null());
}

TEST_CASE("verification experiments") {
  RunConfig c;
  c.experiment = Experiment::DiscriminationSweep;
  c.out = scratch("sweep");
  run_experiment(c);
  CHECK(line_count(slurp(c.out / "discrimination_sweep.csv")) == 5);

  c.experiment = Experiment::MinimalCircuitVerify;
  c.out = scratch("minimal");
  run_experiment(c);
  CHECK(line_count(slurp(c.out / "minimal_circuit.csv")) == 51);
}
