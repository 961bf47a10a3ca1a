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

#include "sqgen/harness.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>
#include "json.hpp"

#include "sqgen/discrimination.hpp"
#include "sqgen/errors.hpp"
#include "sqgen/minimal_circuit.hpp"

namespace sqgen::harness {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr std::uint64_t kSweepShots = 100000;
constexpr int kMinimalDraws = 50;

std::string fmt(double v, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T v{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("invalid value '" + std::string(text) + "' for " + std::string(key));
  }
  return v;
}

double parse_double(std::string_view key, std::string_view text) {
  // from_chars for double is missing from older standard libraries.
  std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || !std::isfinite(v)) {
    throw UsageError("invalid value '" + s + "' for " + std::string(key));
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "on") return true;
  if (text == "false" || text == "0" || text == "off") return false;
  throw UsageError("invalid value '" + std::string(text) + "' for " + std::string(key));
}

void write_file(const std::filesystem::path& path, const std::string& content,
                RunResult& result) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << content;
  result.files.push_back(path);
}

synergic::SourceSpec make_source(const RunConfig& config, int n) {
  if (config.experiment == Experiment::GhzComparison) return synergic::ghz_source(n);
  if (config.lambda == "x") return synergic::hadamard_source();
  return synergic::pauli_source(config.lambda[0]);
}

double time_per_epoch(double total, std::size_t epochs) {
  return epochs ? total / static_cast<double>(epochs) : 0.0;
}

MethodRun run_sqgen(const RunConfig& config, int n) {
  MethodRun r;
  r.method = "sqgen";
  r.n_qubits = n;
  r.trace = synergic::train_sqgen(training_config(config, n));
  return r;
}

MethodRun run_qgan(const RunConfig& config, int n) {
  auto cfg = training_config(config, n);
  qgan::QganHyperparams hp;
  hp.disc_iters_per_epoch = config.iters_per_epoch.value_or(1);
  hp.gen_iters_per_epoch = config.iters_per_epoch.value_or(1);
  hp.eta = config.eta;
  MethodRun r;
  r.method = "qgan";
  r.n_qubits = n;
  r.qgan = qgan::train_qgan(cfg, hp);
  r.trace = *r.qgan;
  return r;
}

nlohmann::json config_json(const RunConfig& c) {
  nlohmann::json j;
  j["experiment"] = to_string(c.experiment);
  j["n"] = c.n_qubits;
  j["method"] = to_string(c.method);
  j["optimizer"] = c.optimizer == synergic::OptimizerKind::Bfgs ? "bfgs" : "nm";
  j["epochs"] = c.epochs;
  j["iters_per_epoch"] = c.iters_per_epoch ? nlohmann::json(*c.iters_per_epoch) : nullptr;
  j["shots"] = c.shots ? nlohmann::json(*c.shots) : nlohmann::json("exact");
  j["seed"] = c.seed;
  j["lambda"] = c.lambda;
  j["eta"] = c.eta;
  j["simplex_step"] = c.simplex_step;
  j["out"] = c.out.string();
  j["timing"] = c.timing;
  return j;
}

nlohmann::json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

void run_discrimination_sweep(const RunConfig& config, RunResult& result) {
  const double pi = std::numbers::pi;
  std::ostringstream csv;
  csv << "beta,expected,measured,standard_error,shots\n";
  std::uint64_t k = 0;
  for (double beta : {pi / 8, pi / 4, 3 * pi / 8, pi / 2}) {
    const double p = discrimination::discrimination_probability(beta);
    const std::uint64_t shots = config.shots.value_or(kSweepShots);
    const double measured =
        discrimination::sampled_discrimination_probability(beta, shots, config.seed + k++);
    const double se = std::sqrt(p * (1 - p) / static_cast<double>(shots));
    csv << fmt(beta) << ',' << fmt(p) << ',' << fmt(measured) << ',' << fmt(se) << ',' << shots
        << '\n';
  }
  write_file(config.out / "discrimination_sweep.csv", csv.str(), result);
}

void run_minimal_verify(const RunConfig& config, RunResult& result) {
  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> nd;
  auto random_unitary = [&] {
    Eigen::Matrix2cd g;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) g(i, j) = {nd(rng), nd(rng)};
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    return Eigen::Matrix2cd(qr.householderQ());
  };
  auto dense = [](const CircuitSpec& c) {
    Eigen::Matrix4cd m;
    for (int col = 0; col < 4; ++col) {
      std::vector<cplx> amps(4, 0.0);
      amps[col] = 1.0;
      const auto out = apply_circuit(Statevector::from_amplitudes(amps), c);
      for (int row = 0; row < 4; ++row) m(row, col) = out[row];
    }
    return m;
  };

  std::ostringstream csv;
  csv << "draw,omega,n_x,n_y,n_z,delta,gamma,equivalence_error\n";
  for (int d = 0; d < kMinimalDraws; ++d) {
    const auto u = random_unitary(), a = random_unitary(), b = random_unitary(),
               g = random_unitary(), r = random_unitary();
    const auto rot = minimal::extract_rotation(minimal::compose_XUdagXU(u));
    const auto ang = minimal::axis_angles(rot.axis);
    const double err = (dense(minimal::build_minimal_circuit(u, a, b, g, r)) -
                        dense(minimal::build_reference_circuit(u, a, b, g, r)))
                           .cwiseAbs()
                           .maxCoeff();
    csv << d << ',' << fmt(rot.omega) << ',' << fmt(rot.axis[0]) << ',' << fmt(rot.axis[1]) << ','
        << fmt(rot.axis[2]) << ',' << fmt(rot.delta) << ',' << fmt(ang.gamma) << ',' << fmt(err)
        << '\n';
  }
  write_file(config.out / "minimal_circuit.csv", csv.str(), result);
}

}  // namespace

void RunConfig::validate() const {
  if (epochs < 1) throw UsageError("epochs must be at least 1");
  if (shots && *shots < 1) throw UsageError("shots must be at least 1 or 'exact'");
  if (iters_per_epoch && *iters_per_epoch < 1) {
    throw UsageError("iters-per-epoch must be at least 1");
  }
  if (n_qubits < 1 || n_qubits > 10) throw UsageError("n must be between 1 and 10");
  if (experiment == Experiment::SingleQubitSource && n_qubits != 1) {
    throw UsageError("single-qubit-source runs with n = 1");
  }
  if (lambda != "x" && lambda != "y" && lambda != "z") {
    throw UsageError("lambda must be x, y or z");
  }
  if (!(eta >= 0)) throw UsageError("eta must be non-negative");
  if (!(simplex_step > 0)) throw UsageError("simplex-step must be positive");
}

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::SingleQubitSource: return "single-qubit-source";
    case Experiment::GhzComparison: return "ghz-comparison";
    case Experiment::DiscriminationSweep: return "discrimination-sweep";
    case Experiment::MinimalCircuitVerify: return "minimal-circuit-verify";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Sqgen: return "sqgen";
    case Method::Qgan: return "qgan";
    case Method::Both: return "both";
  }
  return "?";
}

Experiment parse_experiment(std::string_view name) {
  for (auto e : {Experiment::SingleQubitSource, Experiment::GhzComparison,
                 Experiment::DiscriminationSweep, Experiment::MinimalCircuitVerify}) {
    if (name == to_string(e)) return e;
  }
  throw UsageError("unknown experiment '" + std::string(name) + "'");
}

Method parse_method(std::string_view name) {
  for (auto m : {Method::Sqgen, Method::Qgan, Method::Both}) {
    if (name == to_string(m)) return m;
  }
  throw UsageError("unknown method '" + std::string(name) + "'");
}

synergic::OptimizerKind parse_optimizer(std::string_view name) {
  if (name == "nm" || name == "nelder-mead") return synergic::OptimizerKind::NelderMead;
  if (name == "bfgs") return synergic::OptimizerKind::Bfgs;
  throw UsageError("unknown optimizer '" + std::string(name) + "'");
}

std::optional<std::uint64_t> parse_shots(std::string_view text) {
  if (text == "exact") return std::nullopt;
  const auto v = parse_number<std::uint64_t>("shots", text);
  if (v < 1) throw UsageError("shots must be at least 1 or 'exact'");
  return v;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
  if (key == "experiment") {
    c.experiment = parse_experiment(value);
  } else if (key == "n") {
    c.n_qubits = parse_number<int>(key, value);
  } else if (key == "method") {
    c.method = parse_method(value);
  } else if (key == "optimizer") {
    c.optimizer = parse_optimizer(value);
  } else if (key == "epochs") {
    c.epochs = parse_number<std::size_t>(key, value);
  } else if (key == "iters-per-epoch") {
    c.iters_per_epoch = parse_number<std::size_t>(key, value);
  } else if (key == "shots") {
    c.shots = parse_shots(value);
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "lambda") {
    c.lambda = std::string(value);
  } else if (key == "eta") {
    c.eta = parse_double(key, value);
  } else if (key == "simplex-step") {
    c.simplex_step = parse_double(key, value);
  } else if (key == "out") {
    c.out = std::string(value);
  } else if (key == "timing") {
    c.timing = parse_bool(key, value);
  } else {
    throw UsageError("unknown setting '" + std::string(key) + "'");
  }
}

RunConfig parse_config_text(std::string_view text, RunConfig base) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    apply_setting(base, trim(std::string_view(t).substr(0, eq)),
                  trim(std::string_view(t).substr(eq + 1)));
  }
  return base;
}

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str(), std::move(base));
}

synergic::SqgenTrainConfig training_config(const RunConfig& config, int n_qubits) {
  synergic::SqgenTrainConfig cfg;
  cfg.source = make_source(config, n_qubits);
  cfg.generator_ansatz = {n_qubits, ansatz::Structure::FullCascade};
  cfg.discriminator_ansatz = {n_qubits, ansatz::Structure::FullCascade};
  if (cfg.source.variants.size() == 2) {
    cfg.generator_variants = {{{}, 0.5}, {{0}, 0.5}};
  }
  cfg.optimizer = config.optimizer;
  cfg.epochs = config.epochs;
  cfg.iters_per_epoch = config.iters_per_epoch.value_or(
      config.optimizer == synergic::OptimizerKind::NelderMead ? 5 : 1);
  cfg.shots = config.shots;
  cfg.seed = config.seed;
  cfg.simplex_step = config.simplex_step;
  cfg.timing = config.timing;
  return cfg;
}

std::string trace_csv(const synergic::TrainingTrace& trace, bool has_J, bool timing) {
  std::ostringstream out;
  out << "epoch,J,F,p,q,evals,wall_s\n";
  for (std::size_t i = 1; i < trace.records.size(); ++i) {
    const auto& r = trace.records[i];
    const auto& m = r.metrics;
    out << r.epoch << ',' << (has_J ? fmt(m.J) : "") << ',' << fmt(m.F) << ',' << fmt(m.p) << ','
        << fmt(m.q) << ',' << r.evaluations << ',';
    if (timing) out << fmt(r.wall_s - trace.records[i - 1].wall_s, "%.3f");
    out << '\n';
  }
  return out.str();
}

std::vector<SummaryRow> summarize(const MethodRun& run, const RunConfig& config) {
  const int n = run.n_qubits;
  const std::size_t epochs = run.trace.records.empty() ? 0 : run.trace.records.size() - 1;
  const auto cfg = training_config(config, n);
  const std::string& label = cfg.source.label;
  const auto& gen = run.trace.generator;
  const auto& disc = run.trace.discriminator;
  const auto audit = qgan::audit_registers(n);
  std::vector<SummaryRow> rows;

  if (run.method == "sqgen") {
    SummaryRow r;
    r.n = n;
    r.method = "sqgen";
    r.phase = "joint";
    r.qubits = audit.sqgen;
    r.experiments_per_epoch = time_per_epoch(static_cast<double>(run.trace.evaluations), epochs);
    r.circuit_depth = ansatz::circuit_depth(
        synergic::build_sqgen_circuit(cfg.source, gen, disc, label, 0, 0, 1));
    if (config.timing && epochs) {
      r.time_per_epoch_s = time_per_epoch(run.trace.records.back().wall_s, epochs);
    }
    rows.push_back(r);
    return rows;
  }

  const auto& q = *run.qgan;
  SummaryRow d;
  d.n = n;
  d.method = "qgan";
  d.phase = "discriminator";
  d.qubits = audit.qgan;
  d.experiments_per_epoch = time_per_epoch(static_cast<double>(q.disc_evaluations), epochs);
  d.circuit_depth = ansatz::circuit_depth(qgan::build_qgan_disc_real(cfg.source, disc, label, 0));
  if (config.timing) d.time_per_epoch_s = time_per_epoch(q.disc_wall_s, epochs);
  SummaryRow g = d;
  g.phase = "generator";
  g.experiments_per_epoch = time_per_epoch(static_cast<double>(q.gen_evaluations), epochs);
  g.circuit_depth = ansatz::circuit_depth(qgan::build_qgan_fidelity(cfg.source, gen, label, 0, 0));
  g.time_per_epoch_s.reset();
  if (config.timing) g.time_per_epoch_s = time_per_epoch(q.gen_wall_s, epochs);
  rows.push_back(d);
  rows.push_back(g);
  return rows;
}

std::string summary_csv(const std::vector<SummaryRow>& rows, std::vector<std::string>* notices) {
  bool any_time = false;
  for (const auto& r : rows) any_time = any_time || r.time_per_epoch_s.has_value();
  std::ostringstream out;
  out << "n,method,phase,qubits,experiments_per_epoch,circuit_depth";
  if (any_time) out << ",time_per_epoch_s";
  out << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.method << ',' << r.phase << ',' << r.qubits << ','
        << fmt(r.experiments_per_epoch, "%.1f") << ',' << r.circuit_depth;
    if (any_time) {
      out << ',';
      if (r.time_per_epoch_s) out << fmt(*r.time_per_epoch_s, "%.3f");
    }
    out << '\n';
  }
  if (!any_time && notices) {
    notices->push_back("summary: time_per_epoch_s omitted because timing is disabled");
  }
  return out.str();
}

RunResult run_experiment(const RunConfig& config) {
  config.validate();
  std::error_code ec;
  std::filesystem::create_directories(config.out, ec);
  if (ec) throw Error("cannot create output directory " + config.out.string());

  RunResult result;
  if (config.experiment == Experiment::DiscriminationSweep) {
    run_discrimination_sweep(config, result);
  } else if (config.experiment == Experiment::MinimalCircuitVerify) {
    run_minimal_verify(config, result);
  } else {
    const int n = config.n_qubits;
    if (config.method != Method::Qgan) result.runs.push_back(run_sqgen(config, n));
    if (config.method != Method::Sqgen) result.runs.push_back(run_qgan(config, n));
    for (const auto& run : result.runs) {
      const auto name = "trace_" + run.method + "_" + std::to_string(n) + "_" +
                        std::to_string(config.seed) + ".csv";
      write_file(config.out / name, trace_csv(run.trace, run.method == "sqgen", config.timing),
                 result);
      if (!config.timing) {
        result.notices.push_back(name + ": wall_s omitted because timing is disabled");
      }
      for (auto& row : summarize(run, config)) result.summary.push_back(row);
    }
    write_file(config.out / "summary.csv", summary_csv(result.summary, &result.notices), result);
  }

  nlohmann::json meta;
  meta["tool"] = "sqgenlab";
  meta["version"] = kVersion;
  meta["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) +
                  "." + std::to_string(EIGEN_MINOR_VERSION);
  meta["config"] = config_json(config);
  meta["runs"] = nlohmann::json::array();
  for (const auto& run : result.runs) {
    const auto& last = run.trace.records.back().metrics;
    nlohmann::json r;
    r["method"] = run.method;
    r["n"] = run.n_qubits;
    r["seed"] = config.seed;
    r["converged"] = run.trace.converged;
    r["message"] = run.trace.message;
    r["epochs"] = run.trace.records.size() - 1;
    r["evaluations"] = run.trace.evaluations;
    r["final"] = {{"J", number_or_null(last.J)},
                  {"F", last.F},
                  {"p", last.p},
                  {"q", last.q}};
    if (run.qgan) r["freeze_audit"] = run.qgan->freeze_audit;
    meta["runs"].push_back(r);
  }
  if (!result.runs.empty()) {
    const auto audit = qgan::audit_registers(config.n_qubits);
    meta["qubits"] = {{"sqgen", audit.sqgen},
                      {"sqgen_monitored", audit.sqgen_monitored},
                      {"qgan", audit.qgan},
                      {"swap_variant", audit.swap_variant}};
  }
  meta["notices"] = result.notices;
  meta["files"] = nlohmann::json::array();
  for (const auto& f : result.files) meta["files"].push_back(f.filename().string());
  const auto run_json = config.out / "run.json";
  meta["files"].push_back("run.json");
  write_file(run_json, meta.dump(2) + "\n", result);
  return result;
}

}  // namespace sqgen::harness
