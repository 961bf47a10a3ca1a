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

#include "sqgen/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "sqgen/ansatz.hpp"
#include "sqgen/errors.hpp"
#include "sqgen/statevector.hpp"

namespace sqgen::optim {

namespace {

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw NumericError(std::string(what) + " returned a non-finite value");
  return v;
}

Eigen::VectorXd to_eigen(std::span<const double> x) {
  return Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
}

Vector to_vector(const Eigen::VectorXd& v) { return Vector(v.data(), v.data() + v.size()); }

}  // namespace

// ---------------------------------------------------------------- NelderMead

NelderMead::NelderMead(CostHandle& f, std::span<const double> x0, NelderMeadOptions options)
    : f_(f), opt_(options) {
  if (x0.empty()) throw SizeError("Nelder-Mead needs at least one parameter");
  if (!(opt_.simplex_step > 0)) throw ValidationError("simplex step must be positive");
  const std::size_t n = x0.size();
  vertices_.assign(n + 1, Vector(x0.begin(), x0.end()));
  for (std::size_t i = 0; i < n; ++i) vertices_[i + 1][i] += opt_.simplex_step;
  values_.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values_[i] = eval(vertices_[i]);
  order_.resize(n + 1);
  sort();
}

double NelderMead::eval(const Vector& x) { return checked(f_(x), "Nelder-Mead cost"); }

void NelderMead::sort() {
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) { return values_[a] < values_[b]; });
}

bool NelderMead::converged() const {
  return values_[order_.back()] - values_[order_.front()] < opt_.tol;
}

bool NelderMead::step() {
  if (converged() || iterations_ >= opt_.max_iter) return false;
  const std::size_t n = vertices_.size() - 1;
  const std::size_t best = order_.front();
  const std::size_t worst = order_.back();
  const std::size_t second = order_[n - 1];

  Vector centroid(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& v = vertices_[order_[k]];
    for (std::size_t i = 0; i < n; ++i) centroid[i] += v[i] / static_cast<double>(n);
  }
  auto along = [&](double t, const Vector& from) {
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = centroid[i] + t * (from[i] - centroid[i]);
    return out;
  };

  const Vector& xw = vertices_[worst];
  Vector xr = along(-opt_.reflection, xw);
  const double fr = eval(xr);

  bool do_shrink = false;
  if (fr < values_[best]) {
    Vector xe = along(opt_.expansion, xr);
    const double fe = eval(xe);
    if (fe < fr) {
      vertices_[worst] = std::move(xe);
      values_[worst] = fe;
    } else {
      vertices_[worst] = std::move(xr);
      values_[worst] = fr;
    }
  } else if (fr < values_[second]) {
    vertices_[worst] = std::move(xr);
    values_[worst] = fr;
  } else if (fr < values_[worst]) {
    Vector xc = along(opt_.contraction, xr);
    const double fc = eval(xc);
    if (fc <= fr) {
      vertices_[worst] = std::move(xc);
      values_[worst] = fc;
    } else {
      do_shrink = true;
    }
  } else {
    Vector xc = along(opt_.contraction, xw);
    const double fc = eval(xc);
    if (fc < values_[worst]) {
      vertices_[worst] = std::move(xc);
      values_[worst] = fc;
    } else {
      do_shrink = true;
    }
  }

  if (do_shrink) {
    const Vector xb = vertices_[best];
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == best) continue;
      for (std::size_t i = 0; i < n; ++i) {
        vertices_[k][i] = xb[i] + opt_.shrink * (vertices_[k][i] - xb[i]);
      }
      values_[k] = eval(vertices_[k]);
    }
  }
  sort();
  ++iterations_;
  return true;
}

void NelderMead::refresh() {
  for (std::size_t i = 0; i < vertices_.size(); ++i) values_[i] = eval(vertices_[i]);
  sort();
}

void NelderMead::run(std::size_t iterations) {
  for (std::size_t i = 0; i < iterations; ++i) {
    if (!step()) break;
  }
}

OptimizerReport NelderMead::report() const {
  OptimizerReport r;
  r.best_params = best_params();
  r.best_value = best_value();
  r.iterations = iterations_;
  r.evaluations = f_.evaluations();
  r.converged = converged();
  r.message = r.converged ? "simplex spread below tolerance" : "iteration budget exhausted";
  return r;
}

OptimizerReport nelder_mead(CostHandle& f, std::span<const double> x0, double simplex_step,
                            std::size_t max_iter, double tol) {
  NelderMeadOptions opt;
  opt.simplex_step = simplex_step;
  opt.max_iter = max_iter;
  opt.tol = tol;
  NelderMead nm(f, x0, opt);
  nm.run(max_iter);
  return nm.report();
}

// ----------------------------------------------------------------- gradients

Vector finite_difference_gradient(CostHandle& f, std::span<const double> x, double eps) {
  if (!(eps > 0)) throw ValidationError("finite-difference step must be positive");
  Vector probe(x.begin(), x.end());
  Vector g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + eps;
    const double up = checked(f(probe), "cost");
    probe[i] = x[i] - eps;
    const double down = checked(f(probe), "cost");
    probe[i] = x[i];
    g[i] = (up - down) / (2 * eps);
  }
  return g;
}

GradientFn finite_difference(double eps) {
  return [eps](CostHandle& f, std::span<const double> x) {
    return finite_difference_gradient(f, x, eps);
  };
}

// ---------------------------------------------------------------------- BFGS

Bfgs::Bfgs(CostHandle& f, GradientFn grad, std::span<const double> x0, BfgsOptions options)
    : f_(f), grad_(std::move(grad)), opt_(options), x_(x0.begin(), x0.end()) {
  if (x0.empty()) throw SizeError("BFGS needs at least one parameter");
  fx_ = checked(f_(x_), "BFGS cost");
  g_ = to_eigen(grad_(f_, x_));
  reset_curvature();
}

void Bfgs::reset_curvature() {
  const auto n = static_cast<Eigen::Index>(x_.size());
  h_inv_ = Eigen::MatrixXd::Identity(n, n);
  scaled_ = false;
}

void Bfgs::refresh() {
  fx_ = checked(f_(x_), "BFGS cost");
  g_ = to_eigen(grad_(f_, x_));
  failed_ = false;
}

double Bfgs::gradient_norm() const { return g_.norm(); }

bool Bfgs::step() {
  if (failed_ || converged() || iterations_ >= opt_.max_iter) return false;
  Eigen::VectorXd d = -h_inv_ * g_;
  double slope = g_.dot(d);
  if (!(slope < 0)) {
    reset_curvature();
    d = -g_;
    slope = g_.dot(d);
  }

  const Eigen::VectorXd x = to_eigen(x_);
  double alpha = 1.0;
  Eigen::VectorXd x_new;
  double f_new = 0.0;
  bool accepted = false;
  for (int k = 0; k < opt_.max_backtracks; ++k) {
    x_new = x + alpha * d;
    f_new = checked(f_(to_vector(x_new)), "BFGS cost");
    if (f_new <= fx_ + opt_.armijo * alpha * slope) {
      accepted = true;
      break;
    }
    // minimizer of the quadratic through f(x), the slope and f(x + alpha d),
    // kept inside [0.1, backtrack] * alpha
    const double curv = f_new - fx_ - slope * alpha;
    double next = curv > 0 ? -slope * alpha * alpha / (2 * curv) : opt_.backtrack * alpha;
    alpha = std::clamp(next, 0.1 * alpha, opt_.backtrack * alpha);
  }
  if (!accepted) {
    failed_ = true;
    return false;
  }

  const Eigen::VectorXd g_new = to_eigen(grad_(f_, to_vector(x_new)));
  const Eigen::VectorXd s = x_new - x;
  const Eigen::VectorXd y = g_new - g_;
  const double sy = s.dot(y);
  if (sy > 1e-12 * s.norm() * y.norm()) {
    if (!scaled_) {
      h_inv_ *= sy / y.dot(y);
      scaled_ = true;
    }
    const double rho = 1.0 / sy;
    const auto n = static_cast<Eigen::Index>(x_.size());
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd left = id - rho * s * y.transpose();
    h_inv_ = left * h_inv_ * left.transpose() + rho * s * s.transpose();
  }
  x_ = to_vector(x_new);
  fx_ = f_new;
  g_ = g_new;
  ++iterations_;
  return true;
}

void Bfgs::run(std::size_t iterations) {
  for (std::size_t i = 0; i < iterations; ++i) {
    if (!step()) break;
  }
}

OptimizerReport Bfgs::report() const {
  OptimizerReport r;
  r.best_params = x_;
  r.best_value = fx_;
  r.iterations = iterations_;
  r.evaluations = f_.evaluations();
  r.converged = converged();
  if (failed_) {
    r.message = "line search failed; best point so far returned";
  } else {
    r.message = r.converged ? "gradient norm below tolerance" : "iteration budget exhausted";
  }
  return r;
}

OptimizerReport bfgs(CostHandle& f, const GradientFn& grad, std::span<const double> x0,
                     std::size_t max_iter, double tol) {
  BfgsOptions opt;
  opt.max_iter = max_iter;
  opt.gtol = tol;
  Bfgs solver(f, grad, x0, opt);
  solver.run(max_iter);
  return solver.report();
}

// ----------------------------------------------------------- parameter shift

double CircuitObjective::evaluate() const {
  double total = constant;
  for (const auto& t : terms) {
    const auto s = apply_circuit(init_zero(t.circuit.n_qubits), t.circuit);
    total += t.weight * marginal_probability(s, t.qubits, t.outcome);
  }
  return total;
}

Vector parameter_shift_gradient(const ObjectiveBuilder& build, std::span<const double> x,
                                std::uint64_t* shifted_evaluations) {
  const CircuitObjective objective = build(x);
  Vector grad(x.size(), 0.0);
  std::uint64_t count = 0;

  for (const auto& term : objective.terms) {
    const CircuitSpec circuit = ansatz::decompose_circuit(term.circuit);
    auto measure = [&](Statevector s, std::size_t from) {
      for (std::size_t k = from; k < circuit.gates.size(); ++k) s.apply(circuit.gates[k]);
      ++count;
      return marginal_probability(s, term.qubits, term.outcome);
    };

    Statevector prefix = init_zero(circuit.n_qubits);
    for (std::size_t k = 0; k < circuit.gates.size(); ++k) {
      const GateOp& g = circuit.gates[k];
      if (!g.params.empty() && g.kind != GateKind::GlobalPhase) {
        if (!g.controls.empty() ||
            !(g.kind == GateKind::RY || g.kind == GateKind::RZ || g.kind == GateKind::Phase)) {
          throw UnsupportedParameter(std::string("parameter enters through a ") +
                                     (g.controls.empty() ? "" : "controlled ") +
                                     to_string(g.kind) + " gate");
        }
        const bool phase = g.kind == GateKind::Phase;
        const double shift = phase ? std::numbers::pi / 2 : std::numbers::pi / 4;
        const double scale = phase ? 0.5 : 1.0;
        GateOp shifted = g;
        shifted.angle = g.angle + shift;
        const double up = measure(apply_gate(prefix, shifted), k + 1);
        shifted.angle = g.angle - shift;
        const double down = measure(apply_gate(prefix, shifted), k + 1);
        const double d = term.weight * scale * (up - down);
        for (const auto& t : g.params) {
          if (t.index >= grad.size()) {
            throw UnsupportedParameter("parameter index " + std::to_string(t.index) +
                                       " outside the parameter vector");
          }
          grad[t.index] += t.coeff * d;
        }
      }
      prefix.apply(g);
    }
  }
  if (shifted_evaluations != nullptr) *shifted_evaluations = count;
  return grad;
}

}  // namespace sqgen::optim
