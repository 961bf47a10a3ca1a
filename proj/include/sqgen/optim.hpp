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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sqgen/circuit.hpp"

namespace sqgen::optim {

using Vector = std::vector<double>;
using CostFn = std::function<double(std::span<const double>)>;

/// Counts every call to the wrapped cost function.
class CostHandle {
 public:
  CostHandle(std::size_t arity, CostFn fn) : arity_(arity), fn_(std::move(fn)) {}

  double operator()(std::span<const double> x) {
    ++evaluations_;
    return fn_(x);
  }

  std::size_t arity() const { return arity_; }
  std::uint64_t evaluations() const { return evaluations_; }

  /// Accounts for cost evaluations performed outside operator(), e.g. the
  /// shifted circuits of a parameter-shift gradient.
  void record_evaluations(std::uint64_t n) { evaluations_ += n; }

 private:
  std::size_t arity_;
  CostFn fn_;
  std::uint64_t evaluations_ = 0;
};

struct OptimizerReport {
  Vector best_params;
  double best_value = 0.0;
  std::size_t iterations = 0;
  std::uint64_t evaluations = 0;
  bool converged = false;
  std::string message;
};

struct NelderMeadOptions {
  double simplex_step = 0.5;
  std::size_t max_iter = 1000;
  /// Stop once max - min over the simplex values drops below this.
  double tol = 1e-8;
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

/**
 * Nelder-Mead simplex as a resumable state machine.
 *
 * The initial simplex is x0 plus `simplex_step` along each coordinate. One
 * call to step() performs one reflection/expansion/contraction/shrink round.
 * Throws NumericError if the cost returns a non-finite value.
 */
class NelderMead {
 public:
  NelderMead(CostHandle& f, std::span<const double> x0, NelderMeadOptions options = {});

  /// Returns false without doing anything once the simplex has converged or
  /// the iteration budget is exhausted.
  bool step();
  /// Runs at most `iterations` steps.
  void run(std::size_t iterations);

  /// Re-evaluates every vertex, for when the objective itself has changed
  /// (e.g. the other player moved in alternating training).
  void refresh();

  bool converged() const;
  std::size_t iterations() const { return iterations_; }
  const Vector& best_params() const { return vertices_[order_.front()]; }
  double best_value() const { return values_[order_.front()]; }
  OptimizerReport report() const;

 private:
  double eval(const Vector& x);
  void sort();

  CostHandle& f_;
  NelderMeadOptions opt_;
  std::vector<Vector> vertices_;
  std::vector<double> values_;
  std::vector<std::size_t> order_;
  std::size_t iterations_ = 0;
};

OptimizerReport nelder_mead(CostHandle& f, std::span<const double> x0,
                            double simplex_step = 0.5, std::size_t max_iter = 1000,
                            double tol = 1e-8);

/// Gradient operator used by BFGS. It must evaluate through `f` (or record
/// its evaluations there) so the evaluation tally stays honest.
using GradientFn = std::function<Vector(CostHandle& f, std::span<const double> x)>;

/// Central differences, 2 * arity evaluations. Throws NumericError on
/// non-finite values.
Vector finite_difference_gradient(CostHandle& f, std::span<const double> x,
                                  double eps = 1e-6);
GradientFn finite_difference(double eps = 1e-6);

struct BfgsOptions {
  std::size_t max_iter = 200;
  /// Stop once the gradient 2-norm drops below this.
  double gtol = 1e-6;
  double armijo = 1e-4;
  double backtrack = 0.5;
  int max_backtracks = 40;
};

/**
 * BFGS with an inverse-Hessian estimate and Armijo backtracking.
 *
 * The object keeps x, f(x), the gradient and the curvature estimate between
 * step() calls, so a caller can run a fixed number of iterations, look at the
 * iterate, and continue. The curvature update is skipped when s'y <= 0.
 */
class Bfgs {
 public:
  Bfgs(CostHandle& f, GradientFn grad, std::span<const double> x0, BfgsOptions options = {});

  /// One quasi-Newton iteration. Returns false when already converged, out of
  /// budget, or the line search failed (then failed() is true and the best
  /// point so far is kept).
  bool step();
  void run(std::size_t iterations);

  /// Drops the curvature estimate back to the identity.
  void reset_curvature();
  /// Re-evaluates f and the gradient at the current point, keeping the
  /// curvature estimate. Clears a previous line-search failure.
  void refresh();

  bool converged() const { return gradient_norm() < opt_.gtol; }
  bool failed() const { return failed_; }
  double gradient_norm() const;
  std::size_t iterations() const { return iterations_; }
  const Vector& params() const { return x_; }
  double value() const { return fx_; }
  OptimizerReport report() const;

 private:
  CostHandle& f_;
  GradientFn grad_;
  BfgsOptions opt_;
  Vector x_;
  double fx_ = 0.0;
  Eigen::VectorXd g_;
  Eigen::MatrixXd h_inv_;
  bool scaled_ = false;
  bool failed_ = false;
  std::size_t iterations_ = 0;
};

OptimizerReport bfgs(CostHandle& f, const GradientFn& grad, std::span<const double> x0,
                     std::size_t max_iter = 200, double tol = 1e-6);

/// Probability that `circuit` applied to |0...0> yields `outcome` on `qubits`.
struct ProjectorTerm {
  CircuitSpec circuit;
  std::vector<int> qubits;
  std::vector<int> outcome;
  double weight = 1.0;
};

/// constant + sum(weight * probability) over the terms. Every cost in the
/// library that is linear in measured probabilities has this shape.
struct CircuitObjective {
  double constant = 0.0;
  std::vector<ProjectorTerm> terms;

  double evaluate() const;
};

using ObjectiveBuilder = std::function<CircuitObjective(std::span<const double>)>;

/**
 * Exact gradient of a circuit objective by the shift rule.
 *
 * Circuits are first decomposed so every parameterized gate is an
 * uncontrolled rotation. With R(t) = exp(i t P) the cost is a trigonometric
 * polynomial in 2t, and d/dt f = f(t + pi/4) - f(t - pi/4) per occurrence;
 * Phase gates use the pi/2 shift with factor 1/2. The chain rule through the
 * ParamTerm coefficients maps occurrences back to parameters.
 *
 * `shifted_evaluations`, if given, receives the number of shifted circuit
 * evaluations performed. Throws UnsupportedParameter when a parameter enters
 * through anything other than such a rotation.
 */
Vector parameter_shift_gradient(const ObjectiveBuilder& build, std::span<const double> x,
                                std::uint64_t* shifted_evaluations = nullptr);

}  // namespace sqgen::optim
