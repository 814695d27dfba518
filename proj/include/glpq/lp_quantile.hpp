// Copyright 2026 The glpq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLPQ_LP_QUANTILE_HPP_
#define GLPQ_LP_QUANTILE_HPP_

#include <cstddef>
#include <variant>
#include <vector>

#include "glpq/parallel.hpp"
#include "glpq/solver.hpp"
#include "glpq/student_t.hpp"

namespace glpq {

// An empirical distribution: finite values, stored sorted ascending. The
// sorted representation makes every downstream computation invariant under
// permutations of the input, bit for bit.
class Sample {
 public:
  explicit Sample(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double min() const noexcept { return values_.front(); }
  double max() const noexcept { return values_.back(); }

 private:
  std::vector<double> values_;
};

// One generalized-quantile problem: the order p of the asymmetric power
// loss, the tail level tau, and the target distribution (analytic Student t
// or empirical sample). For Student t targets the order must not exceed the
// degrees of freedom, so that the loss expectation of order p-1 exists.
class LpProblem {
 public:
  LpProblem(int order, double tau, StudentTSpec target);
  LpProblem(int order, double tau, Sample target);

  int order() const noexcept { return order_; }
  double tau() const noexcept { return tau_; }
  bool has_student_t() const noexcept;
  const StudentTSpec& student_t() const;
  const Sample& sample() const;

 private:
  int order_;
  double tau_;
  std::variant<StudentTSpec, Sample> target_;
};

// Upper/lower partial moments E[((X-m)_+)^r] and E[((X-m)_-)^r] of an affine
// Student t, assembled exactly from raw and truncated moments through the
// binomial expansion -- no quadrature. Requires 0 <= r <= dof - 1.
double upper_partial_moment(const StudentTSpec& spec, int r, double m);
double lower_partial_moment(const StudentTSpec& spec, int r, double m);

// Mean asymmetric power loss
//   (1/n) sum_i [ tau ((y_i - m)_+)^p + (1-tau) ((m - y_i)_+)^p ]
// for a sample target; convex in m. Throws std::domain_error for Student t
// targets.
double empirical_loss(const LpProblem& problem, double m, Exec ex = Exec::parallel);

// First-order condition value
//   g(m) = tau E[((Y-m)_+)^{p-1}] - (1-tau) E[((Y-m)_-)^{p-1}],
// strictly decreasing in m with the generalized quantile as its unique root.
// Defined for order >= 2.
double foc_value(const LpProblem& problem, double m, Exec ex = Exec::parallel);

// d/dm of foc_value: -(p-1) (tau E[((Y-m)_+)^{p-2}] + (1-tau) E[((Y-m)_-)^{p-2}]),
// always negative; used as the Newton derivative.
double foc_derivative(const LpProblem& problem, double m, Exec ex = Exec::parallel);

// The generalized quantile of order p at level tau: for order 1 the
// tau-quantile (lower endpoint of the minimizer interval on samples), for
// order >= 2 the unique root of the first-order condition, found by
// bracketed bisection polished with Newton steps. Sample targets bracket on
// [min, max]; Student t targets start from quantile(tau) +- 10 IQR and widen
// geometrically until the sign changes.
double lp_quantile(const LpProblem& problem, const SolverConfig& config = {},
                   Exec ex = Exec::parallel);

// Residual of the moment-polynomial form of the first-order condition for a
// standard Student t with dof equal to the loss order p (2 <= p <= 12):
//   p odd:  sum_k C(p-1,k) (-m)^k (tau E[Y^{p-1-k}] - G_{p-1-k}(m))
//   p even: sum_k C(p-1,k) (-m)^k (tau E[Y^{p-1-k}] + (1-2tau) G_{p-1-k}(m))
// Vanishes exactly at m = lp_quantile; an independent assembly route from
// foc_value used for cross-checking.
double polynomial_residual(int p, double tau, double m);

}  // namespace glpq

#endif  // GLPQ_LP_QUANTILE_HPP_
