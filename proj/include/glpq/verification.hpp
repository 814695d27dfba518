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

#ifndef GLPQ_VERIFICATION_HPP_
#define GLPQ_VERIFICATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glpq/lp_quantile.hpp"
#include "glpq/parallel.hpp"
#include "glpq/random.hpp"
#include "glpq/solver.hpp"
#include "glpq/student_t.hpp"

namespace glpq {

// Adaptive Gauss-Kronrod quadrature of integral_{-inf}^{m} y^j f_Y(y) dy for
// the standard Student t with p degrees of freedom, 0 <= j <= p-1. The tails
// are mapped through u = 1/|y|, the interior is integrated directly, and all
// accumulation happens in extended precision. Throws OracleError when the
// requested absolute tolerance cannot be certified -- the result is never
// silently degraded. This is the independent oracle for truncated_moment and
// must stay free of the closed forms it checks.
double quadrature_partial_moment(int p, int j, double m, double abs_tol = 1e-10);

// n iid standard Student t(p) variates by inverse-CDF transform of the
// counter-based uniform stream; identical seeds give identical samples, and
// the result does not depend on the execution policy.
Sample sample_student_t(int p, std::size_t n, const RandomSource& rng,
                        Exec ex = Exec::parallel);

struct CoincidencePoint {
  double tau = 0.0;
  double quantile_value = 0.0;
  double lp_value = 0.0;
  double abs_diff = 0.0;
};

// Grid comparison of the tau-quantile and the order-p generalized quantile
// of one target. max_abs_diff is the maximum of abs_diff over the table and
// worst_tau its argmax.
struct CoincidenceReport {
  StudentTSpec spec;
  int order = 0;
  double tolerance = 0.0;
  std::vector<CoincidencePoint> table;
  double max_abs_diff = 0.0;
  double worst_tau = 0.0;
  bool pass = false;
};

inline constexpr double kCoincidenceTolerance = 1e-9;

// Runs the comparison on the grid tau_i = i/(grid_size+1), i = 1..grid_size.
// Grid points are independent and evaluated under the given policy; the
// maximum is reduced over the stored table, so the report does not depend on
// evaluation order. Solver failures are rethrown tagged with the offending tau.
CoincidenceReport run_coincidence_grid(const StudentTSpec& spec, int order,
                                       int grid_size, const SolverConfig& config = {},
                                       Exec ex = Exec::parallel,
                                       double tolerance = kCoincidenceTolerance);

struct CoincidenceVerification {
  CoincidenceReport standard;
  CoincidenceReport affine;
  bool pass = false;
};

// Coincidence check for dof p on the standard spec and the affine variant
// (location 3, scale 2), both required to meet kCoincidenceTolerance.
// order_override decouples the loss order from the degrees of freedom
// (diagnostic use: mismatched parameters are expected to fail).
CoincidenceVerification verify_coincidence(int p, int grid_size,
                                           const SolverConfig& config = {},
                                           Exec ex = Exec::parallel,
                                           int order_override = 0);

struct PropertyCheckResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst_error = 0.0;
  bool pass = false;
};

struct Prop1Report {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<PropertyCheckResult> checks;
  bool pass = false;
};

// A two-point joint distribution: (x1, y1) and (x2, y2) each with
// probability 1/2, mixed as Z = beta X + (1-beta) Y.
struct TwoPointJoint {
  double x1 = 0.0, x2 = 0.0;
  double y1 = 0.0, y2 = 0.0;
  double beta = 0.5;
  double tau = 0.5;
  int order = 2;
};

struct ConcavityResult {
  TwoPointJoint joint;
  double rho_x = 0.0;
  double rho_y = 0.0;
  double rho_mix = 0.0;
  // beta rho(X) + (1-beta) rho(Y) - rho(Z); positive means concavity fails.
  double violation = 0.0;
};

ConcavityResult evaluate_concavity(const TwoPointJoint& joint,
                                   const SolverConfig& config = {});

// Randomized search for a concavity violation at the given loss order.
// Returns the first joint whose violation exceeds min_violation, if any.
std::optional<ConcavityResult> search_concavity_counterexample(
    int order, const RandomSource& rng, int trials, double min_violation = 1e-6);

// Order-3 concavity counterexample found once by
// search_concavity_counterexample(3, RandomSource{42}, ...) and frozen here;
// harnesses replay it deterministically.
TwoPointJoint frozen_concavity_counterexample();

// Randomized checks of the generalized-quantile properties on samples
// (translation invariance, positive homogeneity, symmetry, monotonicity,
// law invariance), the expectile concavity inequality on exact two-point
// joints for tau <= 1/2, and the frozen order-3 counterexample replay.
Prop1Report verify_prop1(const RandomSource& rng, int trials = 1000,
                         Exec ex = Exec::parallel);

struct IdentityFamilyResult {
  std::string name;
  int checks = 0;
  bool holds = false;
  std::vector<std::string> failures;
};

struct IdentitySuiteReport {
  int max_even_p = 0;
  int max_odd_p = 0;
  std::vector<IdentityFamilyResult> families;
  bool pass = false;
};

// Exhaustive exact verification of the combinatorial identities over their
// desk-scale ranges: pairwise odd-case cancellation for odd p up to
// max_odd_p, and the Gould reduction, Chu-Vandermonde convolution, squared
// expansion and even-case polynomial reduction for even p up to max_even_p.
IdentitySuiteReport verify_identities(int max_even_p = 20, int max_odd_p = 21,
                                      Exec ex = Exec::parallel);

struct McPoint {
  int order = 0;
  double tau = 0.0;
  double analytic = 0.0;
  double empirical = 0.0;
  double std_error = 0.0;
  bool pass = false;
};

struct McReport {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::vector<McPoint> points;
  bool pass = false;
};

// Monte Carlo consistency: for orders 2..4 and tau in {0.1, 0.5, 0.9},
// the empirical generalized quantile of n inverse-CDF samples of t_order
// must fall within 3 standard errors of the analytic value. The standard
// error comes from the sandwich (M-estimator) variance estimated on the
// sample itself.
McReport verify_monte_carlo(std::size_t n, const RandomSource& rng,
                            Exec ex = Exec::parallel);

}  // namespace glpq

#endif  // GLPQ_VERIFICATION_HPP_
