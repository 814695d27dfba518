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

#ifndef GLPQ_STUDENT_T_HPP_
#define GLPQ_STUDENT_T_HPP_

#include "glpq/solver.hpp"

namespace glpq {

// An affine transform X = location + scale * Y of a standard Student t
// variable Y with integer degrees of freedom. The standard member has
// location 0 and scale 1.
struct StudentTSpec {
  int dof = 1;
  double location = 0.0;
  double scale = 1.0;
};

// Throws std::domain_error unless dof >= 1, scale > 0 and both parameters
// are finite.
void validate(const StudentTSpec& spec);

// Density normalization constant C_p = Gamma((p+1)/2) / (sqrt(p*pi) Gamma(p/2)).
// Evaluated through double-factorial ratios, which are exact for integer p:
//   p even: (p-1)!! / (2 (p-2)!! sqrt(p))
//   p odd:  (p-1)!! / ((p-2)!! pi sqrt(p))
double normalization_constant(int p);

// K_p(m) = (1 + m^2/p)^((1-p)/2). Lies in (0, 1]; equals 1 iff m == 0 or p == 1.
double kernel_K(int p, double m);

// Density of the affine Student t at x.
double pdf(const StudentTSpec& spec, double x);

// Distribution function of the affine Student t at x, via closed forms for
// integer degrees of freedom (no quadrature):
//   p even: F(m) = 1/2 + m K_p(m) * P(m^2), with P a polynomial of degree
//           p/2 - 1 whose coefficients follow the recurrence
//           c_0 = C_p, c_{i+1} = c_i (p - 2(i+1)) / ((2i+3) p).
//   p odd:  F(m) = 1/2 + (atan(u) + u w S(w)) / pi, with u = m/sqrt(p),
//           w = 1/(1+u^2) and S(w) = sum_j a_j w^j, a_0 = 1,
//           a_j = a_{j-1} * 2j/(2j+1), j up to (p-3)/2 (empty for p = 1).
// Both branches come from integrating the density by parts in the degrees of
// freedom; they are validated against the quadrature oracle in the tests.
double cdf(const StudentTSpec& spec, double x);

// Inverse of cdf in x for tau in (0, 1). Bracketed bisection refined by
// Newton steps with the density as derivative; the initial bracket grows
// geometrically from the Cauchy-quantile envelope. Throws std::domain_error
// for tau outside (0, 1) and SolverError on non-convergence.
double quantile(const StudentTSpec& spec, double tau, const SolverConfig& config = {});

// E[Y^j] of the standard Student t with p degrees of freedom, for
// 0 <= j <= p - 1: zero for odd j, and
//   prod_{k=1}^{j/2} (2k-1) p / (p - 2k)
// for even j. Throws std::domain_error when j < 0 or j >= p (the moment
// does not exist).
double raw_moment(int p, int j);

// Truncated moment G_j(m) = integral_{-inf}^{m} y^j dF_Y(y) of the standard
// Student t with p degrees of freedom, 0 <= j <= p - 1, via the backward
// closed form
//   G_j(m) = -C_p K_p(m) * sum_{i=0}^{floor((j-1)/2)} m^{j-1-2i} p^{i+1}
//            (j-1)!!/(j-1-2i)!! * prod_{k=1}^{i+1} 1/(p-j-2+2k)
//            + F_Y(m) E[Y^j],
// with G_0(m) = F_Y(m). For |m| > 1e8 the full-support limit is returned
// directly (0, the raw moment, or the cdf limit) to avoid overflow in the
// m powers. Throws std::domain_error for j outside [0, p-1] or m not finite.
double truncated_moment(int p, int j, double m);

// Same value through the two-term recursion
//   G_j(m) = -(m^{j-1}/(p-j)) p C_p K_p(m) + (p (j-1)/(p-j)) G_{j-2}(m)
// with bases G_0(m) = F_Y(m) and G_1(m) = p/(1-p) C_p K_p(m). Kept as an
// independent route for cross-checking the closed form.
double truncated_moment_recursive(int p, int j, double m);

}  // namespace glpq

#endif  // GLPQ_STUDENT_T_HPP_
