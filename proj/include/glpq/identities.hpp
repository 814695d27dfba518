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

#ifndef GLPQ_IDENTITIES_HPP_
#define GLPQ_IDENTITIES_HPP_

#include <string>

#include "glpq/laurent.hpp"

namespace glpq {

// Verdict of one exact combinatorial check. `details` is empty when the
// check holds; otherwise it pinpoints the first failing term or exponent
// with both exact coefficients, ready for rendering as a diff.
struct IdentityReport {
  std::string name;
  bool holds = false;
  std::string details;
};

// Verdict of a Laurent-polynomial equality check; keeps both sides so
// callers can render them.
struct ExpansionReport {
  std::string name;
  bool holds = false;
  LaurentPolynomial lhs;
  LaurentPolynomial rhs;
  std::string details;
};

// For odd p and each shift i in [0, (p-3)/2], the alternating products
//   f_i(k) = (-1)^k A_{p-1}(k) A_{p-1}(k+1+2i),  k = 0..p-2(i+1),
// satisfy f_i(k) == -f_i(p-2(i+1)-k), so each inner sum vanishes with terms
// cancelling pairwise, first against last. Checked exactly over rationals.
// Requires odd p in [3, 21].
IdentityReport odd_cancellation_check(int p);

// Vandermonde convolution sum_{h=0}^{s} C(a,h) C(b,s-h) == C(a+b,s) for
// generalized binomials, valid for rational (e.g. half-integer) upper
// arguments. Requires s >= 0.
IdentityReport chu_vandermonde_check(const Rational& a, const Rational& b, int s);

// Reduction of the double-factorial binomial at even lower index to an
// ordinary binomial with half-integer upper argument (Gould-Quaintance):
//   A_{p-1}(l) == C((p-1)/2, l/2) for even l in [0, p-1].
// Requires even p in [2, 30].
IdentityReport gould_reduction_check(int p);

// Squares T(m) = sum_{k=0}^{p/2-1} m^{p/2-2k} p^k A_{p-1}(2k) exactly as a
// Laurent polynomial, scales by p^{-p/2}, and compares coefficient-wise with
// the closed two-sum rearrangement
//   sum_{j=0}^{p/2-2} m^{-2j} p^j  sum_{h odd}  A(h) A(h+2j+1)
// + sum_{j=1}^{p/2}   m^{2j} p^{-j} sum_{h even} A(h) A(h+2j-1).
// Requires even p in [4, 20] (the p = 2 case has no cross terms and is
// handled by the cdf-level checks instead).
ExpansionReport appendix_square_expansion_check(int p);

// Verifies that
//   sum_{i=0}^{p/2-1} m^{-2i} p^i B_{p-1}(p/2-1-i)
// + sum_{j=1}^{p/2}  m^{2j} p^{-j} B_{p-1}(p/2-1+j)
// equals the binomial expansion of (1+m^2/p)^{p-1} m^{2-p} p^{p/2-1}, i.e.
//   sum_{i=-p/2}^{p/2-1} m^{-2i} p^i B_{p-1}(p/2-1-i),
// exactly over rationals. Requires even p in [2, 20].
ExpansionReport even_theorem_polynomial_check(int p);

}  // namespace glpq

#endif  // GLPQ_IDENTITIES_HPP_
