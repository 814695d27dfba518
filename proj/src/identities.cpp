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

#include "glpq/identities.hpp"

#include <stdexcept>
#include <string>

#include "glpq/combinatorics.hpp"

namespace glpq {
namespace {

void require_even(int p, int lo, int hi, const std::string& who) {
  if (p < lo || p > hi || p % 2 != 0) {
    throw std::domain_error(who + ": p must be even in [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "], got " + std::to_string(p));
  }
}

// First exponent at which two Laurent polynomials differ, rendered with both
// exact coefficients. Empty when equal.
std::string first_difference(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  if (lhs == rhs) return {};
  int lo = 0;
  int hi = 0;
  auto widen = [&](const LaurentPolynomial& poly) {
    if (!poly.terms().empty()) {
      lo = std::min(lo, poly.terms().begin()->first);
      hi = std::max(hi, poly.terms().rbegin()->first);
    }
  };
  widen(lhs);
  widen(rhs);
  for (int e = lo; e <= hi; ++e) {
    if (lhs.coefficient(e) != rhs.coefficient(e)) {
      return "first differing exponent " + std::to_string(e) + ": lhs=" +
             to_string(lhs.coefficient(e)) + ", rhs=" + to_string(rhs.coefficient(e));
    }
  }
  return "polynomials differ";
}

}  // namespace

IdentityReport odd_cancellation_check(int p) {
  if (p < 3 || p > 21 || p % 2 == 0) {
    throw std::domain_error("odd_cancellation_check: p must be odd in [3, 21], got " +
                            std::to_string(p));
  }
  IdentityReport report;
  report.name = "odd_cancellation(p=" + std::to_string(p) + ")";

  auto f = [&](int i, int k) {
    Rational value = dfac_binomial_A(p - 1, k) * dfac_binomial_A(p - 1, k + 1 + 2 * i);
    return (k % 2 == 0) ? value : -value;
  };

  int pairs = 0;
  for (int i = 0; 2 * i <= p - 3; ++i) {
    const int top = p - 2 * (i + 1);
    Rational sum(0);
    for (int k = 0; k <= top; ++k) {
      const Rational term = f(i, k);
      const Rational mirror = f(i, top - k);
      if (term != -mirror) {
        report.details = "antisymmetry fails at i=" + std::to_string(i) + ", k=" +
                         std::to_string(k) + ": f=" + to_string(term) +
                         ", mirror=" + to_string(mirror);
        return report;
      }
      sum += term;
      ++pairs;
    }
    if (sum != 0) {
      report.details = "inner sum at i=" + std::to_string(i) +
                       " is nonzero: " + to_string(sum);
      return report;
    }
  }
  report.holds = true;
  report.details = std::to_string((p - 1) / 2) + " inner sums vanish; " +
                   std::to_string(pairs) + " antisymmetric term pairs";
  return report;
}

IdentityReport chu_vandermonde_check(const Rational& a, const Rational& b, int s) {
  if (s < 0) {
    throw std::domain_error("chu_vandermonde_check: s must be >= 0");
  }
  IdentityReport report;
  report.name = "chu_vandermonde(a=" + to_string(a) + ", b=" + to_string(b) +
                ", s=" + std::to_string(s) + ")";
  Rational convolution(0);
  for (int h = 0; h <= s; ++h) {
    convolution += binomial(a, h) * binomial(b, s - h);
  }
  const Rational direct = binomial(a + b, s);
  if (convolution == direct) {
    report.holds = true;
  } else {
    report.details = "convolution=" + to_string(convolution) +
                     ", binomial(a+b,s)=" + to_string(direct);
  }
  return report;
}

IdentityReport gould_reduction_check(int p) {
  require_even(p, 2, 30, "gould_reduction_check");
  IdentityReport report;
  report.name = "gould_reduction(p=" + std::to_string(p) + ")";
  const Rational half_upper(p - 1, 2);
  for (int l = 0; l <= p - 1; l += 2) {
    const Rational lhs = dfac_binomial_A(p - 1, l);
    const Rational rhs = binomial(half_upper, l / 2);
    if (lhs != rhs) {
      report.details = "mismatch at l=" + std::to_string(l) + ": A=" + to_string(lhs) +
                       ", C((p-1)/2, l/2)=" + to_string(rhs);
      return report;
    }
  }
  report.holds = true;
  return report;
}

ExpansionReport appendix_square_expansion_check(int p) {
  require_even(p, 4, 20, "appendix_square_expansion_check");
  ExpansionReport report;
  report.name = "appendix_square_expansion(p=" + std::to_string(p) + ")";

  auto A = [&](int k) { return dfac_binomial_A(p - 1, k); };
  const Rational big_p(p);

  LaurentPolynomial t_poly;
  for (int k = 0; 2 * k <= p - 2; ++k) {
    t_poly.add_term(p / 2 - 2 * k, rational_pow(big_p, k) * A(2 * k));
  }
  report.lhs = t_poly * t_poly * rational_pow(big_p, -p / 2);

  LaurentPolynomial two_sum;
  for (int j = 0; j <= p / 2 - 2; ++j) {
    Rational inner(0);
    for (int h = 1; h <= p - 2 * j - 3; h += 2) {
      inner += A(h) * A(h + 2 * j + 1);
    }
    two_sum.add_term(-2 * j, rational_pow(big_p, j) * inner);
  }
  for (int j = 1; j <= p / 2; ++j) {
    Rational inner(0);
    for (int h = 0; h <= p - 2 * j; h += 2) {
      inner += A(h) * A(h + 2 * j - 1);
    }
    two_sum.add_term(2 * j, rational_pow(big_p, -j) * inner);
  }
  report.rhs = two_sum;

  report.holds = report.lhs == report.rhs;
  report.details = report.holds ? "" : first_difference(report.lhs, report.rhs);
  return report;
}

ExpansionReport even_theorem_polynomial_check(int p) {
  require_even(p, 2, 20, "even_theorem_polynomial_check");
  ExpansionReport report;
  report.name = "even_theorem_polynomial(p=" + std::to_string(p) + ")";

  const Rational big_p(p);
  auto B = [&](int k) { return Rational(binomial(p - 1, k)); };

  LaurentPolynomial lhs;
  for (int i = 0; i <= p / 2 - 1; ++i) {
    lhs.add_term(-2 * i, rational_pow(big_p, i) * B(p / 2 - 1 - i));
  }
  for (int j = 1; j <= p / 2; ++j) {
    lhs.add_term(2 * j, rational_pow(big_p, -j) * B(p / 2 - 1 + j));
  }
  report.lhs = lhs;

  LaurentPolynomial rhs;
  for (int i = -p / 2; i <= p / 2 - 1; ++i) {
    rhs.add_term(-2 * i, rational_pow(big_p, i) * B(p / 2 - 1 - i));
  }
  report.rhs = rhs;

  report.holds = report.lhs == report.rhs;
  report.details = report.holds ? "" : first_difference(report.lhs, report.rhs);
  return report;
}

}  // namespace glpq
