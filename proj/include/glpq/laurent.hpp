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

#ifndef GLPQ_LAURENT_HPP_
#define GLPQ_LAURENT_HPP_

#include <map>
#include <string>

#include "glpq/rational.hpp"

namespace glpq {

// A Laurent polynomial in one formal variable: a finite map from integer
// exponents (possibly negative) to exact rational coefficients. Zero
// coefficients are never stored, so coefficient-wise equality of the maps is
// exact equality of the polynomials.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(int exponent, Rational coefficient);

  // Adds coefficient to the term at exponent, dropping it if the sum is zero.
  void add_term(int exponent, const Rational& coefficient);

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& scalar);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) {
    a *= s;
    return a;
  }

  bool operator==(const LaurentPolynomial&) const = default;

  // Numerical evaluation at a nonzero point (negative exponents divide).
  double evaluate(double x) const;

  // Exact evaluation at a nonzero rational point.
  Rational evaluate_exact(const Rational& x) const;

  // Rendering like "3/2*x^-4 + 1 + x^2", ascending exponents.
  std::string to_string() const;

 private:
  std::map<int, Rational> terms_;
};

}  // namespace glpq

#endif  // GLPQ_LAURENT_HPP_
