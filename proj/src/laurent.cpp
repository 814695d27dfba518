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

#include "glpq/laurent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace glpq {

LaurentPolynomial LaurentPolynomial::monomial(int exponent, Rational coefficient) {
  LaurentPolynomial p;
  if (coefficient != 0) {
    p.terms_.emplace(exponent, std::move(coefficient));
  }
  return p;
}

void LaurentPolynomial::add_term(int exponent, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      product.add_term(ea + eb, ca * cb);
    }
  }
  return product;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

double LaurentPolynomial::evaluate(double x) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    sum += to_double(c) * std::pow(x, e);
  }
  return sum;
}

Rational LaurentPolynomial::evaluate_exact(const Rational& x) const {
  if (x == 0 && !terms_.empty() && terms_.begin()->first < 0) {
    throw std::domain_error("LaurentPolynomial: evaluation at 0 with negative exponents");
  }
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    sum += c * rational_pow(x, e);
  }
  return sum;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (e == 0) {
      out << c.str();
    } else if (c == 1) {
      out << "x^" << e;
    } else {
      out << c.str() << "*x^" << e;
    }
  }
  return out.str();
}

}  // namespace glpq
