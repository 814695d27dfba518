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

#include "glpq/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace glpq {

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent == 0) {
    return Rational(1);
  }
  if (base == 0 && exponent < 0) {
    throw std::domain_error("rational_pow: zero base with negative exponent");
  }
  Rational b = exponent > 0 ? base : Rational(denominator(base), numerator(base));
  int e = exponent > 0 ? exponent : -exponent;
  Rational result(1);
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

BigInt factorial(int n) {
  if (n < 0) {
    throw std::domain_error("factorial: n must be >= 0, got " + std::to_string(n));
  }
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt double_factorial(int n) {
  if (n < -1) {
    throw std::domain_error("double_factorial: n must be >= -1, got " + std::to_string(n));
  }
  BigInt result = 1;
  for (int i = n; i >= 2; i -= 2) result *= i;
  return result;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error("binomial: require 0 <= k <= n");
  }
  // Multiplicative form keeps intermediates integral.
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

Rational binomial(const Rational& x, int k) {
  if (k < 0) {
    throw std::domain_error("binomial: k must be >= 0");
  }
  Rational numer(1);
  for (int i = 0; i < k; ++i) {
    numer *= (x - i);
  }
  return numer / Rational(factorial(k));
}

Rational dfac_binomial_A(int p_minus_1, int k) {
  if (p_minus_1 < 0) {
    throw std::domain_error("dfac_binomial_A: upper index must be >= 0");
  }
  if (k < 0 || k > p_minus_1) {
    throw std::domain_error("dfac_binomial_A: k out of range [0, " +
                            std::to_string(p_minus_1) + "], got " + std::to_string(k));
  }
  return Rational(double_factorial(p_minus_1)) /
         Rational(double_factorial(k) * double_factorial(p_minus_1 - k));
}

}  // namespace glpq
