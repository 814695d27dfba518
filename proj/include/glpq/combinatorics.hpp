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

#ifndef GLPQ_COMBINATORICS_HPP_
#define GLPQ_COMBINATORICS_HPP_

#include "glpq/rational.hpp"

namespace glpq {

// n! for n >= 0.
BigInt factorial(int n);

// Double factorial n!! = n * (n - 2) * ... down to 1 (n odd) or 2 (n even).
// Both 0!! and (-1)!! are empty products and evaluate to 1; this keeps the
// symmetric coefficient dfac_binomial_A well defined at its endpoints and
// makes the even-dof normalization constant agree with the Gamma form.
// Throws std::domain_error for n < -1.
BigInt double_factorial(int n);

// Ordinary binomial coefficient for integer n >= 0, 0 <= k <= n.
BigInt binomial(int n, int k);

// Generalized binomial coefficient: the falling factorial
// x (x-1) ... (x-k+1) / k!, exact for any rational x and integer k >= 0.
Rational binomial(const Rational& x, int k);

// Double-factorial binomial A_n(k) = n!! / (k!! (n-k)!!), defined for
// 0 <= k <= n. Symmetric: A_n(k) == A_n(n-k).
Rational dfac_binomial_A(int p_minus_1, int k);

}  // namespace glpq

#endif  // GLPQ_COMBINATORICS_HPP_
