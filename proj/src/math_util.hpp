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

#ifndef GLPQ_SRC_MATH_UTIL_HPP_
#define GLPQ_SRC_MATH_UTIL_HPP_

#include <numbers>

namespace glpq::detail {

// x^e for small integer e >= 0 by squaring; exact for e == 0 (returns 1.0
// even when x == 0).
inline double ipow(double x, int e) {
  double result = 1.0;
  double base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

inline constexpr double kPi = std::numbers::pi;

}  // namespace glpq::detail

#endif  // GLPQ_SRC_MATH_UTIL_HPP_
