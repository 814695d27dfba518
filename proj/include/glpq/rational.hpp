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

#ifndef GLPQ_RATIONAL_HPP_
#define GLPQ_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace glpq {

// Exact arbitrary-precision integer and rational types. Every identity check
// in this library compares these bit-exactly; they are kept in canonical form
// (lowest terms, positive denominator) by the backing implementation, so
// operator== is exact value equality.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline long double to_long_double(const Rational& q) {
  return q.convert_to<long double>();
}

inline std::string to_string(const Rational& q) { return q.str(); }

// Exact integer power of a rational; exponent may be negative.
Rational rational_pow(const Rational& base, int exponent);

}  // namespace glpq

#endif  // GLPQ_RATIONAL_HPP_
