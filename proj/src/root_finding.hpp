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

#ifndef GLPQ_SRC_ROOT_FINDING_HPP_
#define GLPQ_SRC_ROOT_FINDING_HPP_

#include <cmath>

#include "glpq/solver.hpp"

namespace glpq::detail {

// Root of a continuous strictly monotone f on a sign-changing bracket
// [lo, hi] (either orientation). Bisection narrows the bracket to
// coarse_tol, then Newton steps with derivative df polish the root; any
// Newton step that leaves the bracket or fails to be finite falls back to
// bisection, so the bracket always contains the root. Convergence is on
// step size: |dx| <= abs_tol + rel_tol * |x|.
template <class F, class DF>
double solve_bracketed(F&& f, DF&& df, double lo, double hi, double flo, double fhi,
                       const SolverConfig& config, double coarse_tol = 1e-6) {
  validate(config);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw SolverError("solve_bracketed: bracket does not change sign", lo, hi, flo, 0);
  }

  const bool increasing = flo < 0.0;
  auto x_tol = [&](double x) { return config.abs_tol + config.rel_tol * std::fabs(x); };

  int iterations = 0;
  double x = 0.5 * (lo + hi);
  double fx = f(x);

  auto shrink = [&](double xn, double fxn) {
    if ((fxn < 0.0) == increasing) {
      lo = xn;
      flo = fxn;
    } else {
      hi = xn;
      fhi = fxn;
    }
  };

  // Phase 1: plain bisection until the bracket is narrow enough for Newton.
  while (hi - lo > coarse_tol && hi - lo > x_tol(x)) {
    if (++iterations > config.max_iter) {
      throw SolverError("solve_bracketed: iteration budget exhausted in bisection",
                        lo, hi, fx, iterations);
    }
    if (fx == 0.0) return x;
    shrink(x, fx);
    x = 0.5 * (lo + hi);
    fx = f(x);
  }

  // Phase 2: safeguarded Newton.
  while (true) {
    if (++iterations > config.max_iter) {
      throw SolverError("solve_bracketed: iteration budget exhausted in Newton",
                        lo, hi, fx, iterations);
    }
    if (fx == 0.0) return x;
    shrink(x, fx);
    if (hi - lo <= x_tol(x)) return 0.5 * (lo + hi);

    const double d = df(x);
    double xn = x - fx / d;
    if (!std::isfinite(xn) || xn <= lo || xn >= hi) {
      xn = 0.5 * (lo + hi);
    }
    const double step = std::fabs(xn - x);
    x = xn;
    fx = f(x);
    if (step <= x_tol(x)) return x;
  }
}

}  // namespace glpq::detail

#endif  // GLPQ_SRC_ROOT_FINDING_HPP_
