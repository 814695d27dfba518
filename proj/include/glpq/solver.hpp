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

#ifndef GLPQ_SOLVER_HPP_
#define GLPQ_SOLVER_HPP_

#include <stdexcept>
#include <string>

namespace glpq {

// Shared configuration for all bracketed root solves (quantile inversion and
// first-order-condition roots).
struct SolverConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_iter = 200;
};

// Throws std::domain_error if tolerances are not positive or max_iter < 1.
inline void validate(const SolverConfig& config) {
  if (!(config.abs_tol > 0.0) || !(config.rel_tol > 0.0) || config.max_iter < 1) {
    throw std::domain_error("SolverConfig: tolerances must be > 0 and max_iter >= 1");
  }
}

// A root solve ran out of iterations (or could not establish a sign-changing
// bracket). Carries the last bracket so callers can diagnose or restart.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double bracket_lo, double bracket_hi,
              double last_residual, int iterations)
      : std::runtime_error(what + " [bracket=(" + std::to_string(bracket_lo) +
                           ", " + std::to_string(bracket_hi) +
                           "), residual=" + std::to_string(last_residual) +
                           ", iterations=" + std::to_string(iterations) + "]"),
        bracket_lo_(bracket_lo),
        bracket_hi_(bracket_hi),
        last_residual_(last_residual),
        iterations_(iterations) {}

  double bracket_lo() const { return bracket_lo_; }
  double bracket_hi() const { return bracket_hi_; }
  double last_residual() const { return last_residual_; }
  int iterations() const { return iterations_; }

 private:
  double bracket_lo_;
  double bracket_hi_;
  double last_residual_;
  int iterations_;
};

// A quadrature oracle could not certify the requested tolerance. The result
// is never degraded silently; callers either get the certified value or this.
class OracleError : public std::runtime_error {
 public:
  OracleError(const std::string& what, double requested, double achieved)
      : std::runtime_error(what + " [requested=" + std::to_string(requested) +
                           ", achieved=" + std::to_string(achieved) + "]"),
        requested_(requested),
        achieved_(achieved) {}

  double requested_tolerance() const { return requested_; }
  double achieved_error() const { return achieved_; }

 private:
  double requested_;
  double achieved_;
};

}  // namespace glpq

#endif  // GLPQ_SOLVER_HPP_
