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

#include "glpq/lp_quantile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "math_util.hpp"
#include "root_finding.hpp"

namespace glpq {
namespace {

using detail::ipow;

double binomial_coefficient(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c *= static_cast<double>(n - k + i) / i;
  }
  return c;
}

void check_finite_m(double m, const char* who) {
  if (!std::isfinite(m)) {
    throw std::domain_error(std::string(who) + ": m must be finite");
  }
}

// E[((Y-m)_+)^r] of the standard Student t via the binomial expansion of
// (y-m)^r over [m, inf).
double upper_partial_standard(int p, int r, double m) {
  double sum = 0.0;
  for (int k = 0; k <= r; ++k) {
    sum += binomial_coefficient(r, k) * ipow(-m, k) *
           (raw_moment(p, r - k) - truncated_moment(p, r - k, m));
  }
  return sum;
}

// E[((Y-m)_-)^r] = (-1)^r integral_{-inf}^{m} (y-m)^r dF.
double lower_partial_standard(int p, int r, double m) {
  double sum = 0.0;
  for (int k = 0; k <= r; ++k) {
    sum += binomial_coefficient(r, k) * ipow(-m, k) * truncated_moment(p, r - k, m);
  }
  return (r % 2 == 0) ? sum : -sum;
}

double sample_mean_plus_power(const Sample& s, double m, int r, Exec ex) {
  const auto& y = s.values();
  const auto n = static_cast<std::int64_t>(y.size());
  return blocked_sum(ex, n,
                     [&](std::int64_t i) {
                       const double d = y[static_cast<std::size_t>(i)] - m;
                       return d > 0.0 ? ipow(d, r) : 0.0;
                     }) /
         static_cast<double>(n);
}

double sample_mean_minus_power(const Sample& s, double m, int r, Exec ex) {
  const auto& y = s.values();
  const auto n = static_cast<std::int64_t>(y.size());
  return blocked_sum(ex, n,
                     [&](std::int64_t i) {
                       const double d = m - y[static_cast<std::size_t>(i)];
                       return d > 0.0 ? ipow(d, r) : 0.0;
                     }) /
         static_cast<double>(n);
}

// Lower endpoint of the minimizer interval: the left-continuous inverse of
// the empirical distribution function.
double sample_quantile_lower(const Sample& s, double tau) {
  const auto n = s.size();
  auto k = static_cast<std::size_t>(std::ceil(tau * static_cast<double>(n)));
  k = std::clamp<std::size_t>(k, 1, n);
  return s.values()[k - 1];
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::domain_error("Sample: need at least one value");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::domain_error("Sample: values must be finite");
    }
  }
  std::sort(values_.begin(), values_.end());
}

LpProblem::LpProblem(int order, double tau, StudentTSpec target)
    : order_(order), tau_(tau), target_(target) {
  validate(target);
  if (order < 1) {
    throw std::domain_error("LpProblem: order must be >= 1");
  }
  if (!(tau > 0.0) || !(tau < 1.0)) {
    throw std::domain_error("LpProblem: tau must lie in (0, 1)");
  }
  if (order > target.dof) {
    throw std::domain_error(
        "LpProblem: order " + std::to_string(order) + " exceeds dof " +
        std::to_string(target.dof) + "; the required moment does not exist");
  }
}

LpProblem::LpProblem(int order, double tau, Sample target)
    : order_(order), tau_(tau), target_(std::move(target)) {
  if (order < 1) {
    throw std::domain_error("LpProblem: order must be >= 1");
  }
  if (!(tau > 0.0) || !(tau < 1.0)) {
    throw std::domain_error("LpProblem: tau must lie in (0, 1)");
  }
}

bool LpProblem::has_student_t() const noexcept {
  return std::holds_alternative<StudentTSpec>(target_);
}

const StudentTSpec& LpProblem::student_t() const {
  return std::get<StudentTSpec>(target_);
}

const Sample& LpProblem::sample() const { return std::get<Sample>(target_); }

double upper_partial_moment(const StudentTSpec& spec, int r, double m) {
  validate(spec);
  check_finite_m(m, "upper_partial_moment");
  if (r < 0 || r >= spec.dof) {
    throw std::domain_error("upper_partial_moment: need 0 <= r <= dof-1");
  }
  const double z = (m - spec.location) / spec.scale;
  return ipow(spec.scale, r) * upper_partial_standard(spec.dof, r, z);
}

double lower_partial_moment(const StudentTSpec& spec, int r, double m) {
  validate(spec);
  check_finite_m(m, "lower_partial_moment");
  if (r < 0 || r >= spec.dof) {
    throw std::domain_error("lower_partial_moment: need 0 <= r <= dof-1");
  }
  const double z = (m - spec.location) / spec.scale;
  return ipow(spec.scale, r) * lower_partial_standard(spec.dof, r, z);
}

double empirical_loss(const LpProblem& problem, double m, Exec ex) {
  if (problem.has_student_t()) {
    throw std::domain_error("empirical_loss: requires a sample target");
  }
  check_finite_m(m, "empirical_loss");
  const int p = problem.order();
  const double tau = problem.tau();
  return tau * sample_mean_plus_power(problem.sample(), m, p, ex) +
         (1.0 - tau) * sample_mean_minus_power(problem.sample(), m, p, ex);
}

double foc_value(const LpProblem& problem, double m, Exec ex) {
  if (problem.order() < 2) {
    throw std::domain_error("foc_value: the first-order condition requires order >= 2");
  }
  check_finite_m(m, "foc_value");
  const int r = problem.order() - 1;
  const double tau = problem.tau();
  if (problem.has_student_t()) {
    const StudentTSpec& spec = problem.student_t();
    return tau * upper_partial_moment(spec, r, m) -
           (1.0 - tau) * lower_partial_moment(spec, r, m);
  }
  return tau * sample_mean_plus_power(problem.sample(), m, r, ex) -
         (1.0 - tau) * sample_mean_minus_power(problem.sample(), m, r, ex);
}

double foc_derivative(const LpProblem& problem, double m, Exec ex) {
  if (problem.order() < 2) {
    throw std::domain_error("foc_derivative: requires order >= 2");
  }
  check_finite_m(m, "foc_derivative");
  const int r = problem.order() - 2;
  const double tau = problem.tau();
  const double scale = -(problem.order() - 1.0);
  if (problem.has_student_t()) {
    const StudentTSpec& spec = problem.student_t();
    return scale * (tau * upper_partial_moment(spec, r, m) +
                    (1.0 - tau) * lower_partial_moment(spec, r, m));
  }
  const Sample& s = problem.sample();
  if (r == 0) {
    // ((y-m)_+)^0 means the indicator of y > m; count by binary search.
    const auto& y = s.values();
    const auto below = std::lower_bound(y.begin(), y.end(), m) - y.begin();
    const auto above = y.end() - std::upper_bound(y.begin(), y.end(), m);
    const double n = static_cast<double>(y.size());
    return scale * (tau * (above / n) + (1.0 - tau) * (below / n));
  }
  return scale * (tau * sample_mean_plus_power(s, m, r, ex) +
                  (1.0 - tau) * sample_mean_minus_power(s, m, r, ex));
}

double lp_quantile(const LpProblem& problem, const SolverConfig& config, Exec ex) {
  validate(config);
  const double tau = problem.tau();

  if (problem.order() == 1) {
    if (problem.has_student_t()) {
      return quantile(problem.student_t(), tau, config);
    }
    return sample_quantile_lower(problem.sample(), tau);
  }

  auto g = [&](double m) { return foc_value(problem, m, ex); };
  auto dg = [&](double m) { return foc_derivative(problem, m, ex); };

  double lo;
  double hi;
  if (problem.has_student_t()) {
    const StudentTSpec& spec = problem.student_t();
    const double center = quantile(spec, tau, config);
    const double iqr = quantile(spec, 0.75, config) - quantile(spec, 0.25, config);
    double radius = 10.0 * std::max(iqr, 1e-3);
    lo = center - radius;
    hi = center + radius;
    // g is strictly decreasing, so a sign change wants g(lo) > 0 > g(hi).
    int widen = 0;
    while (g(lo) < 0.0) {
      if (++widen > 60) {
        throw SolverError("lp_quantile: failed to bracket below", lo, hi, g(lo), widen);
      }
      radius *= 2.0;
      lo = center - radius;
    }
    widen = 0;
    while (g(hi) > 0.0) {
      if (++widen > 60) {
        throw SolverError("lp_quantile: failed to bracket above", lo, hi, g(hi), widen);
      }
      radius *= 2.0;
      hi = center + radius;
    }
  } else {
    const Sample& s = problem.sample();
    lo = s.min();
    hi = s.max();
    if (lo == hi) return lo;
  }

  return detail::solve_bracketed(g, dg, lo, hi, g(lo), g(hi), config, 1e-6);
}

double polynomial_residual(int p, double tau, double m) {
  if (p < 2 || p > 12) {
    throw std::domain_error("polynomial_residual: p must lie in [2, 12]");
  }
  if (!(tau > 0.0) || !(tau < 1.0)) {
    throw std::domain_error("polynomial_residual: tau must lie in (0, 1)");
  }
  check_finite_m(m, "polynomial_residual");

  const int r = p - 1;
  double residual = 0.0;
  for (int k = 0; k <= r; ++k) {
    const double moment = raw_moment(p, r - k);
    const double truncated = truncated_moment(p, r - k, m);
    const double inner = (p % 2 == 1)
                             ? tau * moment - truncated
                             : tau * moment + (1.0 - 2.0 * tau) * truncated;
    residual += binomial_coefficient(r, k) * ipow(-m, k) * inner;
  }
  return residual;
}

}  // namespace glpq
