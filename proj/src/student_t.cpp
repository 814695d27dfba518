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

#include "glpq/student_t.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "math_util.hpp"
#include "root_finding.hpp"

namespace glpq {
namespace {

using detail::ipow;
using detail::kPi;

// Beyond this the m-powers in the truncated-moment sums risk overflow and
// the full-support limit is already indistinguishable for all tested orders.
constexpr double kFullSupportCutoff = 1e8;

void check_dof(int p) {
  if (p < 1) {
    throw std::domain_error("student_t: degrees of freedom must be >= 1, got " +
                            std::to_string(p));
  }
}

void check_moment_order(int p, int j) {
  check_dof(p);
  if (j < 0 || j >= p) {
    throw std::domain_error("student_t: moment of order " + std::to_string(j) +
                            " does not exist for " + std::to_string(p) +
                            " degrees of freedom (need 0 <= j <= p-1)");
  }
}

double cdf_standard(int p, double m) {
  if (std::isinf(m)) return m > 0 ? 1.0 : 0.0;
  if (p % 2 == 0) {
    const double x = m * m;
    double term = normalization_constant(p);
    double poly = term;
    for (int i = 1; 2 * i < p; ++i) {
      term *= x * (p - 2 * i) / ((2 * i + 1) * static_cast<double>(p));
      poly += term;
    }
    return 0.5 + m * kernel_K(p, m) * poly;
  }
  const double u = m / std::sqrt(static_cast<double>(p));
  if (p == 1) return 0.5 + std::atan(u) / kPi;
  const double w = 1.0 / (1.0 + u * u);
  double term = 1.0;
  double s = 1.0;
  for (int j = 1; 2 * j <= p - 3; ++j) {
    term *= w * (2.0 * j) / (2.0 * j + 1.0);
    s += term;
  }
  return 0.5 + (std::atan(u) + u * w * s) / kPi;
}

double pdf_standard(int p, double z) {
  return normalization_constant(p) *
         std::pow(1.0 + z * z / p, -0.5 * (p + 1));
}

double quantile_standard(int p, double tau, const SolverConfig& config) {
  if (tau == 0.5) return 0.0;
  // Solve the upper-tail problem and mirror, so quantile(tau) == -quantile(1-tau)
  // holds exactly.
  const double t = tau > 0.5 ? tau : 1.0 - tau;

  double lo = 0.0;
  double flo = 0.5 - t;
  // Cauchy quantile envelope: t tails are never heavier than Cauchy tails,
  // so this upper bound only needs the geometric widening as a safety net.
  double hi = std::tan(kPi * (t - 0.5)) + 1.0;
  double fhi = cdf_standard(p, hi) - t;
  int widen = 0;
  while (fhi < 0.0) {
    if (++widen > 200 || !std::isfinite(hi)) {
      throw SolverError("quantile: failed to bracket", lo, hi, fhi, widen);
    }
    hi *= 2.0;
    fhi = cdf_standard(p, hi) - t;
  }

  const double coarse = std::max(1e-6, 1e-4 * (hi - lo));
  const double q = detail::solve_bracketed(
      [&](double x) { return cdf_standard(p, x) - t; },
      [&](double x) { return pdf_standard(p, x); }, lo, hi, flo, fhi, config,
      coarse);
  return tau > 0.5 ? q : -q;
}

}  // namespace

void validate(const StudentTSpec& spec) {
  check_dof(spec.dof);
  if (!std::isfinite(spec.location) || !std::isfinite(spec.scale) || spec.scale <= 0.0) {
    throw std::domain_error("student_t: location must be finite and scale > 0");
  }
}

double normalization_constant(int p) {
  check_dof(p);
  // (p-1)!!/(p-2)!! as a product of small ratios; exact rationals are not
  // needed at double precision.
  double ratio = 1.0;
  if (p % 2 == 0) {
    for (int k = 1; 2 * k <= p - 2; ++k) ratio *= (2.0 * k - 1.0) / (2.0 * k);
    ratio *= p - 1;
    return ratio / (2.0 * std::sqrt(static_cast<double>(p)));
  }
  for (int k = 1; 2 * k <= p - 1; ++k) ratio *= (2.0 * k) / (2.0 * k - 1.0);
  return ratio / (kPi * std::sqrt(static_cast<double>(p)));
}

double kernel_K(int p, double m) {
  check_dof(p);
  return std::pow(1.0 + m * m / p, 0.5 * (1.0 - p));
}

double pdf(const StudentTSpec& spec, double x) {
  validate(spec);
  if (std::isnan(x)) throw std::domain_error("pdf: x is NaN");
  const double z = (x - spec.location) / spec.scale;
  if (std::isinf(z)) return 0.0;
  return pdf_standard(spec.dof, z) / spec.scale;
}

double cdf(const StudentTSpec& spec, double x) {
  validate(spec);
  if (std::isnan(x)) throw std::domain_error("cdf: x is NaN");
  return cdf_standard(spec.dof, (x - spec.location) / spec.scale);
}

double quantile(const StudentTSpec& spec, double tau, const SolverConfig& config) {
  validate(spec);
  validate(config);
  if (!(tau > 0.0) || !(tau < 1.0)) {
    throw std::domain_error("quantile: tau must lie in (0, 1), got " +
                            std::to_string(tau));
  }
  return spec.location + spec.scale * quantile_standard(spec.dof, tau, config);
}

double raw_moment(int p, int j) {
  check_moment_order(p, j);
  if (j % 2 == 1) return 0.0;
  double prod = 1.0;
  for (int k = 1; 2 * k <= j; ++k) {
    prod *= (2.0 * k - 1.0) * p / (p - 2.0 * k);
  }
  return prod;
}

double truncated_moment(int p, int j, double m) {
  check_moment_order(p, j);
  if (std::isnan(m)) throw std::domain_error("truncated_moment: m is NaN");
  if (m > kFullSupportCutoff) return raw_moment(p, j);
  if (m < -kFullSupportCutoff) return 0.0;

  const double F = cdf_standard(p, m);
  if (j == 0) return F;

  const double CK = normalization_constant(p) * kernel_K(p, m);
  double dfac_ratio = 1.0;             // (j-1)!! / (j-1-2i)!!
  double recip = 1.0 / (p - j);        // prod_{k=1}^{i+1} 1/(p-j-2+2k)
  double p_pow = p;                    // p^{i+1}
  double sum = 0.0;
  for (int i = 0; 2 * i <= j - 1; ++i) {
    if (i > 0) {
      dfac_ratio *= j + 1 - 2 * i;
      recip /= p - j + 2 * i;
      p_pow *= p;
    }
    sum += ipow(m, j - 1 - 2 * i) * p_pow * dfac_ratio * recip;
  }

  double g = -CK * sum;
  if (j % 2 == 0) g += F * raw_moment(p, j);
  return g;
}

double truncated_moment_recursive(int p, int j, double m) {
  check_moment_order(p, j);
  if (std::isnan(m)) throw std::domain_error("truncated_moment: m is NaN");
  if (m > kFullSupportCutoff) return raw_moment(p, j);
  if (m < -kFullSupportCutoff) return 0.0;

  const double F = cdf_standard(p, m);
  if (j == 0) return F;

  const double CK = normalization_constant(p) * kernel_K(p, m);
  double g;
  int k0;
  if (j % 2 == 1) {
    g = p / (1.0 - p) * CK;
    k0 = 1;
  } else {
    g = F;
    k0 = 0;
  }
  for (int k = k0 + 2; k <= j; k += 2) {
    g = -(ipow(m, k - 1) / (p - k)) * p * CK +
        (static_cast<double>(p) * (k - 1) / (p - k)) * g;
  }
  return g;
}

}  // namespace glpq
