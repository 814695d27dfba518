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

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "glpq/combinatorics.hpp"
#include "glpq/student_t.hpp"
#include "glpq/verification.hpp"

using glpq::StudentTSpec;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> m_grid(double lo, double hi, int points) {
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = lo + (hi - lo) * i / (points - 1);
  }
  return grid;
}

double gamma_form_constant(int p) {
  return std::exp(std::lgamma((p + 1) / 2.0) - std::lgamma(p / 2.0)) /
         std::sqrt(p * kPi);
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(glpq::validate(StudentTSpec{0}), std::domain_error);
  CHECK_THROWS_AS(glpq::validate(StudentTSpec{3, 0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(glpq::validate(StudentTSpec{3, 0.0, -1.0}), std::domain_error);
  CHECK_NOTHROW(glpq::validate(StudentTSpec{1}));
}

TEST_CASE("normalization constant closed forms") {
  CHECK(glpq::normalization_constant(1) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
  CHECK(glpq::normalization_constant(2) ==
        doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
  CHECK_EQ(glpq::normalization_constant(4), 0.375);
  CHECK_THROWS_AS(glpq::normalization_constant(0), std::domain_error);
}

TEST_CASE("normalization constant agrees with the Gamma form") {
  for (int p = 1; p <= 30; ++p) {
    const double closed = glpq::normalization_constant(p);
    const double gamma = gamma_form_constant(p);
    CHECK(std::fabs(closed - gamma) <= 1e-14 * gamma);
  }
}

TEST_CASE("kernel values") {
  CHECK_EQ(glpq::kernel_K(3, 0.0), 1.0);
  CHECK(glpq::kernel_K(2, 1.0) == doctest::Approx(std::pow(1.5, -0.5)).epsilon(1e-15));
  CHECK_EQ(glpq::kernel_K(1, 5.0), 1.0);
  for (double m : m_grid(-10.0, 10.0, 21)) {
    const double k = glpq::kernel_K(5, m);
    CHECK(k > 0.0);
    CHECK(k <= 1.0);
    if (m != 0.0) CHECK(k < 1.0);
  }
}

TEST_CASE("density values") {
  CHECK(glpq::pdf(StudentTSpec{1}, 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
  CHECK_EQ(glpq::pdf(StudentTSpec{4}, 0.0), 0.375);
  // Affine density at its center is C_p / scale.
  CHECK(glpq::pdf(StudentTSpec{2, 3.0, 2.0}, 3.0) ==
        doctest::Approx(0.17677669529663687).epsilon(1e-15));
  // Affine density is the standard one rescaled.
  for (double x : m_grid(-5.0, 8.0, 14)) {
    CHECK(glpq::pdf(StudentTSpec{3, 1.0, 2.5}, x) ==
          doctest::Approx(glpq::pdf(StudentTSpec{3}, (x - 1.0) / 2.5) / 2.5)
              .epsilon(1e-15));
  }
  CHECK_THROWS_AS(glpq::pdf(StudentTSpec{3}, std::nan("")), std::domain_error);
}

TEST_CASE("cdf closed-form anchors") {
  CHECK(glpq::cdf(StudentTSpec{2}, 1.0) ==
        doctest::Approx(0.5 + 0.5 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(glpq::cdf(StudentTSpec{1}, 1.0) == doctest::Approx(0.75).epsilon(1e-15));
  for (int p = 1; p <= 12; ++p) {
    CHECK_EQ(glpq::cdf(StudentTSpec{p}, 0.0), 0.5);
    CHECK_EQ(glpq::cdf(StudentTSpec{p, 3.0, 2.0}, 3.0), 0.5);
  }
}

TEST_CASE("cdf symmetry and monotonicity") {
  for (int p = 1; p <= 12; ++p) {
    double previous = -1.0;
    for (double m : m_grid(-20.0, 20.0, 81)) {
      const double value = glpq::cdf(StudentTSpec{p}, m);
      const double mirrored = glpq::cdf(StudentTSpec{p}, -m);
      CHECK(std::fabs(value + mirrored - 1.0) <= 1e-14);
      CHECK(value >= previous);
      previous = value;
    }
  }
}

TEST_CASE("cdf agrees with the quadrature oracle") {
  for (int p = 1; p <= 12; ++p) {
    for (double m : m_grid(-20.0, 20.0, 11)) {
      const double oracle = glpq::quadrature_partial_moment(p, 0, m);
      CHECK(std::fabs(glpq::cdf(StudentTSpec{p}, m) - oracle) <= 1e-9);
    }
  }
}

TEST_CASE("quantile closed-form anchors") {
  // Cauchy quantile is tan(pi (tau - 1/2)).
  CHECK(glpq::quantile(StudentTSpec{1}, 0.75) == doctest::Approx(1.0).epsilon(1e-12));
  for (double tau : {0.55, 0.7, 0.9, 0.99}) {
    const double closed = (2.0 * tau - 1.0) / std::sqrt(2.0 * tau * (1.0 - tau));
    CHECK(glpq::quantile(StudentTSpec{2}, tau) ==
          doctest::Approx(closed).epsilon(1e-12));
  }
  CHECK_EQ(glpq::quantile(StudentTSpec{3}, 0.5), 0.0);
}

TEST_CASE("quantile/cdf round trip on a dense grid") {
  for (int p = 1; p <= 12; ++p) {
    double previous = -1e308;
    for (int i = 1; i <= 99; ++i) {
      const double tau = i / 100.0;
      const double q = glpq::quantile(StudentTSpec{p}, tau);
      CHECK(std::fabs(glpq::cdf(StudentTSpec{p}, q) - tau) <= 1e-10);
      CHECK(q > previous);
      previous = q;

      const StudentTSpec affine{p, 3.0, 2.0};
      const double qa = glpq::quantile(affine, tau);
      CHECK(std::fabs(glpq::cdf(affine, qa) - tau) <= 1e-10);
    }
  }
}

TEST_CASE("quantile mirrors exactly") {
  for (int p : {1, 2, 5, 9}) {
    for (double tau : {0.01, 0.2, 0.45}) {
      CHECK_EQ(glpq::quantile(StudentTSpec{p}, tau),
               -glpq::quantile(StudentTSpec{p}, 1.0 - tau));
    }
  }
}

TEST_CASE("quantile rejects tau outside (0,1)") {
  CHECK_THROWS_AS(glpq::quantile(StudentTSpec{3}, 0.0), std::domain_error);
  CHECK_THROWS_AS(glpq::quantile(StudentTSpec{3}, 1.0), std::domain_error);
  CHECK_THROWS_AS(glpq::quantile(StudentTSpec{3}, -0.3), std::domain_error);
}

TEST_CASE("raw moments") {
  CHECK_EQ(glpq::raw_moment(4, 2), 2.0);
  CHECK_EQ(glpq::raw_moment(6, 4), 13.5);
  CHECK_EQ(glpq::raw_moment(5, 3), 0.0);
  CHECK_EQ(glpq::raw_moment(7, 0), 1.0);
  CHECK_THROWS_AS(glpq::raw_moment(4, 4), std::domain_error);
  CHECK_THROWS_AS(glpq::raw_moment(1, 1), std::domain_error);
  CHECK_THROWS_AS(glpq::raw_moment(3, -1), std::domain_error);
}

TEST_CASE("raw moments agree with the quadrature oracle at a far cutoff") {
  CHECK(std::fabs(glpq::quadrature_partial_moment(4, 2, 1e7) - 2.0) <= 1e-8);
  CHECK(std::fabs(glpq::quadrature_partial_moment(6, 4, 1e7) - 13.5) <= 1e-7);
}

TEST_CASE("truncated moment base cases") {
  for (double m : m_grid(-6.0, 6.0, 13)) {
    CHECK_EQ(glpq::truncated_moment(3, 0, m), glpq::cdf(StudentTSpec{3}, m));
  }
  CHECK(glpq::truncated_moment(3, 1, 0.0) ==
        doctest::Approx(-std::sqrt(3.0) / kPi).epsilon(1e-15));
  // Frozen from the quadrature oracle; the closed form must reproduce it.
  CHECK(glpq::truncated_moment(3, 0, 0.5) ==
        doctest::Approx(0.67427601757592459).epsilon(1e-12));
}

TEST_CASE("truncated moment full-support limits") {
  CHECK(std::fabs(glpq::truncated_moment(5, 2, 1e8) - 5.0 / 3.0) <= 1e-8);
  CHECK_EQ(glpq::truncated_moment(5, 2, 1e9), glpq::raw_moment(5, 2));
  CHECK_EQ(glpq::truncated_moment(5, 2, -1e9), 0.0);
  CHECK_EQ(glpq::truncated_moment(7, 3, 2e8), 0.0);  // odd order, raw moment 0
}

TEST_CASE("truncated moment rejects invalid orders") {
  CHECK_THROWS_AS(glpq::truncated_moment(4, 4, 0.0), std::domain_error);
  CHECK_THROWS_AS(glpq::truncated_moment(4, -1, 0.0), std::domain_error);
  CHECK_THROWS_AS(glpq::truncated_moment(4, 2, std::nan("")), std::domain_error);
  CHECK_THROWS_AS(glpq::truncated_moment_recursive(4, 4, 0.0), std::domain_error);
}

TEST_CASE("closed form and recursion agree to 1e-12 relative") {
  for (int p = 1; p <= 12; ++p) {
    for (int j = 0; j < p; ++j) {
      for (double m : m_grid(-20.0, 20.0, 41)) {
        const double closed = glpq::truncated_moment(p, j, m);
        const double recursive = glpq::truncated_moment_recursive(p, j, m);
        const double scale = std::max(std::fabs(closed), std::fabs(recursive));
        CHECK(std::fabs(closed - recursive) <= 1e-12 * std::max(scale, 1e-300));
      }
    }
  }
}

TEST_CASE("closed form agrees with the quadrature oracle") {
  for (int p : {1, 2, 3, 5, 8, 12}) {
    for (int j = 0; j < p; ++j) {
      for (double m : {-20.0, -5.0, -0.5, 0.0, 0.5, 5.0, 20.0}) {
        const double oracle = glpq::quadrature_partial_moment(p, j, m);
        CHECK_MESSAGE(std::fabs(glpq::truncated_moment(p, j, m) - oracle) <= 1e-8,
                      "p=", p, " j=", j, " m=", m);
      }
    }
  }
}

TEST_CASE("even-dof cdf squared identity") {
  for (int p = 2; p <= 12; p += 2) {
    for (double m : m_grid(-20.0, 20.0, 41)) {
      const double tau = glpq::cdf(StudentTSpec{p}, m);
      const double k = glpq::kernel_K(p, m);
      double sum = 0.0;
      for (int kk = 0; 2 * kk <= p - 2; ++kk) {
        sum += std::pow(m, p - 1 - 2 * kk) * std::pow(p, kk) *
               glpq::to_double(glpq::dfac_binomial_A(p - 1, 2 * kk));
      }
      const double reconstructed =
          0.25 - k * k * std::pow(p, 1 - p) / 4.0 * sum * sum;
      CHECK_MESSAGE(std::fabs(tau * (1.0 - tau) - reconstructed) <= 1e-12,
                    "p=", p, " m=", m);
    }
  }
}

TEST_CASE("even-dof cdf rearrangement identity") {
  for (int p = 2; p <= 12; p += 2) {
    for (double m : m_grid(-20.0, 20.0, 41)) {
      const double tau = glpq::cdf(StudentTSpec{p}, m);
      const double lhs = 2.0 / glpq::kernel_K(p, m) * (tau - 0.5);
      double rhs = 0.0;
      for (int i = 0; 2 * i <= p - 2; ++i) {
        rhs += std::pow(m, 2 * i + 1) * std::pow(p, -(2 * i + 1) / 2.0) *
               glpq::to_double(glpq::dfac_binomial_A(p - 1, 2 * i + 1));
      }
      const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
      CHECK_MESSAGE(std::fabs(lhs - rhs) <= 1e-12 * scale, "p=", p, " m=", m);
    }
  }
}
