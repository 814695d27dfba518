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

// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line with its measured margin and runtime; the process exits nonzero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "glpq/combinatorics.hpp"
#include "glpq/lp_quantile.hpp"
#include "glpq/parallel.hpp"
#include "glpq/random.hpp"
#include "glpq/student_t.hpp"
#include "glpq/verification.hpp"

namespace {

using glpq::Exec;
using glpq::LpProblem;
using glpq::RandomSource;
using glpq::Sample;
using glpq::StudentTSpec;

struct Criterion {
  bool pass = false;
  std::string detail;
};

bool run_criterion(int id, const std::string& label,
                   const std::function<Criterion()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Criterion result;
  try {
    result = body();
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] criterion %d: %s — %s (%.1fs)\n", result.pass ? "PASS" : "FAIL",
              id, label.c_str(), result.detail.c_str(), seconds);
  std::fflush(stdout);
  return result.pass;
}

std::vector<double> m_grid_41() {
  std::vector<double> grid(41);
  for (int i = 0; i < 41; ++i) grid[i] = -20.0 + i;
  return grid;
}

// 1. Coincidence for p in 1..10 on a 99-point grid, standard and affine.
Criterion coincidence_criterion() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  int worst_p = 0;
  for (int p = 1; p <= 10; ++p) {
    const glpq::CoincidenceVerification result = glpq::verify_coincidence(p, 99);
    const double m = std::max(result.standard.max_abs_diff, result.affine.max_abs_diff);
    if (m > worst) {
      worst = m;
      worst_p = p;
    }
    if (!result.pass) {
      return {false, "dof " + std::to_string(p) + " exceeded 1e-9"};
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream detail;
  detail << "max |rho - q| = " << worst << " (dof " << worst_p << ") <= 1e-9";
  if (seconds >= 30.0) {
    return {false, detail.str() + " but runtime " + std::to_string(seconds) + "s >= 30s"};
  }
  return {true, detail.str()};
}

// 2. Closed-form dof-2 anchor at tau = 0.9.
Criterion expectile_anchor_criterion() {
  const double tau = 0.9;
  const double closed = (2.0 * tau - 1.0) / std::sqrt(2.0 * tau * (1.0 - tau));
  const double solved = glpq::lp_quantile(LpProblem(2, tau, StudentTSpec{2}));
  const double diff = std::fabs(solved - closed);
  std::ostringstream detail;
  detail << "|" << solved << " - " << closed << "| = " << diff << " <= 1e-10";
  return {diff <= 1e-10, detail.str()};
}

// 3. Truncated moments: closed form vs recursion vs quadrature.
Criterion truncated_moment_criterion() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> grid = m_grid_41();

  struct Task {
    int p, j;
    double m;
  };
  std::vector<Task> tasks;
  for (int p = 1; p <= 12; ++p) {
    for (int j = 0; j < p; ++j) {
      for (double m : grid) tasks.push_back({p, j, m});
    }
  }

  std::vector<double> analytic_gap(tasks.size());
  std::vector<double> oracle_gap(tasks.size());
  glpq::for_each_index(Exec::parallel, static_cast<std::int64_t>(tasks.size()),
                       [&](std::int64_t i) {
                         const Task& task = tasks[static_cast<std::size_t>(i)];
                         const double closed =
                             glpq::truncated_moment(task.p, task.j, task.m);
                         const double recursive =
                             glpq::truncated_moment_recursive(task.p, task.j, task.m);
                         const double scale = std::max(
                             {std::fabs(closed), std::fabs(recursive), 1e-300});
                         analytic_gap[static_cast<std::size_t>(i)] =
                             std::fabs(closed - recursive) / scale;
                         oracle_gap[static_cast<std::size_t>(i)] = std::fabs(
                             closed - glpq::quadrature_partial_moment(task.p, task.j,
                                                                      task.m));
                       });

  double worst_rel = 0.0;
  double worst_abs = 0.0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    worst_rel = std::max(worst_rel, analytic_gap[i]);
    worst_abs = std::max(worst_abs, oracle_gap[i]);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream detail;
  detail << tasks.size() << " points; closed-vs-recursion " << worst_rel
         << " <= 1e-12 rel; vs quadrature " << worst_abs << " <= 1e-8 abs";
  const bool pass = worst_rel <= 1e-12 && worst_abs <= 1e-8 && seconds < 60.0;
  if (seconds >= 60.0) {
    return {false, detail.str() + " but runtime >= 60s"};
  }
  return {pass, detail.str()};
}

// 4. Exact identities up to p = 20 (even) / 21 (odd).
Criterion identities_criterion() {
  const auto start = std::chrono::steady_clock::now();
  const glpq::IdentitySuiteReport report = glpq::verify_identities(20, 21);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  int checks = 0;
  for (const glpq::IdentityFamilyResult& family : report.families) {
    checks += family.checks;
    if (!family.holds) {
      return {false, family.name + ": " + family.failures.front()};
    }
  }
  if (seconds >= 10.0) {
    return {false, "identities held but runtime >= 10s"};
  }
  return {true, std::to_string(checks) + " exact checks hold bit-exactly"};
}

// 5. Squared-cdf identity for even dof.
Criterion shaw_identity_criterion() {
  double worst = 0.0;
  for (int p = 2; p <= 12; p += 2) {
    for (double m : m_grid_41()) {
      const double tau = glpq::cdf(StudentTSpec{p}, m);
      const double k = glpq::kernel_K(p, m);
      double sum = 0.0;
      for (int kk = 0; 2 * kk <= p - 2; ++kk) {
        sum += std::pow(m, p - 1 - 2 * kk) * std::pow(p, kk) *
               glpq::to_double(glpq::dfac_binomial_A(p - 1, 2 * kk));
      }
      const double reconstructed = 0.25 - k * k * std::pow(p, 1 - p) / 4.0 * sum * sum;
      worst = std::max(worst, std::fabs(tau * (1.0 - tau) - reconstructed));
    }
  }
  std::ostringstream detail;
  detail << "max |tau(1-tau) - reconstruction| = " << worst << " <= 1e-12";
  return {worst <= 1e-12, detail.str()};
}

// 6. Property suite: 1000 randomized trials per property plus concavity.
Criterion properties_criterion() {
  const glpq::Prop1Report report = glpq::verify_prop1(RandomSource{glpq::kDefaultSeed}, 1000);
  for (const glpq::PropertyCheckResult& check : report.checks) {
    if (!check.pass) {
      std::ostringstream detail;
      detail << check.name << " had " << check.failures << " failures (worst "
             << check.worst_error << ")";
      return {false, detail.str()};
    }
  }
  double counterexample_margin = 0.0;
  for (const glpq::PropertyCheckResult& check : report.checks) {
    if (check.name == "concavity_counterexample_order3") {
      counterexample_margin = check.worst_error;
    }
  }
  std::ostringstream detail;
  detail << "5x1000 sample trials + concavity clean; frozen order-3 violation = "
         << counterexample_margin << " > 0";
  return {counterexample_margin > 0.0, detail.str()};
}

// 7. Mismatched order/dof must not coincide.
Criterion specificity_criterion() {
  const glpq::CoincidenceVerification result =
      glpq::verify_coincidence(4, 99, {}, Exec::parallel, 3);
  std::ostringstream detail;
  detail << "order 3 on dof 4: max deviation " << result.standard.max_abs_diff
         << " > 1e-3";
  return {result.standard.max_abs_diff > 1e-3, detail.str()};
}

// 8. Monte Carlo consistency with 1e6 samples, deterministic across runs.
Criterion monte_carlo_criterion() {
  const glpq::McReport first = glpq::verify_monte_carlo(1000000, RandomSource{glpq::kDefaultSeed});
  for (const glpq::McPoint& point : first.points) {
    if (!point.pass) {
      std::ostringstream detail;
      detail << "order " << point.order << " tau " << point.tau << ": |"
             << point.empirical << " - " << point.analytic << "| > 3se ("
             << point.std_error << ")";
      return {false, detail.str()};
    }
  }
  const glpq::McReport second = glpq::verify_monte_carlo(1000000, RandomSource{glpq::kDefaultSeed});
  for (std::size_t i = 0; i < first.points.size(); ++i) {
    if (first.points[i].empirical != second.points[i].empirical) {
      return {false, "rerun with the same seed changed the empirical value"};
    }
  }
  double worst_sigmas = 0.0;
  for (const glpq::McPoint& point : first.points) {
    worst_sigmas = std::max(worst_sigmas, std::fabs(point.empirical - point.analytic) /
                                              point.std_error);
  }
  std::ostringstream detail;
  detail << "9 points within 3se (worst " << worst_sigmas
         << "se); bitwise deterministic across runs";
  return {true, detail.str()};
}

}  // namespace

int main() {
  std::printf("acceptance suite (threads=%d)\n", glpq::hardware_threads());
  bool all = true;
  all &= run_criterion(1, "quantile / generalized-quantile coincidence, dof 1..10",
                       coincidence_criterion);
  all &= run_criterion(2, "dof-2 closed-form expectile anchor", expectile_anchor_criterion);
  all &= run_criterion(3, "truncated moments: closed vs recursion vs quadrature",
                       truncated_moment_criterion);
  all &= run_criterion(4, "exact combinatorial identities", identities_criterion);
  all &= run_criterion(5, "even-dof squared-cdf identity", shaw_identity_criterion);
  all &= run_criterion(6, "sample-property suite with concavity dichotomy",
                       properties_criterion);
  all &= run_criterion(7, "mismatched order/dof specificity", specificity_criterion);
  all &= run_criterion(8, "Monte Carlo consistency at n = 1e6", monte_carlo_criterion);
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
