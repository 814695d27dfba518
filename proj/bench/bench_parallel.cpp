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

// Times each data-parallel kernel under the serial reference policy and the
// OpenMP policy, and confirms the outputs are bitwise identical. Usage:
//   glpq_bench [n_samples]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <utility>

#include "glpq/lp_quantile.hpp"
#include "glpq/parallel.hpp"
#include "glpq/random.hpp"
#include "glpq/student_t.hpp"
#include "glpq/verification.hpp"

namespace {

using glpq::Exec;

double time_seconds(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial_s, double parallel_s, bool identical) {
  std::printf("%-34s %9.1f ms %9.1f ms %6.2fx   %s\n", name.c_str(), serial_s * 1e3,
              parallel_s * 1e3, serial_s / parallel_s, identical ? "bitwise-equal" : "DIFFERS");
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000000;
  const glpq::RandomSource rng{glpq::kDefaultSeed};

  std::printf("glpq parallel kernels, %d thread(s), n = %zu\n", glpq::hardware_threads(), n);
  std::printf("%-34s %12s %12s %7s\n", "kernel", "serial", "parallel", "speedup");

  {
    glpq::CoincidenceReport serial;
    glpq::CoincidenceReport parallel;
    const double ts = time_seconds([&] {
      serial = glpq::run_coincidence_grid(glpq::StudentTSpec{6}, 6, 499, {}, Exec::serial);
    });
    const double tp = time_seconds([&] {
      parallel = glpq::run_coincidence_grid(glpq::StudentTSpec{6}, 6, 499, {}, Exec::parallel);
    });
    report("coincidence grid (dof 6, 499 pts)", ts, tp,
           serial.max_abs_diff == parallel.max_abs_diff &&
               serial.worst_tau == parallel.worst_tau);
  }

  glpq::Sample sample({0.0});
  {
    glpq::Sample serial_sample({0.0});
    const double ts = time_seconds(
        [&] { serial_sample = glpq::sample_student_t(3, n, rng, Exec::serial); });
    const double tp =
        time_seconds([&] { sample = glpq::sample_student_t(3, n, rng, Exec::parallel); });
    report("inverse-cdf sampling (t_3)", ts, tp, serial_sample.values() == sample.values());
  }

  {
    const glpq::LpProblem problem(2, 0.9, std::move(sample));
    double serial_value = 0.0;
    double parallel_value = 0.0;
    const double ts = time_seconds(
        [&] { serial_value = glpq::lp_quantile(problem, {}, Exec::serial); });
    const double tp = time_seconds(
        [&] { parallel_value = glpq::lp_quantile(problem, {}, Exec::parallel); });
    report("empirical expectile solve", ts, tp, serial_value == parallel_value);
  }

  {
    // Quadrature sweep over every (dof, order) pair on a 41-point grid.
    auto sweep = [&](Exec ex, double& checksum) {
      struct Task {
        int p, j;
        double m;
      };
      std::vector<Task> tasks;
      for (int p = 1; p <= 10; ++p) {
        for (int j = 0; j < p; ++j) {
          for (int i = 0; i < 41; ++i) tasks.push_back({p, j, -20.0 + i});
        }
      }
      std::vector<double> values(tasks.size());
      glpq::for_each_index(ex, static_cast<std::int64_t>(tasks.size()),
                           [&](std::int64_t i) {
                             const Task& t = tasks[static_cast<std::size_t>(i)];
                             values[static_cast<std::size_t>(i)] =
                                 glpq::quadrature_partial_moment(t.p, t.j, t.m);
                           });
      checksum = glpq::blocked_sum(Exec::serial, static_cast<std::int64_t>(values.size()),
                                   [&](std::int64_t i) {
                                     return values[static_cast<std::size_t>(i)];
                                   });
    };
    double serial_sum = 0.0;
    double parallel_sum = 0.0;
    const double ts = time_seconds([&] { sweep(Exec::serial, serial_sum); });
    const double tp = time_seconds([&] { sweep(Exec::parallel, parallel_sum); });
    report("quadrature sweep (2255 integrals)", ts, tp, serial_sum == parallel_sum);
  }

  {
    glpq::Prop1Report serial;
    glpq::Prop1Report parallel;
    const double ts =
        time_seconds([&] { serial = glpq::verify_prop1(rng, 2000, Exec::serial); });
    const double tp =
        time_seconds([&] { parallel = glpq::verify_prop1(rng, 2000, Exec::parallel); });
    bool identical = serial.pass == parallel.pass;
    for (std::size_t i = 0; i < serial.checks.size(); ++i) {
      identical = identical &&
                  serial.checks[i].worst_error == parallel.checks[i].worst_error;
    }
    report("property trials (7 x 2000)", ts, tp, identical);
  }

  return 0;
}
