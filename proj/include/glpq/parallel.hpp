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

#ifndef GLPQ_PARALLEL_HPP_
#define GLPQ_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace glpq {

// Execution policy for the data-parallel kernels (grid sweeps, sampling,
// large empirical sums). Exec::serial is the reference path; Exec::parallel
// uses OpenMP when compiled in and degrades to the serial path otherwise.
// Every kernel in this header produces bitwise-identical results under both
// policies and under any thread count.
enum class Exec { serial, parallel };

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs body(i) for i in [0, n). Iterations must be independent.
template <class F>
void for_each_index(Exec ex, std::int64_t n, F&& body) {
  if (ex == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }
}

// Block width for deterministic reductions. Fixed, so the grouping of
// partial sums does not depend on the thread count.
inline constexpr std::int64_t kSumBlock = 4096;

// Sum of term(i) over [0, n): per-block partial sums are computed
// independently and combined in block order. The result does not depend on
// the execution policy or thread count.
template <class Term>
double blocked_sum(Exec ex, std::int64_t n, Term&& term) {
  if (n <= 0) return 0.0;
  const std::int64_t nblocks = (n + kSumBlock - 1) / kSumBlock;
  if (nblocks == 1) {
    double s = 0.0;
    for (std::int64_t i = 0; i < n; ++i) s += term(i);
    return s;
  }
  std::vector<double> partial(static_cast<std::size_t>(nblocks));
  for_each_index(ex, nblocks, [&](std::int64_t b) {
    const std::int64_t lo = b * kSumBlock;
    const std::int64_t hi = std::min(n, lo + kSumBlock);
    double s = 0.0;
    for (std::int64_t i = lo; i < hi; ++i) s += term(i);
    partial[static_cast<std::size_t>(b)] = s;
  });
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

}  // namespace glpq

#endif  // GLPQ_PARALLEL_HPP_
