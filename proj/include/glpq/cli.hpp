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

#ifndef GLPQ_CLI_HPP_
#define GLPQ_CLI_HPP_

#include <iosfwd>
#include <string>

#include "glpq/lp_quantile.hpp"

namespace glpq::cli {

// Exit codes of the command-line front end.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsageError = 2;

// Reads one numeric column (0-based) from an RFC-4180-style CSV file into a
// sample. Throws std::runtime_error with 1-based row/column coordinates on
// unparseable cells, missing columns, or unreadable files.
Sample ingest_csv(const std::string& path, int column, bool has_header);

// Entry point used by the glpq binary and by the in-process CLI tests.
// Never throws: errors are reported on `err` and through the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace glpq::cli

#endif  // GLPQ_CLI_HPP_
