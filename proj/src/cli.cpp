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

#include "glpq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "glpq/random.hpp"
#include "glpq/student_t.hpp"
#include "glpq/verification.hpp"

namespace glpq::cli {
namespace {

using nlohmann::json;

struct GlobalOptions {
  std::string format = "json";
  SolverConfig solver;
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
};

void emit(const json& payload, const GlobalOptions& global, std::ostream& out) {
  if (global.format == "json") {
    out << payload.dump(2) << "\n";
    return;
  }
  // Aligned key/value text for humans; nested objects are flattened a level.
  std::ostringstream flat;
  for (const auto& [key, value] : payload.items()) {
    if (value.is_object()) {
      for (const auto& [inner_key, inner] : value.items()) {
        flat << key << "." << inner_key << "\t" << inner.dump() << "\n";
      }
    } else {
      flat << key << "\t" << value.dump() << "\n";
    }
  }
  out << flat.str();
}

json to_json(const CoincidenceReport& report) {
  return json{{"dof", report.spec.dof},
              {"order", report.order},
              {"location", report.spec.location},
              {"scale", report.spec.scale},
              {"grid", report.table.size()},
              {"max_abs_diff", report.max_abs_diff},
              {"worst_tau", report.worst_tau},
              {"tolerance", report.tolerance},
              {"pass", report.pass}};
}

json to_json(const CoincidenceVerification& verification) {
  json payload = to_json(verification.standard);
  payload["affine"] = to_json(verification.affine);
  payload["pass"] = verification.pass;
  return payload;
}

json to_json(const IdentitySuiteReport& report) {
  json payload{{"max_p", report.max_even_p}, {"pass", report.pass}};
  json failures = json::array();
  for (const IdentityFamilyResult& family : report.families) {
    payload[family.name] = family.holds ? "pass" : "fail";
    for (const std::string& failure : family.failures) failures.push_back(failure);
  }
  if (!failures.empty()) payload["failures"] = failures;
  return payload;
}

json to_json(const Prop1Report& report) {
  json checks = json::object();
  for (const PropertyCheckResult& check : report.checks) {
    checks[check.name] = json{{"trials", check.trials},
                              {"failures", check.failures},
                              {"worst_error", check.worst_error},
                              {"status", check.pass ? "pass" : "fail"}};
  }
  return json{{"seed", report.seed},
              {"trials", report.trials},
              {"checks", checks},
              {"pass", report.pass}};
}

json to_json(const McReport& report) {
  json points = json::array();
  for (const McPoint& point : report.points) {
    points.push_back(json{{"order", point.order},
                          {"tau", point.tau},
                          {"analytic", point.analytic},
                          {"empirical", point.empirical},
                          {"std_error", point.std_error},
                          {"status", point.pass ? "pass" : "fail"}});
  }
  return json{{"seed", report.seed},
              {"n", report.n},
              {"points", points},
              {"pass", report.pass}};
}

int emit_verdict(const json& payload, bool pass, const GlobalOptions& global,
                 std::ostream& out) {
  emit(payload, global, out);
  return pass ? kExitSuccess : kExitVerificationFailure;
}

// One numeric cell from an RFC-4180 line: fields split on unquoted commas,
// double quotes removing the quoting.
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Sample ingest_csv(const std::string& path, int column, bool has_header) {
  if (column < 0) {
    throw std::runtime_error("ingest_csv: column index must be >= 0");
  }
  std::ifstream file(path);
  if (!file) {
    throw std::runtime_error("ingest_csv: cannot open '" + path + "'");
  }

  std::vector<double> values;
  std::string line;
  int row = 0;
  while (std::getline(file, line)) {
    ++row;
    if (row == 1 && has_header) continue;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (static_cast<std::size_t>(column) >= fields.size()) {
      throw std::runtime_error("ingest_csv: row " + std::to_string(row) +
                               " has no column " + std::to_string(column));
    }
    const std::string cell = trim(fields[static_cast<std::size_t>(column)]);
    std::size_t consumed = 0;
    double value = 0.0;
    bool ok = !cell.empty();
    if (ok) {
      try {
        value = std::stod(cell, &consumed);
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok || consumed != cell.size() || !std::isfinite(value)) {
      throw std::runtime_error("ingest_csv: unparseable cell at row " +
                               std::to_string(row) + ", column " +
                               std::to_string(column) + ": '" + cell + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) {
    throw std::runtime_error("ingest_csv: no data rows in '" + path + "'");
  }
  return Sample(std::move(values));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  GlobalOptions global;

  CLI::App app{"Generalized quantiles of Student t distributions and samples"};
  app.require_subcommand(1);
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--abs-tol", global.solver.abs_tol, "Solver absolute tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--rel-tol", global.solver.rel_tol, "Solver relative tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-iter", global.solver.max_iter, "Solver iteration budget")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", global.seed, "Randomized-harness seed");

  // compute ------------------------------------------------------------
  auto* compute = app.add_subcommand("compute", "Evaluate one quantity");
  std::string what = "lp-quantile";
  compute->add_option("what", what, "Quantity to compute")
      ->check(CLI::IsMember(
          {"quantile", "lp-quantile", "expectile", "moment", "truncated-moment"}));
  std::string dist = "t";
  compute->add_option("--dist", dist, "Target distribution")->check(CLI::IsMember({"t"}));
  int dof = 0;
  compute->add_option("--dof", dof, "Degrees of freedom")->required();
  double loc = 0.0;
  double scale = 1.0;
  compute->add_option("--loc", loc, "Location of the affine transform");
  compute->add_option("--scale", scale, "Scale of the affine transform");
  int order = 0;
  compute->add_option("--order", order, "Loss order p");
  double tau = 0.0;
  auto* tau_opt = compute->add_option("--tau", tau, "Tail level in (0,1)");
  int moment_j = -1;
  compute->add_option("--j", moment_j, "Moment order");
  double moment_m = 0.0;
  auto* m_opt = compute->add_option("--m", moment_m, "Truncation point");

  // sample ---------------------------------------------------------------
  auto* sample_cmd = app.add_subcommand("sample", "Empirical quantile from a CSV column");
  std::string csv_path;
  sample_cmd->add_option("--file", csv_path, "CSV input file")->required();
  int csv_column = 0;
  sample_cmd->add_option("--column", csv_column, "0-based column index");
  bool has_header = false;
  sample_cmd->add_flag("--has-header", has_header, "Skip the first row");
  int sample_order = 0;
  sample_cmd->add_option("--order", sample_order, "Loss order p")->required();
  double sample_tau = 0.0;
  sample_cmd->add_option("--tau", sample_tau, "Tail level in (0,1)")->required();

  // verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->require_subcommand(1);

  auto* coincidence = verify->add_subcommand(
      "coincidence", "Quantile vs generalized-quantile agreement on a tau grid");
  int cdof = 0;
  coincidence->add_option("--dof", cdof, "Degrees of freedom")->required();
  int grid = 99;
  coincidence->add_option("--grid", grid, "Grid size")->check(CLI::PositiveNumber);
  int order_override = 0;
  coincidence->add_option("--order", order_override,
                          "Override the loss order (diagnostic; mismatched orders fail)");

  auto* identities = verify->add_subcommand("identities", "Exact combinatorial identities");
  int max_p = 20;
  identities->add_option("--max-p", max_p, "Largest degrees of freedom checked")
      ->check(CLI::PositiveNumber);

  auto* properties = verify->add_subcommand("properties", "Randomized property checks");
  int trials = 1000;
  properties->add_option("--trials", trials, "Trials per property")
      ->check(CLI::PositiveNumber);

  auto* monte_carlo = verify->add_subcommand("monte-carlo", "Sampling consistency");
  std::size_t mc_n = 1000000;
  monte_carlo->add_option("--n", mc_n, "Sample size")->check(CLI::PositiveNumber);

  auto* all = verify->add_subcommand("all", "Every verification suite");
  int all_grid = 99;
  all->add_option("--grid", all_grid, "Coincidence grid size")->check(CLI::PositiveNumber);
  int all_max_p = 20;
  all->add_option("--max-p", all_max_p, "Identity range")->check(CLI::PositiveNumber);
  int all_trials = 1000;
  all->add_option("--trials", all_trials, "Trials per property")->check(CLI::PositiveNumber);
  std::size_t all_mc_n = 1000000;
  all->add_option("--mc-n", all_mc_n, "Monte Carlo sample size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "glpq: " << e.what() << "\n";
    return kExitUsageError;
  }

  if (!*seed_opt) {
    if (const char* env_seed = std::getenv("GLPQ_SEED")) {
      char* end = nullptr;
      const unsigned long long parsed = std::strtoull(env_seed, &end, 10);
      if (end == env_seed || *end != '\0') {
        err << "glpq: GLPQ_SEED is not an unsigned integer: '" << env_seed << "'\n";
        return kExitUsageError;
      }
      global.seed = parsed;
    }
  }
  const RandomSource rng{global.seed};

  try {
    if (*compute) {
      const StudentTSpec spec{dof, loc, scale};
      const bool affine = loc != 0.0 || scale != 1.0;
      double value = 0.0;
      if (what == "quantile") {
        if (!*tau_opt) throw std::domain_error("compute quantile: --tau is required");
        value = quantile(spec, tau, global.solver);
      } else if (what == "lp-quantile" || what == "expectile") {
        if (what == "expectile") {
          order = 2;
        } else if (order < 1) {
          throw std::domain_error("compute lp-quantile: --order is required");
        }
        if (!*tau_opt) throw std::domain_error("compute: --tau is required");
        value = lp_quantile(LpProblem(order, tau, spec), global.solver);
      } else if (what == "moment") {
        if (moment_j < 0) throw std::domain_error("compute moment: --j is required");
        if (affine) throw std::domain_error("compute moment: defined for the standard spec");
        value = raw_moment(dof, moment_j);
      } else {  // truncated-moment
        if (moment_j < 0 || !*m_opt) {
          throw std::domain_error("compute truncated-moment: --j and --m are required");
        }
        if (affine) {
          throw std::domain_error("compute truncated-moment: defined for the standard spec");
        }
        value = truncated_moment(dof, moment_j, moment_m);
      }
      emit(json{{"value", value}}, global, out);
      return kExitSuccess;
    }

    if (*sample_cmd) {
      const Sample sample = ingest_csv(csv_path, csv_column, has_header);
      const double value =
          lp_quantile(LpProblem(sample_order, sample_tau, sample), global.solver);
      emit(json{{"value", value}, {"rows", sample.size()}}, global, out);
      return kExitSuccess;
    }

    if (*coincidence) {
      const CoincidenceVerification result = verify_coincidence(
          cdof, grid, global.solver, Exec::parallel, order_override);
      return emit_verdict(to_json(result), result.pass, global, out);
    }
    if (*identities) {
      const IdentitySuiteReport report = verify_identities(max_p, max_p + 1);
      return emit_verdict(to_json(report), report.pass, global, out);
    }
    if (*properties) {
      const Prop1Report report = verify_prop1(rng, trials);
      return emit_verdict(to_json(report), report.pass, global, out);
    }
    if (*monte_carlo) {
      const McReport report = verify_monte_carlo(mc_n, rng);
      return emit_verdict(to_json(report), report.pass, global, out);
    }
    if (*all) {
      json coincidence_payload = json::object();
      bool coincidence_pass = true;
      for (int p = 1; p <= 10; ++p) {
        const CoincidenceVerification result =
            verify_coincidence(p, all_grid, global.solver);
        coincidence_payload["dof_" + std::to_string(p)] = json{
            {"max_abs_diff", result.standard.max_abs_diff},
            {"affine_max_abs_diff", result.affine.max_abs_diff},
            {"pass", result.pass}};
        coincidence_pass = coincidence_pass && result.pass;
      }
      coincidence_payload["pass"] = coincidence_pass;

      const IdentitySuiteReport identity_report = verify_identities(all_max_p, all_max_p + 1);
      const Prop1Report prop_report = verify_prop1(rng, all_trials);
      const McReport mc_report = verify_monte_carlo(all_mc_n, rng);

      const bool pass = coincidence_pass && identity_report.pass && prop_report.pass &&
                        mc_report.pass;
      const json payload{{"coincidence", coincidence_payload},
                         {"identities", to_json(identity_report)},
                         {"properties", to_json(prop_report)},
                         {"monte_carlo", to_json(mc_report)},
                         {"pass", pass}};
      return emit_verdict(payload, pass, global, out);
    }
  } catch (const SolverError& e) {
    err << "glpq: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const OracleError& e) {
    err << "glpq: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    err << "glpq: " << e.what() << "\n";
    return kExitUsageError;
  }
  return kExitUsageError;
}

}  // namespace glpq::cli
