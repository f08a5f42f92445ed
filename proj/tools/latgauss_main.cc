/*
 * Copyright 2026 The latgauss Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// latgauss: Gaussian masses over lattices and the tail bounds that control
// them.
//
//   latgauss mass --basis B.json --t 0.5 --s 1
//   latgauss poisson --basis B.txt --t 0.1,0.2 --s 2
//   latgauss bounds-sweep --n 500 --c-start 1 --c-stop 3 --c-step 0.5 --out sweep.csv
//   latgauss verify [--config suite.json] [--report report.jsonl]
//   latgauss advise --n 500 --target -80 --k 1.04
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 enumeration budget exhausted.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latgauss/advisor.h"
#include "latgauss/basis_io.h"
#include "latgauss/error.h"
#include "latgauss/gauss_mass.h"
#include "latgauss/sweep.h"
#include "latgauss/verify.h"

namespace {

using nlohmann::ordered_json;
using namespace latgauss;

constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;

struct GlobalFlags {
  int precision = 15;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::optional<std::uint64_t> seed;
};

// Round to the requested number of significant digits; the JSON writer then
// prints the shortest representation of the rounded value.
double Round(double value, int precision) {
  if (!std::isfinite(value)) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
  return std::strtod(buffer, nullptr);
}

MassOptions MakeMassOptions(const GlobalFlags& flags) {
  MassOptions options;
  options.enumeration.budget = flags.budget;
  return options;
}

Eigen::VectorXd ShiftFor(const LatticeBasis& basis, const std::string& text) {
  if (text.empty()) return Eigen::VectorXd::Zero(basis.ambient_dim());
  Eigen::VectorXd t = ParseVector(text);
  if (t.size() != basis.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "t has dimension " + std::to_string(t.size()) +
                    " but the basis has dimension " +
                    std::to_string(basis.ambient_dim()));
  }
  return t;
}

ordered_json MassJson(const MassResult& mass, int precision) {
  ordered_json j;
  j["value"] = Round(mass.value, precision);
  j["tail_bound"] = Round(mass.tail_bound, precision);
  j["radius"] = Round(mass.radius, precision);
  j["points_used"] = mass.points_used;
  return j;
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> values;
  for (double v : ParseVector(text)) {
    if (v != std::floor(v)) {
      throw Error(ErrorCode::kParseError, "expected integers in '" + text + "'");
    }
    values.push_back(static_cast<int>(v));
  }
  return values;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kTolUnreachable:
      return kExitBudget;
    case ErrorCode::kVerificationFailure:
      return kExitVerificationFailed;
    default:
      return kExitInvalidInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice Gaussian masses, tail bounds and their verification"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--precision", flags.precision,
                 "significant digits in printed numbers")
      ->check(CLI::Range(1, 17));
  app.add_option("--budget", flags.budget,
                 "cap on enumerated lattice points");
  app.add_option("--seed", flags.seed, "base seed added to suite seeds");

  // mass / poisson
  std::string basis_path;
  std::string shift_text;
  double s_value = 1.0;
  double tol = 1e-9;
  auto* mass = app.add_subcommand("mass", "Gaussian mass of a lattice coset");
  auto* poisson = app.add_subcommand(
      "poisson", "compare a coset mass with its dual Poisson sum");
  for (auto* cmd : {mass, poisson}) {
    cmd->add_option("--basis", basis_path, "basis file (JSON or text matrix)")
        ->required();
    cmd->add_option("--t", shift_text, "coset shift, comma separated");
    cmd->add_option("--s", s_value, "Gaussian width");
    cmd->add_option("--tol", tol, "certified truncation tolerance");
  }

  // bounds-sweep
  std::string n_text;
  SweepSpec sweep;
  std::string out_path = "-";
  std::string sweep_basis;
  auto* sweep_cmd =
      app.add_subcommand("bounds-sweep", "tabulate the tail bounds as CSV");
  sweep_cmd->add_option("--n", n_text, "dimensions, comma separated")
      ->required();
  sweep_cmd->add_option("--c-start", sweep.c_start);
  sweep_cmd->add_option("--c-stop", sweep.c_stop);
  sweep_cmd->add_option("--c-step", sweep.c_step);
  sweep_cmd->add_option("--k", sweep.k);
  sweep_cmd->add_flag("--true-ratio", sweep.include_true_ratio,
                      "add the measured tail ratio on --basis");
  sweep_cmd->add_option("--basis", sweep_basis);
  sweep_cmd->add_option("--s", sweep.s, "Gaussian width for true ratios");
  sweep_cmd->add_option("--out", out_path, "output CSV path ('-' = stdout)");

  // verify
  std::string config_path;
  std::string report_path = "-";
  bool negative_control = false;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--config", config_path, "suite config JSON");
  verify->add_option("--report", report_path,
                     "JSON-lines report path ('-' = stdout)");
  verify->add_flag("--negative-control", negative_control,
                   "corrupt every bound so the suite must fail");

  // advise
  int advise_n = 0;
  double target = 0.0;
  double advise_k = 1.04;
  auto* advise = app.add_subcommand(
      "advise", "smallest c meeting a target distinguishing advantage");
  advise->add_option("--n", advise_n)->required();
  advise->add_option("--target", target, "log2 of the target advantage")
      ->required();
  advise->add_option("--k", advise_k);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (mass->parsed() || poisson->parsed()) {
      const LatticeBasis basis = ReadBasisFile(basis_path);
      const Eigen::VectorXd t = ShiftFor(basis, shift_text);
      const GaussianParam s(s_value);
      if (mass->parsed()) {
        const MassResult result =
            CosetMass(basis, t, s, tol, MakeMassOptions(flags));
        std::cout << MassJson(result, flags.precision).dump() << '\n';
      } else {
        const PoissonCheck check =
            CheckPoisson(basis, t, s, tol, MakeMassOptions(flags));
        ordered_json j;
        j["lhs"] = MassJson(check.lhs, flags.precision);
        j["rhs"]["real_part"] = Round(check.rhs.real_part, flags.precision);
        j["rhs"]["imag_part"] = Round(check.rhs.imag_part, flags.precision);
        j["rhs"]["tail_bound"] = Round(check.rhs.tail_bound, flags.precision);
        j["agreement"] = Round(check.agreement, flags.precision);
        std::cout << j.dump() << '\n';
      }
      return 0;
    }

    if (sweep_cmd->parsed()) {
      sweep.n_values = ParseIntList(n_text);
      if (!sweep_basis.empty()) sweep.lattice = ReadBasisFile(sweep_basis);
      const std::vector<SweepRow> rows =
          BoundsSweep(sweep, MakeMassOptions(flags));
      if (out_path == "-") {
        WriteSweepCsv(rows, flags.precision, std::cout);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
          throw Error(ErrorCode::kParseError, "cannot write " + out_path);
        }
        WriteSweepCsv(rows, flags.precision, out);
      }
      return 0;
    }

    if (verify->parsed()) {
      SuiteConfig config = DefaultSuiteConfig();
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
          throw Error(ErrorCode::kParseError,
                      "cannot open config file " + config_path);
        }
        std::ostringstream text;
        text << in.rdbuf();
        config = ParseSuiteConfig(text.str());
      }
      config.negative_control = config.negative_control || negative_control;
      config.budget = flags.budget;
      if (flags.seed) config.base_seed = *flags.seed;

      const SuiteReport report = RunSuite(config);
      if (report_path == "-") {
        WriteReport(report, std::cout);
      } else {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) {
          throw Error(ErrorCode::kParseError, "cannot write " + report_path);
        }
        WriteReport(report, out);
      }
      std::cerr << SummaryToJson(report.summary) << '\n';
      RequireAllHold(report);
      return 0;
    }

    if (advise->parsed()) {
      const AdviceResult advice = Advise(advise_n, target, advise_k);
      ordered_json j;
      j["c_min"] = Round(advice.c_min, flags.precision);
      j["achieved_log2_bound"] =
          Round(advice.achieved_log2_bound, flags.precision);
      j["gain_log2"] = Round(advice.gain_log2, flags.precision);
      j["regime_ok"] = advice.regime_ok;
      std::cout << j.dump() << '\n';
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "latgauss: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
  return 0;
}
