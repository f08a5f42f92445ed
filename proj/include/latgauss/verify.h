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

// Numerical checks of the Gaussian tail inequalities on small lattices.
//
// Every check compares a measured quantity (lhs) against a bound (rhs). A
// check fails only when lhs - rhs exceeds the certified truncation error of
// the measured masses plus a 1e-10 relative slack, so numerics alone never
// produce a false violation. Instances that do not meet an inequality's
// hypotheses are reported with in_regime = false instead of being dropped.

#ifndef LATGAUSS_VERIFY_H_
#define LATGAUSS_VERIFY_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "latgauss/gauss_mass.h"
#include "latgauss/lattice.h"

namespace latgauss {

enum class Inequality {
  kRefined,
  kSandwichLower,
  kSandwichUpper,
  kImproved,
  kImprovedSandwich,
  kTransference,
  kPoisson,
};

std::string_view InequalityName(Inequality inequality);

enum class LatticeStyle { kUnimodularMix, kDiagonalScaled };

std::string_view LatticeStyleName(LatticeStyle style);
// Error(kParseError) for unknown names.
LatticeStyle ParseLatticeStyle(std::string_view name);

struct Instance {
  std::uint64_t seed = 0;
  std::string lattice;
  std::optional<double> s;
  std::optional<double> c;
  std::optional<double> k;
  // The coset shift t (or the point x for the sandwich checks).
  std::optional<Eigen::VectorXd> shift;
  // Index i for transference records.
  std::optional<int> index;
};

struct VerifyRecord {
  Inequality inequality = Inequality::kRefined;
  double lhs = 0.0;
  double rhs = 0.0;
  // rhs - lhs.
  double margin = 0.0;
  // Certified numerical uncertainty allowed before declaring a failure.
  double tolerance = 0.0;
  bool holds = true;
  bool in_regime = true;
  std::string note;
  Instance instance;
};

// Deterministic in (n, seed, style). kUnimodularMix applies a bounded
// sequence of integer row operations to the identity (det = 1);
// kDiagonalScaled is diag(d_1..d_n) with d_i in {1..5}. Requires 1 <= n <= 6.
LatticeBasis RandomLattice(int n, std::uint64_t seed, LatticeStyle style);

struct CheckOptions {
  MassOptions mass;
  // Test hook: multiplies every bound by e^{-n} so that checks must fail.
  bool corrupt_bounds = false;
};

// rho_s((L + t) minus the ball of radius c tau) / rho_s(L) against
// (c sqrt(e) e^{-c^2/2})^n.
VerifyRecord CheckRefined(const LatticeBasis& basis, const Eigen::VectorXd& t,
                          const GaussianParam& s, double c,
                          const CheckOptions& options = {});

// Lower and upper sides of rho_s(r_x) <= rho_s(L + x) / rho_s(L) <=
// (r_x / tau)^n e^{n/2} rho_s(r_x). Out of regime when r_x < tau.
std::pair<VerifyRecord, VerifyRecord> CheckSandwich(
    const LatticeBasis& basis, const Eigen::VectorXd& x, const GaussianParam& s,
    const CheckOptions& options = {});

// Absolute excluded mass against (e^{1-c^2})^{n/2} / (1 - epsilon). Out of
// regime unless lambda_1 >= k c tau, k > 1 and c >= 1.
VerifyRecord CheckImproved(const LatticeBasis& basis, const Eigen::VectorXd& t,
                           const GaussianParam& s, double c, double k,
                           const CheckOptions& options = {});

// rho_s(L + x) / rho_s(L) against the improved distinguishing bound
// (two-factor form inside its regime, 1/(1 - epsilon) form outside).
// Out of regime unless lambda_1 >= k c tau and dist(x, L) >= c tau.
VerifyRecord CheckImprovedSandwich(const LatticeBasis& basis,
                                   const Eigen::VectorXd& x,
                                   const GaussianParam& s, double c, double k,
                                   const CheckOptions& options = {});

// lambda_i(L) * lambda_{n-i+1}(L*) <= n for each i. Requires n <= 5.
std::vector<VerifyRecord> CheckTransference(const LatticeBasis& basis,
                                            const CheckOptions& options = {});

// lhs = |rho_s(L + t) - Poisson dual sum|, rhs = combined tail bounds +
// 1e-10 rho_s(L + t). Also requires the imaginary part to vanish within
// the same bound.
VerifyRecord CheckPoissonRecord(const LatticeBasis& basis,
                                const Eigen::VectorXd& t,
                                const GaussianParam& s, double tol,
                                const CheckOptions& options = {});

struct SuiteConfig {
  std::vector<int> dims;
  std::vector<std::uint64_t> seeds;
  std::vector<double> c_grid;
  std::vector<double> k_grid;
  std::vector<double> s_grid;
  std::vector<LatticeStyle> styles;
  // Added to every seed; lets the CLI --seed flag shift a whole run.
  std::uint64_t base_seed = 0;
  bool negative_control = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

// n in {1..4}, seeds 0..4, c in {1, 1.5, 2, 3}, k in {1.2, 1.5, 2},
// s in {0.7, 1, 1.6}, both lattice styles.
SuiteConfig DefaultSuiteConfig();

// Missing keys keep their default values. Error(kParseError) on malformed
// JSON or wrong types.
SuiteConfig ParseSuiteConfig(std::string_view json_text);

struct SuiteSummary {
  std::uint64_t total = 0;
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::uint64_t out_of_regime = 0;
};

struct SuiteReport {
  std::vector<VerifyRecord> records;
  SuiteSummary summary;
};

// Runs every check over the configured grids. Record order depends only on
// the configuration.
SuiteReport RunSuite(const SuiteConfig& config);

// Error(kVerificationFailure) listing the failing records, if any.
void RequireAllHold(const SuiteReport& report);

std::string RecordToJson(const VerifyRecord& record);
std::string SummaryToJson(const SuiteSummary& summary);
// One JSON object per line: every record, then {"summary": {...}}.
void WriteReport(const SuiteReport& report, std::ostream& out);

}  // namespace latgauss

#endif  // LATGAUSS_VERIFY_H_
