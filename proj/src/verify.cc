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

#include "latgauss/verify.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "latgauss/bounds.h"
#include "latgauss/error.h"

namespace latgauss {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kRelativeSlack = 1e-10;
// Reference masses rho_s(L) >= 1 are computed to this absolute accuracy.
constexpr double kReferenceTol = 1e-12;

double Tau(double s, int n) {
  TailParams params;
  params.n = n;
  params.s = s;
  return params.tau();
}

// Tolerance for a mass that is compared against `scale`: small enough to
// keep the comparison meaningful, never above 1e-9.
double RelativeTol(double scale) {
  return std::clamp(1e-4 * scale, 1e-300, 1e-9);
}

double Corruption(const CheckOptions& options, int n) {
  return options.corrupt_bounds ? std::exp(-static_cast<double>(n)) : 1.0;
}

void Finish(VerifyRecord& record) {
  record.margin = record.rhs - record.lhs;
  record.tolerance += kRelativeSlack * std::abs(record.rhs);
  record.holds = record.lhs - record.rhs <= record.tolerance;
}

VerifyRecord OutOfRegime(Inequality inequality, Instance instance,
                         std::string note) {
  VerifyRecord record;
  record.inequality = inequality;
  record.in_regime = false;
  record.holds = true;
  record.note = std::move(note);
  record.instance = std::move(instance);
  return record;
}

std::string Describe(std::string_view family, int n, std::uint64_t seed) {
  return std::string(family) + "(n=" + std::to_string(n) +
         ",seed=" + std::to_string(seed) + ")";
}

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
      : engine_(Mix(Mix(Mix(seed) ^ a) ^ b)) {}

  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t Mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

// A uniformly random point of the fundamental parallelepiped.
Eigen::VectorXd RandomShift(const LatticeBasis& basis, Rng& rng) {
  Eigen::VectorXd t = Eigen::VectorXd::Zero(basis.ambient_dim());
  for (int i = 0; i < basis.rank(); ++i) {
    t += rng.Uniform01() * basis.vectors().row(i).transpose();
  }
  return t;
}

Instance MakeInstance(const GaussianParam& s, std::optional<double> c,
                      std::optional<double> k, const Eigen::VectorXd& shift) {
  Instance instance;
  instance.s = s.s();
  instance.c = c;
  instance.k = k;
  instance.shift = shift;
  return instance;
}

double Lambda1(const LatticeBasis& basis, const CheckOptions& options) {
  return ComputeSuccessiveMinima(basis, options.mass.enumeration).values.front();
}

}  // namespace

std::string_view InequalityName(Inequality inequality) {
  switch (inequality) {
    case Inequality::kRefined:
      return "refined";
    case Inequality::kSandwichLower:
      return "sandwich_lower";
    case Inequality::kSandwichUpper:
      return "sandwich_upper";
    case Inequality::kImproved:
      return "improved";
    case Inequality::kImprovedSandwich:
      return "improved_sandwich";
    case Inequality::kTransference:
      return "transference";
    case Inequality::kPoisson:
      return "poisson";
  }
  return "unknown";
}

std::string_view LatticeStyleName(LatticeStyle style) {
  return style == LatticeStyle::kUnimodularMix ? "unimodular_mix"
                                               : "diagonal_scaled";
}

LatticeStyle ParseLatticeStyle(std::string_view name) {
  if (name == "unimodular_mix") return LatticeStyle::kUnimodularMix;
  if (name == "diagonal_scaled") return LatticeStyle::kDiagonalScaled;
  throw Error(ErrorCode::kParseError,
              "unknown lattice style '" + std::string(name) + "'");
}

LatticeBasis RandomLattice(int n, std::uint64_t seed, LatticeStyle style) {
  if (n < 1 || n > 6) {
    throw Error(ErrorCode::kDomainError,
                "random lattices are generated for 1 <= n <= 6");
  }
  Rng rng(seed, static_cast<std::uint64_t>(n),
          static_cast<std::uint64_t>(style) + 1);
  if (style == LatticeStyle::kDiagonalScaled) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = static_cast<double>(rng.UniformInt(1, 5));
    return LatticeBasis(std::move(m));
  }
  // Integer row operations keep |det| = 1; a final sign fix makes it +1.
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  if (n > 1) {
    const int steps = 2 * n;
    for (int step = 0; step < steps; ++step) {
      const auto i = rng.UniformInt(0, n - 1);
      auto j = rng.UniformInt(0, n - 2);
      if (j >= i) ++j;
      const double multiplier = rng.UniformInt(0, 1) == 0 ? -1.0 : 1.0;
      m.row(i) += multiplier * m.row(j);
    }
    for (int i = n - 1; i > 0; --i) {
      const auto j = rng.UniformInt(0, i);
      if (j != i) m.row(i).swap(m.row(j));
    }
    if (m.determinant() < 0) m.row(0) *= -1.0;
  }
  return LatticeBasis(std::move(m));
}

VerifyRecord CheckRefined(const LatticeBasis& basis, const Eigen::VectorXd& t,
                          const GaussianParam& s, double c,
                          const CheckOptions& options) {
  const int n = basis.rank();
  Instance instance = MakeInstance(s, c, std::nullopt, t);
  if (!(c >= 1.0)) {
    return OutOfRegime(Inequality::kRefined, std::move(instance), "c < 1");
  }
  VerifyRecord record;
  record.inequality = Inequality::kRefined;
  record.instance = std::move(instance);
  record.rhs = std::exp(ClassicBoundLog(c, n)) * Corruption(options, n);

  const MassResult lattice =
      CosetMass(basis, Eigen::VectorXd::Zero(basis.ambient_dim()), s,
                kReferenceTol, options.mass);
  const MassResult excluded =
      ExcludedMass(basis, t, s, c * Tau(s.s(), n),
                   RelativeTol(record.rhs * lattice.value), options.mass);
  // The true ratio is at most (E + tail(E)) / M because M <= rho_s(L).
  record.lhs = excluded.value / lattice.value;
  record.tolerance = excluded.tail_bound / lattice.value;
  Finish(record);
  return record;
}

std::pair<VerifyRecord, VerifyRecord> CheckSandwich(
    const LatticeBasis& basis, const Eigen::VectorXd& x, const GaussianParam& s,
    const CheckOptions& options) {
  const int n = basis.rank();
  Instance instance = MakeInstance(s, std::nullopt, std::nullopt, x);
  const double r_x = DistToLattice(basis, x, options.mass.enumeration).distance;
  const double tau = Tau(s.s(), n);
  if (r_x < tau) {
    const std::string note = "r_x = " + std::to_string(r_x) +
                             " < tau = " + std::to_string(tau);
    return {OutOfRegime(Inequality::kSandwichLower, instance, note),
            OutOfRegime(Inequality::kSandwichUpper, instance, note)};
  }
  const SandwichLog bounds = SandwichBoundsLog(r_x, s.s(), n);
  const double rho_r = std::exp(bounds.lower_log);

  const MassResult lattice =
      CosetMass(basis, Eigen::VectorXd::Zero(basis.ambient_dim()), s,
                kReferenceTol, options.mass);
  // rho_s(L + x) >= rho_s(r_x) rho_s(L), so this tolerance is relative.
  const MassResult coset = CosetMass(basis, x, s,
                                     RelativeTol(rho_r * lattice.value * 1e-2),
                                     options.mass);
  const double ratio = coset.value / lattice.value;

  VerifyRecord lower;
  lower.inequality = Inequality::kSandwichLower;
  lower.instance = instance;
  lower.lhs = rho_r;
  lower.rhs = ratio;
  lower.tolerance =
      ratio - coset.value / (lattice.value + lattice.tail_bound);
  lower.note = "r_x = " + std::to_string(r_x);
  Finish(lower);

  VerifyRecord upper;
  upper.inequality = Inequality::kSandwichUpper;
  upper.instance = std::move(instance);
  upper.lhs = ratio;
  upper.rhs = std::exp(bounds.upper_log) * Corruption(options, n);
  upper.tolerance = coset.tail_bound / lattice.value;
  upper.note = lower.note;
  Finish(upper);
  return {std::move(lower), std::move(upper)};
}

VerifyRecord CheckImproved(const LatticeBasis& basis, const Eigen::VectorXd& t,
                           const GaussianParam& s, double c, double k,
                           const CheckOptions& options) {
  const int n = basis.rank();
  Instance instance = MakeInstance(s, c, k, t);
  if (!(c >= 1.0) || !(k > 1.0)) {
    return OutOfRegime(Inequality::kImproved, std::move(instance),
                       "requires c >= 1 and k > 1");
  }
  const double tau = Tau(s.s(), n);
  const double lambda1 = Lambda1(basis, options);
  if (lambda1 < k * c * tau * (1.0 - 1e-12)) {
    return OutOfRegime(Inequality::kImproved, std::move(instance),
                       "lambda_1 = " + std::to_string(lambda1) +
                           " < k c tau = " + std::to_string(k * c * tau));
  }
  VerifyRecord record;
  record.inequality = Inequality::kImproved;
  record.instance = std::move(instance);
  record.rhs = std::exp(ImprovedBoundLog(c, k, n)) * Corruption(options, n);
  const MassResult excluded = ExcludedMass(
      basis, t, s, c * tau, RelativeTol(record.rhs), options.mass);
  record.lhs = excluded.value;
  record.tolerance = excluded.tail_bound;
  Finish(record);
  return record;
}

VerifyRecord CheckImprovedSandwich(const LatticeBasis& basis,
                                   const Eigen::VectorXd& x,
                                   const GaussianParam& s, double c, double k,
                                   const CheckOptions& options) {
  const int n = basis.rank();
  Instance instance = MakeInstance(s, c, k, x);
  if (!(c >= 1.0) || !(k > 1.0)) {
    return OutOfRegime(Inequality::kImprovedSandwich, std::move(instance),
                       "requires c >= 1 and k > 1");
  }
  const double tau = Tau(s.s(), n);
  const double lambda1 = Lambda1(basis, options);
  if (lambda1 < k * c * tau * (1.0 - 1e-12)) {
    return OutOfRegime(Inequality::kImprovedSandwich, std::move(instance),
                       "lambda_1 < k c tau");
  }
  const double r_x = DistToLattice(basis, x, options.mass.enumeration).distance;
  if (r_x < c * tau) {
    return OutOfRegime(Inequality::kImprovedSandwich, std::move(instance),
                       "r_x = " + std::to_string(r_x) +
                           " < c tau = " + std::to_string(c * tau));
  }
  const BoundReport bound = ImprovedSandwichLog(c, k, n);
  VerifyRecord record;
  record.inequality = Inequality::kImprovedSandwich;
  record.instance = std::move(instance);
  record.rhs = std::exp(bound.log_value) * Corruption(options, n);
  record.note = bound.regime_ok ? "two-factor form"
                                : "outside two-factor regime; 1/(1-eps) form";

  const MassResult lattice =
      CosetMass(basis, Eigen::VectorXd::Zero(basis.ambient_dim()), s,
                kReferenceTol, options.mass);
  const MassResult coset =
      CosetMass(basis, x, s, RelativeTol(record.rhs), options.mass);
  record.lhs = coset.value / lattice.value;
  record.tolerance = coset.tail_bound / lattice.value;
  Finish(record);
  return record;
}

std::vector<VerifyRecord> CheckTransference(const LatticeBasis& basis,
                                            const CheckOptions& options) {
  const int n = basis.rank();
  if (n > 5) {
    throw Error(ErrorCode::kDomainError,
                "transference checks are limited to n <= 5");
  }
  const SuccessiveMinima primal =
      ComputeSuccessiveMinima(basis, options.mass.enumeration);
  const SuccessiveMinima dual =
      ComputeSuccessiveMinima(DualBasis(basis), options.mass.enumeration);
  std::vector<VerifyRecord> records;
  for (int i = 0; i < n; ++i) {
    VerifyRecord record;
    record.inequality = Inequality::kTransference;
    record.instance.index = i + 1;
    record.lhs = primal.values[i] * dual.values[n - 1 - i];
    record.rhs = static_cast<double>(n);
    Finish(record);
    records.push_back(std::move(record));
  }
  return records;
}

VerifyRecord CheckPoissonRecord(const LatticeBasis& basis,
                                const Eigen::VectorXd& t,
                                const GaussianParam& s, double tol,
                                const CheckOptions& options) {
  const PoissonCheck check = CheckPoisson(basis, t, s, tol, options.mass);
  VerifyRecord record;
  record.inequality = Inequality::kPoisson;
  record.instance.s = s.s();
  record.instance.shift = t;
  record.lhs = check.agreement;
  record.rhs = check.lhs.tail_bound + check.rhs.tail_bound +
               kRelativeSlack * check.lhs.value;
  record.margin = record.rhs - record.lhs;
  record.holds = record.lhs <= record.rhs &&
                 std::abs(check.rhs.imag_part) <= record.rhs;
  std::ostringstream note;
  note.precision(17);
  note << "imag = " << check.rhs.imag_part;
  record.note = note.str();
  return record;
}

SuiteConfig DefaultSuiteConfig() {
  SuiteConfig config;
  config.dims = {1, 2, 3, 4};
  config.seeds = {0, 1, 2, 3, 4};
  config.c_grid = {1.0, 1.5, 2.0, 3.0};
  config.k_grid = {1.2, 1.5, 2.0};
  config.s_grid = {0.7, 1.0, 1.6};
  config.styles = {LatticeStyle::kUnimodularMix, LatticeStyle::kDiagonalScaled};
  return config;
}

SuiteConfig ParseSuiteConfig(std::string_view json_text) {
  SuiteConfig config = DefaultSuiteConfig();
  try {
    const ordered_json doc = ordered_json::parse(json_text);
    if (!doc.is_object()) {
      throw Error(ErrorCode::kParseError, "suite config must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
      if (key == "dims") {
        config.dims = value.get<std::vector<int>>();
      } else if (key == "seeds") {
        config.seeds = value.get<std::vector<std::uint64_t>>();
      } else if (key == "c_grid") {
        config.c_grid = value.get<std::vector<double>>();
      } else if (key == "k_grid") {
        config.k_grid = value.get<std::vector<double>>();
      } else if (key == "s_grid") {
        config.s_grid = value.get<std::vector<double>>();
      } else if (key == "styles") {
        config.styles.clear();
        for (const auto& name : value) {
          config.styles.push_back(ParseLatticeStyle(name.get<std::string>()));
        }
      } else if (key == "negative_control") {
        config.negative_control = value.get<bool>();
      } else if (key == "budget") {
        config.budget = value.get<std::uint64_t>();
      } else if (key == "base_seed") {
        config.base_seed = value.get<std::uint64_t>();
      } else {
        throw Error(ErrorCode::kParseError, "unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  for (int n : config.dims) {
    if (n < 1 || n > 6) {
      throw Error(ErrorCode::kParseError, "dims must lie in [1, 6]");
    }
  }
  for (double s : config.s_grid) {
    if (!(s > 0.0)) throw Error(ErrorCode::kParseError, "s_grid must be > 0");
  }
  return config;
}

SuiteReport RunSuite(const SuiteConfig& config) {
  CheckOptions options;
  options.mass.enumeration.budget = config.budget;
  options.corrupt_bounds = config.negative_control;

  SuiteReport report;
  auto add = [&](VerifyRecord record) {
    report.records.push_back(std::move(record));
  };

  for (int n : config.dims) {
    // Random lattices: transference, Poisson, refined tail, sandwich.
    for (LatticeStyle style : config.styles) {
      for (std::uint64_t raw_seed : config.seeds) {
        const std::uint64_t seed = raw_seed + config.base_seed;
        const LatticeBasis basis = RandomLattice(n, seed, style);
        const std::string name = Describe(LatticeStyleName(style), n, seed);
        Rng rng(seed, static_cast<std::uint64_t>(n) << 8,
                static_cast<std::uint64_t>(style) + 17);
        auto tag = [&](VerifyRecord record) {
          record.instance.seed = seed;
          record.instance.lattice = name;
          add(std::move(record));
        };
        if (n <= 5) {
          for (auto& record : CheckTransference(basis, options)) tag(record);
        }
        for (double s_value : config.s_grid) {
          const GaussianParam s(s_value);
          tag(CheckPoissonRecord(basis, RandomShift(basis, rng), s, 1e-9,
                                 options));
          for (double c : config.c_grid) {
            tag(CheckRefined(basis, RandomShift(basis, rng), s, c, options));
          }
          auto [lower, upper] =
              CheckSandwich(basis, RandomShift(basis, rng), s, options);
          tag(std::move(lower));
          tag(std::move(upper));
        }
      }
    }

    // Sandwich along increasing r_x on a fixed lattice: alpha Z^n with
    // alpha = 6 tau, x = r e_1 for r from tau to 3 tau.
    for (double s_value : config.s_grid) {
      const GaussianParam s(s_value);
      const double tau = Tau(s_value, n);
      const LatticeBasis basis(6.0 * tau * Eigen::MatrixXd::Identity(n, n));
      for (int step = 0; step <= 8; ++step) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
        x(0) = (1.0 + 0.25 * step) * tau;
        auto [lower, upper] = CheckSandwich(basis, x, s, options);
        lower.instance.lattice = upper.instance.lattice =
            "scaled_identity(n=" + std::to_string(n) + ",alpha=6tau)";
        add(std::move(lower));
        add(std::move(upper));
      }
    }

    // Improved inequality on lattices with lambda_1 = k c tau exactly:
    // alpha Z^n and alpha diag(d) / min(d).
    for (std::uint64_t raw_seed : config.seeds) {
      const std::uint64_t seed = raw_seed + config.base_seed;
      const LatticeBasis diag =
          RandomLattice(n, seed, LatticeStyle::kDiagonalScaled);
      const Eigen::VectorXd d = diag.vectors().diagonal();
      const Eigen::VectorXd shape = d / d.minCoeff();
      Rng rng(seed, static_cast<std::uint64_t>(n) << 8, 99);
      for (double k : config.k_grid) {
        for (double c : config.c_grid) {
          for (double s_value : config.s_grid) {
            const GaussianParam s(s_value);
            const double alpha = k * c * Tau(s_value, n);
            const LatticeBasis scaled_identity(
                alpha * Eigen::MatrixXd::Identity(n, n));
            const LatticeBasis scaled_diag(
                Eigen::MatrixXd(alpha * shape.asDiagonal()));
            const std::string id_name =
                Describe("scaled_identity", n, seed);
            const std::string diag_name =
                Describe("scaled_diagonal", n, seed);
            auto tag = [&](VerifyRecord record, const std::string& name) {
              record.instance.seed = seed;
              record.instance.lattice = name;
              add(std::move(record));
            };
            // The first seed uses the centered lattice itself.
            const bool centered = raw_seed == config.seeds.front();
            const Eigen::VectorXd t_id =
                centered ? Eigen::VectorXd::Zero(n)
                         : RandomShift(scaled_identity, rng);
            const Eigen::VectorXd t_diag =
                centered ? Eigen::VectorXd::Zero(n)
                         : RandomShift(scaled_diag, rng);
            tag(CheckImproved(scaled_identity, t_id, s, c, k, options), id_name);
            tag(CheckImproved(scaled_diag, t_diag, s, c, k, options),
                diag_name);
            if (centered) {
              const Eigen::VectorXd hole =
                  Eigen::VectorXd::Constant(n, 0.5 * alpha);
              tag(CheckImprovedSandwich(scaled_identity, hole, s, c, k,
                                        options),
                  id_name);
            }
          }
        }
      }
    }
  }

  for (const VerifyRecord& record : report.records) {
    ++report.summary.total;
    if (!record.in_regime) {
      ++report.summary.out_of_regime;
    } else if (record.holds) {
      ++report.summary.holds;
    } else {
      ++report.summary.fails;
    }
  }
  return report;
}

void RequireAllHold(const SuiteReport& report) {
  if (report.summary.fails == 0) return;
  std::ostringstream message;
  message << report.summary.fails << " of " << report.summary.total
          << " records failed";
  int listed = 0;
  for (const VerifyRecord& record : report.records) {
    if (record.in_regime && !record.holds && listed++ < 5) {
      message << "\n  " << RecordToJson(record);
    }
  }
  throw Error(ErrorCode::kVerificationFailure, message.str());
}

std::string RecordToJson(const VerifyRecord& record) {
  ordered_json j;
  j["inequality"] = InequalityName(record.inequality);
  j["holds"] = record.holds;
  j["in_regime"] = record.in_regime;
  j["lhs"] = record.lhs;
  j["rhs"] = record.rhs;
  j["margin"] = record.margin;
  j["tolerance"] = record.tolerance;
  ordered_json instance;
  instance["seed"] = record.instance.seed;
  instance["lattice"] = record.instance.lattice;
  if (record.instance.s) instance["s"] = *record.instance.s;
  if (record.instance.c) instance["c"] = *record.instance.c;
  if (record.instance.k) instance["k"] = *record.instance.k;
  if (record.instance.shift) {
    const Eigen::VectorXd& v = *record.instance.shift;
    instance["shift"] = std::vector<double>(v.data(), v.data() + v.size());
  }
  if (record.instance.index) instance["index"] = *record.instance.index;
  j["instance"] = std::move(instance);
  if (!record.note.empty()) j["note"] = record.note;
  return j.dump();
}

std::string SummaryToJson(const SuiteSummary& summary) {
  ordered_json j;
  j["summary"]["total"] = summary.total;
  j["summary"]["holds"] = summary.holds;
  j["summary"]["fails"] = summary.fails;
  j["summary"]["out_of_regime"] = summary.out_of_regime;
  return j.dump();
}

void WriteReport(const SuiteReport& report, std::ostream& out) {
  for (const VerifyRecord& record : report.records) {
    out << RecordToJson(record) << '\n';
  }
  out << SummaryToJson(report.summary) << '\n';
}

}  // namespace latgauss
