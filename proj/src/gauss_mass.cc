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

#include "latgauss/gauss_mass.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "latgauss/bounds.h"
#include "latgauss/error.h"
#include "vector_ops.h"

namespace latgauss {
namespace {

constexpr double kPi = std::numbers::pi;
// Truncation radii are widened by this relative amount so that rounding in
// c * tau never drops a point the tail bound does not cover.
constexpr double kRadiusWidening = 1e-12;

double Tau(const GaussianParam& s, int n) {
  return s.s() * std::sqrt(static_cast<double>(n) / (2.0 * kPi));
}

void RequireFullRank(const LatticeBasis& basis) {
  if (!basis.full_rank()) {
    throw Error(ErrorCode::kNotFullRank,
                "Gaussian masses are computed for full-rank lattices only");
  }
}

void RequireTolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorCode::kDomainError, "tol must be positive and finite");
  }
}

// Sum of rho_s over the given squared norms, smallest norm first.
double SumSorted(std::vector<double>& squared_norms, const GaussianParam& s) {
  std::sort(squared_norms.begin(), squared_norms.end());
  internal::CompensatedSum sum;
  const double scale = kPi / (s.s() * s.s());
  for (double q : squared_norms) sum.Add(std::exp(-scale * q));
  return sum.Value();
}

// Squared norms of the points u of L + t_reduced with ||u||^2 <= squared_radius.
std::vector<double> CosetNorms(const LatticeBasis& basis,
                               const Eigen::VectorXd& t_reduced,
                               double squared_radius,
                               const EnumerationOptions& options) {
  std::vector<double> norms;
  VisitPointsInBall(
      basis, -t_reduced, squared_radius,
      [&](const std::vector<std::int64_t>&, const Eigen::VectorXd& v) {
        norms.push_back(internal::SquaredNorm(v + t_reduced));
      },
      options);
  return norms;
}

// Upper bound on rho_s(L): with c0 chosen so that beta = (c0 sqrt(e)
// e^{-c0^2/2})^n <= 1/2, the truncated sum T inside c0 * tau satisfies
// rho_s(L) <= T + beta rho_s(L), hence rho_s(L) <= T / (1 - beta).
double LatticeMassUpperBound(const LatticeBasis& basis, const GaussianParam& s,
                             const EnumerationOptions& options) {
  const int n = basis.rank();
  const double c0 = ClassicBoundThreshold(-std::numbers::ln2, n);
  const double radius = c0 * Tau(s, n) * (1.0 + kRadiusWidening);
  std::vector<double> norms =
      CosetNorms(basis, Eigen::VectorXd::Zero(basis.ambient_dim()),
                 radius * radius, options);
  const double truncated = SumSorted(norms, s);
  const double beta = std::exp(ClassicBoundLog(c0, n));
  return truncated / (1.0 - beta) * (1.0 + 1e-12);
}

struct Truncation {
  double radius = 0.0;
  double tail_bound = 0.0;
};

// Radius beyond which the mass of any coset of L is below tol / 2.
Truncation PlanTruncation(const LatticeBasis& basis, const GaussianParam& s,
                          double tol, double mass_bound,
                          const EnumerationOptions& options) {
  const int n = basis.rank();
  const double c = ClassicBoundThreshold(std::log(tol / (2.0 * mass_bound)), n);
  Truncation plan;
  plan.radius = c * Tau(s, n) * (1.0 + kRadiusWidening);
  plan.tail_bound = std::exp(ClassicBoundLog(c, n)) * mass_bound;
  const double predicted = PredictedPointCount(basis, plan.radius);
  if (predicted > static_cast<double>(options.budget)) {
    throw Error(ErrorCode::kTolUnreachable,
                "certifying tol = " + std::to_string(tol) +
                    " needs radius " + std::to_string(plan.radius) +
                    ", up to " + std::to_string(predicted) +
                    " points, over the budget of " +
                    std::to_string(options.budget));
  }
  return plan;
}

Eigen::VectorXd ReduceModLattice(const LatticeBasis& basis,
                                 const Eigen::VectorXd& t,
                                 const EnumerationOptions& options) {
  return t - DistToLattice(basis, t, options).closest.vector;
}

}  // namespace

GaussianParam::GaussianParam(double s) : s_(s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::kDomainError, "s must be positive");
  }
}

double RhoPointLog(const GaussianParam& s, const Eigen::VectorXd& x) {
  return -kPi * internal::SquaredNorm(x) / (s.s() * s.s());
}

double RhoPoint(const GaussianParam& s, const Eigen::VectorXd& x) {
  return std::exp(RhoPointLog(s, x));
}

double RhoRadius(const GaussianParam& s, double r) {
  return std::exp(-kPi * r * r / (s.s() * s.s()));
}

MassResult CosetMass(const LatticeBasis& basis, const Eigen::VectorXd& t,
                     const GaussianParam& s, double tol,
                     const MassOptions& options) {
  RequireFullRank(basis);
  RequireTolerance(tol);
  const Eigen::VectorXd reduced = ReduceModLattice(basis, t, options.enumeration);
  const double mass_bound =
      LatticeMassUpperBound(basis, s, options.enumeration);
  const Truncation plan =
      PlanTruncation(basis, s, tol, mass_bound, options.enumeration);

  std::vector<double> norms = CosetNorms(basis, reduced,
                                         plan.radius * plan.radius,
                                         options.enumeration);
  MassResult result;
  result.points_used = norms.size();
  result.value = SumSorted(norms, s);
  result.tail_bound = plan.tail_bound;
  result.radius = plan.radius;
  return result;
}

MassResult ExcludedMass(const LatticeBasis& basis, const Eigen::VectorXd& t,
                        const GaussianParam& s, double threshold, double tol,
                        const MassOptions& options) {
  RequireFullRank(basis);
  RequireTolerance(tol);
  if (!(threshold >= 0.0) || !std::isfinite(threshold)) {
    throw Error(ErrorCode::kDomainError, "threshold must be finite and >= 0");
  }
  const Eigen::VectorXd reduced = ReduceModLattice(basis, t, options.enumeration);
  const double mass_bound =
      LatticeMassUpperBound(basis, s, options.enumeration);
  const Truncation plan =
      PlanTruncation(basis, s, tol, mass_bound, options.enumeration);

  MassResult result;
  if (threshold >= plan.radius) {
    // Everything at or beyond the threshold is already tail.
    const int n = basis.rank();
    const double c =
        std::max(1.0, threshold / Tau(s, n) * (1.0 - kRadiusWidening));
    result.tail_bound =
        std::min(plan.tail_bound, std::exp(ClassicBoundLog(c, n)) * mass_bound);
    result.radius = threshold;
    return result;
  }

  std::vector<double> norms = CosetNorms(basis, reduced,
                                         plan.radius * plan.radius,
                                         options.enumeration);
  const double threshold_sq = threshold * threshold;
  std::erase_if(norms, [&](double q) { return q < threshold_sq; });
  result.points_used = norms.size();
  result.value = SumSorted(norms, s);
  result.tail_bound = plan.tail_bound;
  result.radius = plan.radius;
  return result;
}

PoissonCheck CheckPoisson(const LatticeBasis& basis, const Eigen::VectorXd& t,
                          const GaussianParam& s, double tol,
                          const MassOptions& options) {
  PoissonCheck check;
  check.lhs = CosetMass(basis, t, s, tol, options);

  const int n = basis.rank();
  const LatticeBasis dual = DualBasis(basis);
  const GaussianParam dual_s(1.0 / s.s());
  const double scale =
      std::exp(n * std::log(s.s()) - std::log(basis.det()));
  const double dual_mass_bound =
      LatticeMassUpperBound(dual, dual_s, options.enumeration);
  const Truncation plan = PlanTruncation(dual, dual_s, tol / scale,
                                         dual_mass_bound, options.enumeration);

  // <t, w> only matters mod 1, so the reduced shift keeps phases small.
  const Eigen::VectorXd reduced = ReduceModLattice(basis, t, options.enumeration);
  std::vector<std::pair<double, double>> terms;  // (||w||^2, <t, w>)
  VisitPointsInBall(
      dual, Eigen::VectorXd::Zero(dual.ambient_dim()),
      plan.radius * plan.radius,
      [&](const std::vector<std::int64_t>&, const Eigen::VectorXd& w) {
        terms.emplace_back(internal::SquaredNorm(w), reduced.dot(w));
      },
      options.enumeration);
  std::sort(terms.begin(), terms.end());

  internal::CompensatedSum re;
  internal::CompensatedSum im;
  const double gauss_scale = kPi / (dual_s.s() * dual_s.s());
  for (const auto& [q, phase] : terms) {
    const double weight = std::exp(-gauss_scale * q);
    re.Add(weight * std::cos(2.0 * kPi * phase));
    im.Add(weight * std::sin(2.0 * kPi * phase));
  }
  check.rhs.real_part = scale * re.Value();
  check.rhs.imag_part = scale * im.Value();
  check.rhs.tail_bound = scale * plan.tail_bound;
  check.agreement = std::abs(check.lhs.value - check.rhs.real_part);
  return check;
}

}  // namespace latgauss
