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

// Closed-form Gaussian tail and distinguishing bounds, all evaluated as
// natural logarithms. The literal values underflow double precision in the
// interesting regime (n >= 500, c >= 2), so nothing here exponentiates.
//
// Notation: tau = s * sqrt(n / (2 pi)) is the radius at which the tail
// bounds start to bite; c >= 1 scales it, k > 1 measures how far the
// shortest vector sits beyond c * tau.
//
// Internally every formula is evaluated in long double and rounded once,
// which keeps algebraic identities between different routes exact to about
// one ulp of the result.

#ifndef LATGAUSS_BOUNDS_H_
#define LATGAUSS_BOUNDS_H_

#include <optional>
#include <string_view>

namespace latgauss {

// Smallest k for which the two-factor distinguishing bound is claimed.
inline constexpr double kImprovedSandwichMinK = 1.04;
// Smallest dimension for which the two-factor bound is claimed.
inline constexpr int kImprovedSandwichMinN = 500;

enum class BoundKind {
  kClassic,
  kEpsilon,
  kImproved,
  kSandwichLower,
  kSandwichUpper,
  kImprovedSandwich,
  kUnified,
  kImprovementRatio,
};

std::string_view BoundKindName(BoundKind kind);

struct TailParams {
  double c = 1.0;
  double k = 0.0;
  int n = 1;
  std::optional<double> s;
  std::optional<double> r_x;

  // s * sqrt(n / (2 pi)); requires s.
  double tau() const;
};

struct BoundReport {
  BoundKind kind = BoundKind::kClassic;
  double log_value = 0.0;
  TailParams params;
  // False when the parameters sit outside the regime in which the bound is
  // claimed (k <= 1 for epsilon, k < 1.04 or n < 500 for the two-factor
  // form). The value is still meaningful as a formula evaluation.
  bool regime_ok = true;
};

// n (ln c + 1/2 - c^2/2): log of (c sqrt(e) e^{-c^2/2})^n, the bound on the
// fraction of rho_s(L) carried by (L + t) outside radius c * tau.
// Error(kDomainError) if c < 1 or n < 1.
double ClassicBoundLog(double c, int n);

// Smallest c >= 1 with ClassicBoundLog(c, n) <= log_target (c = 1 when
// log_target >= 0). Used to pick certified truncation radii.
double ClassicBoundThreshold(double log_target, int n);

// log epsilon = n (ln k + 1/2 - k^2/2). Error(kDomainError) if k <= 0.
double EpsilonLog(double k, int n);
BoundReport EpsilonReport(double k, int n);

// (n/2)(1 - c^2) - ln(1 - epsilon(k, n)). Error(kDomainError) for c < 1 or
// k <= 1, Error(kEpsilonTooLarge) if epsilon >= 1.
double ImprovedBoundLog(double c, double k, int n);

struct SandwichLog {
  double lower_log = 0.0;
  double upper_log = 0.0;
};

// Bounds on rho_s(L + x) / rho_s(L) with r_x = dist(x, L):
//   lower = -pi r_x^2 / s^2,
//   upper = n ln(r_x / tau) + n/2 - pi r_x^2 / s^2.
// Error(kDomainError) if r_x < tau or s <= 0.
SandwichLog SandwichBoundsLog(double r_x, double s, int n);

// ln 2 + (n/2)(1 - c^2), the two-factor bound without regime checks.
double TwoFactorBoundLog(double c, int n);

// The two-factor distinguishing bound. Inside its regime (k >= 1.04,
// n >= 500) the value is TwoFactorBoundLog(c, n). Outside it, the report
// falls back to ImprovedBoundLog(c, k, n) with regime_ok = false.
BoundReport ImprovedSandwichLog(double c, double k, int n);

// ln 2 + n/2 + (pi/s^2)(r_x^2 - tau^2 c^2) - pi r_x^2 / s^2. The r_x terms
// cancel, leaving TwoFactorBoundLog(c, n).
double UnifiedFormLog(double c, int n, double s, double r_x);

// Log of classic bound over two-factor bound, computed as the difference of
// the two routes. Equals n ln c - ln 2.
double ImprovementRatioLog(double c, int n);

// Same quantity through the closed form n ln c - ln 2.
double ImprovementRatioClosedFormLog(double c, int n);

// ln(1 - e^a) for a < 0, accurate at both ends.
double Log1mExp(double a);

BoundReport Evaluate(BoundKind kind, const TailParams& params);

}  // namespace latgauss

#endif  // LATGAUSS_BOUNDS_H_
