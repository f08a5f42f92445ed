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

#include "latgauss/bounds.h"

#include <cmath>
#include <numbers>
#include <string>

#include "latgauss/error.h"

namespace latgauss {
namespace {

using Wide = long double;

constexpr Wide kPi = std::numbers::pi_v<long double>;
constexpr Wide kLn2 = std::numbers::ln2_v<long double>;

void RequireN(int n) {
  if (n < 1) {
    throw Error(ErrorCode::kDomainError,
                "n must be a positive integer, got " + std::to_string(n));
  }
}

void RequireC(double c) {
  if (!(c >= 1.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::kDomainError,
                "c must be a finite value >= 1, got " + std::to_string(c));
  }
}

void RequireS(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::kDomainError, "s must be positive");
  }
}

// n (ln x + 1/2 - x^2/2)
Wide ShapeLog(Wide x, int n) {
  return static_cast<Wide>(n) * (std::log(x) + 0.5L - 0.5L * x * x);
}

Wide TwoFactorWide(Wide c, int n) {
  return kLn2 + 0.5L * static_cast<Wide>(n) * (1.0L - c * c);
}

Wide TauWide(double s, int n) {
  return static_cast<Wide>(s) * std::sqrt(static_cast<Wide>(n) / (2.0L * kPi));
}

}  // namespace

std::string_view BoundKindName(BoundKind kind) {
  switch (kind) {
    case BoundKind::kClassic:
      return "classic";
    case BoundKind::kEpsilon:
      return "epsilon";
    case BoundKind::kImproved:
      return "improved";
    case BoundKind::kSandwichLower:
      return "sandwich_lower";
    case BoundKind::kSandwichUpper:
      return "sandwich_upper";
    case BoundKind::kImprovedSandwich:
      return "improved_sandwich";
    case BoundKind::kUnified:
      return "unified";
    case BoundKind::kImprovementRatio:
      return "improvement_ratio";
  }
  return "unknown";
}

double TailParams::tau() const {
  if (!s.has_value()) {
    throw Error(ErrorCode::kDomainError, "tau requires the Gaussian width s");
  }
  RequireS(*s);
  RequireN(n);
  return static_cast<double>(TauWide(*s, n));
}

double ClassicBoundLog(double c, int n) {
  RequireC(c);
  RequireN(n);
  return static_cast<double>(ShapeLog(c, n));
}

double ClassicBoundThreshold(double log_target, int n) {
  RequireN(n);
  if (std::isnan(log_target)) {
    throw Error(ErrorCode::kDomainError, "target must not be NaN");
  }
  if (log_target >= 0.0) return 1.0;
  if (std::isinf(log_target)) {
    throw Error(ErrorCode::kDomainError, "target must be finite");
  }
  double lo = 1.0;
  double hi = 2.0;
  while (ClassicBoundLog(hi, n) > log_target) {
    lo = hi;
    hi *= 2.0;
  }
  // ClassicBoundLog is strictly decreasing on c > 1; bisect to adjacent
  // doubles and return the end that satisfies the target.
  while (true) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (ClassicBoundLog(mid, n) > log_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double EpsilonLog(double k, int n) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(ErrorCode::kDomainError,
                "k must be positive, got " + std::to_string(k));
  }
  RequireN(n);
  return static_cast<double>(ShapeLog(k, n));
}

BoundReport EpsilonReport(double k, int n) {
  BoundReport report;
  report.kind = BoundKind::kEpsilon;
  report.log_value = EpsilonLog(k, n);
  report.params.k = k;
  report.params.n = n;
  report.regime_ok = k > 1.0;
  return report;
}

double Log1mExp(double a) {
  if (!(a < 0.0)) {
    throw Error(ErrorCode::kEpsilonTooLarge,
                "1 - e^a requires a < 0 (epsilon < 1)");
  }
  const Wide wa = a;
  if (wa > -kLn2) return static_cast<double>(std::log(-std::expm1(wa)));
  return static_cast<double>(std::log1p(-std::exp(wa)));
}

double ImprovedBoundLog(double c, double k, int n) {
  RequireC(c);
  RequireN(n);
  if (!(k > 1.0)) {
    throw Error(ErrorCode::kDomainError,
                "k must exceed 1, got " + std::to_string(k));
  }
  const double eps_log = EpsilonLog(k, n);
  if (!(eps_log < 0.0)) {
    throw Error(ErrorCode::kEpsilonTooLarge, "epsilon >= 1");
  }
  const Wide head = 0.5L * static_cast<Wide>(n) * (1.0L - static_cast<Wide>(c) * c);
  return static_cast<double>(head - static_cast<Wide>(Log1mExp(eps_log)));
}

SandwichLog SandwichBoundsLog(double r_x, double s, int n) {
  RequireS(s);
  RequireN(n);
  const Wide tau = TauWide(s, n);
  // Compared in double so that r_x = tau() itself is accepted.
  if (!(r_x >= static_cast<double>(tau)) || !std::isfinite(r_x)) {
    throw Error(ErrorCode::kDomainError,
                "r_x = " + std::to_string(r_x) + " is below tau = " +
                    std::to_string(static_cast<double>(tau)));
  }
  const Wide r = r_x;
  const Wide gauss = -kPi * r * r / (static_cast<Wide>(s) * s);
  const Wide upper =
      static_cast<Wide>(n) * std::log(r / tau) + 0.5L * n + gauss;
  return {static_cast<double>(gauss), static_cast<double>(upper)};
}

double TwoFactorBoundLog(double c, int n) {
  RequireC(c);
  RequireN(n);
  return static_cast<double>(TwoFactorWide(c, n));
}

BoundReport ImprovedSandwichLog(double c, double k, int n) {
  BoundReport report;
  report.kind = BoundKind::kImprovedSandwich;
  report.params.c = c;
  report.params.k = k;
  report.params.n = n;
  report.regime_ok = k >= kImprovedSandwichMinK && n >= kImprovedSandwichMinN;
  report.log_value =
      report.regime_ok ? TwoFactorBoundLog(c, n) : ImprovedBoundLog(c, k, n);
  return report;
}

double UnifiedFormLog(double c, int n, double s, double r_x) {
  RequireC(c);
  RequireN(n);
  RequireS(s);
  if (!(r_x >= 0.0) || !std::isfinite(r_x)) {
    throw Error(ErrorCode::kDomainError, "r_x must be finite and >= 0");
  }
  const Wide tau = TauWide(s, n);
  const Wide scale = kPi / (static_cast<Wide>(s) * s);
  const Wide r = r_x;
  const Wide wc = c;
  return static_cast<double>(kLn2 + 0.5L * n +
                             scale * (r * r - tau * tau * wc * wc) -
                             scale * r * r);
}

double ImprovementRatioLog(double c, int n) {
  RequireC(c);
  RequireN(n);
  return static_cast<double>(ShapeLog(c, n) - TwoFactorWide(c, n));
}

double ImprovementRatioClosedFormLog(double c, int n) {
  RequireC(c);
  RequireN(n);
  return static_cast<double>(static_cast<Wide>(n) * std::log(static_cast<Wide>(c)) -
                             kLn2);
}

BoundReport Evaluate(BoundKind kind, const TailParams& params) {
  BoundReport report;
  report.kind = kind;
  report.params = params;
  auto need = [&](const std::optional<double>& v, const char* name) {
    if (!v.has_value()) {
      throw Error(ErrorCode::kDomainError,
                  std::string(BoundKindName(kind)) + " requires " + name);
    }
    return *v;
  };
  switch (kind) {
    case BoundKind::kClassic:
      report.log_value = ClassicBoundLog(params.c, params.n);
      break;
    case BoundKind::kEpsilon:
      return EpsilonReport(params.k, params.n);
    case BoundKind::kImproved:
      report.log_value = ImprovedBoundLog(params.c, params.k, params.n);
      break;
    case BoundKind::kSandwichLower:
      report.log_value =
          SandwichBoundsLog(need(params.r_x, "r_x"), need(params.s, "s"),
                            params.n)
              .lower_log;
      break;
    case BoundKind::kSandwichUpper:
      report.log_value =
          SandwichBoundsLog(need(params.r_x, "r_x"), need(params.s, "s"),
                            params.n)
              .upper_log;
      break;
    case BoundKind::kImprovedSandwich: {
      BoundReport r = ImprovedSandwichLog(params.c, params.k, params.n);
      r.params = params;
      return r;
    }
    case BoundKind::kUnified:
      report.log_value = UnifiedFormLog(params.c, params.n, need(params.s, "s"),
                                        need(params.r_x, "r_x"));
      report.regime_ok = params.k >= kImprovedSandwichMinK &&
                         params.n >= kImprovedSandwichMinN;
      break;
    case BoundKind::kImprovementRatio:
      report.log_value = ImprovementRatioLog(params.c, params.n);
      break;
  }
  return report;
}

}  // namespace latgauss
