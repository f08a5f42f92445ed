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

#include <gtest/gtest.h>

#include "latgauss/error.h"

namespace latgauss {
namespace {

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no latgauss::Error thrown";
  return ErrorCode::kParseError;
}

double Tau(double s, int n) {
  TailParams p;
  p.n = n;
  p.s = s;
  return p.tau();
}

TEST(ClassicBoundTest, Examples) {
  EXPECT_EQ(ClassicBoundLog(1.0, 1), 0.0);
  EXPECT_EQ(ClassicBoundLog(1.0, 500), 0.0);
  EXPECT_NEAR(ClassicBoundLog(2.0, 1), -0.80685281944005469, 1e-15);
  EXPECT_NEAR(std::exp(ClassicBoundLog(2.0, 1)), 0.44626032029685966, 1e-15);
  EXPECT_NEAR(ClassicBoundLog(2.0, 500), -403.42640972002735, 1e-12);
}

TEST(ClassicBoundTest, DomainErrors) {
  EXPECT_EQ(CodeOf([] { ClassicBoundLog(0.9, 3); }), ErrorCode::kDomainError);
  EXPECT_EQ(CodeOf([] { ClassicBoundLog(2.0, 0); }), ErrorCode::kDomainError);
}

TEST(ClassicBoundTest, ThresholdIsSmallestSatisfyingC) {
  for (int n : {1, 3, 10, 500}) {
    for (double target : {-1.0, -20.0, -300.0}) {
      const double c = ClassicBoundThreshold(target, n);
      EXPECT_LE(ClassicBoundLog(c, n), target);
      EXPECT_GT(ClassicBoundLog(std::nextafter(c, 0.0), n), target);
    }
  }
  EXPECT_EQ(ClassicBoundThreshold(0.5, 4), 1.0);
}

TEST(EpsilonTest, Examples) {
  EXPECT_EQ(EpsilonLog(1.0, 7), 0.0);
  EXPECT_FALSE(EpsilonReport(1.0, 7).regime_ok);
  EXPECT_NEAR(EpsilonLog(1.04, 500), -0.78964342335935187, 1e-12);
  EXPECT_NEAR(std::exp(EpsilonLog(1.04, 500)), 0.45400665459074247, 1e-12);
  EXPECT_LT(std::exp(EpsilonLog(1.04, 500)), 0.5);
  EXPECT_NEAR(EpsilonLog(2.0, 10), -8.0685281944005469, 1e-13);
  EXPECT_NEAR(std::exp(EpsilonLog(2.0, 10)), 3.1324397619386961e-4, 1e-17);
  EXPECT_TRUE(EpsilonReport(2.0, 10).regime_ok);
  EXPECT_EQ(CodeOf([] { EpsilonLog(0.0, 1); }), ErrorCode::kDomainError);
}

TEST(ImprovedBoundTest, Examples) {
  EXPECT_NEAR(ImprovedBoundLog(1.0, 2.0, 10), 3.1329304733594113e-4, 1e-16);
  EXPECT_NEAR(std::exp(ImprovedBoundLog(1.0, 2.0, 10)), 1.000313342, 1e-9);
  EXPECT_NEAR(ImprovedBoundLog(2.0, 1.04, 500), -749.39485150879336, 1e-11);
  EXPECT_EQ(ImprovedBoundLog(2.0, 60.0, 10), -15.0);
}

TEST(ImprovedBoundTest, DomainErrors) {
  EXPECT_EQ(CodeOf([] { ImprovedBoundLog(2.0, 1.0, 10); }),
            ErrorCode::kDomainError);
  EXPECT_EQ(CodeOf([] { ImprovedBoundLog(0.5, 2.0, 10); }),
            ErrorCode::kDomainError);
}

TEST(SandwichTest, Examples) {
  const SandwichLog at_tau = SandwichBoundsLog(Tau(1.0, 3), 1.0, 3);
  EXPECT_NEAR(at_tau.upper_log, 0.0, 1e-15);
  EXPECT_NEAR(at_tau.lower_log, -1.5, 1e-15);
  const SandwichLog two_tau = SandwichBoundsLog(2 * Tau(1.0, 4), 1.0, 4);
  EXPECT_NEAR(two_tau.upper_log, -3.2274112777602188, 1e-12);
  EXPECT_NEAR(two_tau.upper_log, ClassicBoundLog(2.0, 4), 1e-12);
  EXPECT_EQ(CodeOf([] { SandwichBoundsLog(0.1, 1.0, 1); }),
            ErrorCode::kDomainError);
}

TEST(SandwichTest, IntegerLatticeHalfShift) {
  const SandwichLog z = SandwichBoundsLog(0.5, 1.0, 1);
  EXPECT_NEAR(std::exp(z.lower_log), 0.45593812776599624, 1e-15);
  EXPECT_NEAR(std::exp(z.upper_log), 0.94213489807921991, 1e-15);
}

TEST(ImprovedSandwichTest, Examples) {
  const BoundReport at_one = ImprovedSandwichLog(1.0, 1.04, 500);
  EXPECT_NEAR(at_one.log_value, std::log(2.0), 1e-15);
  EXPECT_TRUE(at_one.regime_ok);
  EXPECT_NEAR(ImprovedSandwichLog(2.0, 1.04, 500).log_value,
              -749.30685281944005, 1e-12);
  EXPECT_NEAR(TwoFactorBoundLog(2.0, 500), -749.30685281944005, 1e-12);
}

TEST(ImprovedSandwichTest, OutOfRegimeFallsBack) {
  const BoundReport small_n = ImprovedSandwichLog(2.0, 1.5, 2);
  EXPECT_FALSE(small_n.regime_ok);
  EXPECT_EQ(small_n.log_value, ImprovedBoundLog(2.0, 1.5, 2));
  EXPECT_FALSE(ImprovedSandwichLog(2.0, 1.03, 600).regime_ok);
}

TEST(UnifiedFormTest, Examples) {
  EXPECT_NEAR(UnifiedFormLog(1.0, 500, 1.0, 3.0), std::log(2.0), 1e-12);
  EXPECT_NEAR(UnifiedFormLog(2.0, 500, 1.7, 20.0), TwoFactorBoundLog(2.0, 500),
              1e-12);
}

TEST(ImprovementRatioTest, Examples) {
  EXPECT_NEAR(ImprovementRatioLog(1.0, 10), -std::log(2.0), 1e-15);
  EXPECT_NEAR(std::exp(ImprovementRatioLog(2.0, 10)), 512.0, 512.0 * 1e-12);
  EXPECT_NEAR(ImprovementRatioLog(1.2, 500), 90.467631216417368, 1e-12);
  EXPECT_NEAR(ImprovementRatioClosedFormLog(1.2, 500), 90.467631216417368,
              1e-12);
}

TEST(Log1mExpTest, BothEnds) {
  EXPECT_NEAR(Log1mExp(-1e-20), std::log(1e-20), 1e-12);
  EXPECT_NEAR(Log1mExp(-50.0), -std::exp(-50.0), 1e-35);
  EXPECT_NEAR(Log1mExp(-std::log(2.0)), -std::log(2.0), 1e-15);
  EXPECT_EQ(CodeOf([] { Log1mExp(0.0); }), ErrorCode::kEpsilonTooLarge);
}

TEST(EvaluateTest, DispatchesEveryKind) {
  TailParams p;
  p.c = 2.0;
  p.k = 1.5;
  p.n = 3;
  p.s = 1.0;
  p.r_x = 2.0;
  EXPECT_EQ(Evaluate(BoundKind::kClassic, p).log_value, ClassicBoundLog(2.0, 3));
  EXPECT_EQ(Evaluate(BoundKind::kEpsilon, p).log_value, EpsilonLog(1.5, 3));
  EXPECT_EQ(Evaluate(BoundKind::kImproved, p).log_value,
            ImprovedBoundLog(2.0, 1.5, 3));
  EXPECT_EQ(Evaluate(BoundKind::kSandwichLower, p).log_value,
            SandwichBoundsLog(2.0, 1.0, 3).lower_log);
  EXPECT_EQ(Evaluate(BoundKind::kSandwichUpper, p).log_value,
            SandwichBoundsLog(2.0, 1.0, 3).upper_log);
  EXPECT_FALSE(Evaluate(BoundKind::kImprovedSandwich, p).regime_ok);
  EXPECT_NEAR(Evaluate(BoundKind::kUnified, p).log_value,
              TwoFactorBoundLog(2.0, 3), 1e-12);
  EXPECT_EQ(Evaluate(BoundKind::kImprovementRatio, p).log_value,
            ImprovementRatioLog(2.0, 3));
  EXPECT_EQ(BoundKindName(BoundKind::kImprovedSandwich), "improved_sandwich");
}

// Reproduces the literal (non-log) formulas where they are representable.
TEST(BoundsPropertyTest, LogValuesMatchLiteralFormulas) {
  for (int n : {1, 2, 5, 10, 40}) {
    for (double c : {1.0, 1.3, 2.0, 2.7}) {
      const double classic =
          std::pow(c * std::sqrt(M_E) * std::exp(-c * c / 2), n);
      EXPECT_NEAR(std::exp(ClassicBoundLog(c, n)) / classic, 1.0, 1e-12);
      const double two_factor = 2 * std::pow(std::exp(1 - c * c), n / 2.0);
      EXPECT_NEAR(std::exp(TwoFactorBoundLog(c, n)) / two_factor, 1.0, 1e-12);
      for (double k : {1.5, 2.0, 3.0}) {
        const double eps =
            std::pow(k * std::sqrt(M_E) * std::exp(-k * k / 2), n);
        EXPECT_NEAR(std::exp(EpsilonLog(k, n)) / eps, 1.0, 1e-12);
        if (eps < 0.9) {
          const double improved = std::pow(std::exp(1 - c * c), n / 2.0) / (1 - eps);
          EXPECT_NEAR(std::exp(ImprovedBoundLog(c, k, n)) / improved, 1.0,
                      1e-12);
        }
      }
    }
  }
}

// The gap is compared against an extended-precision reference. Its
// magnitude stays below 2^14 on this grid, where a double resolves 1e-12.
TEST(BoundsPropertyTest, PathIdentity) {
  for (int n = 1; n <= 10000; n = n * 3 + 1) {
    for (double c = 1.0; c <= 3.0; c += 0.0731) {
      const long double exact =
          n * std::log(static_cast<long double>(c)) - std::log(2.0L);
      EXPECT_LE(std::abs(ImprovementRatioLog(c, n) - exact), 1e-12)
          << "n=" << n << " c=" << c;
      EXPECT_LE(std::abs(ImprovementRatioClosedFormLog(c, n) - exact), 1e-12);
      // Differencing the two rounded doubles is exact up to their ulps.
      const double classic = ClassicBoundLog(c, n);
      const double two_factor = TwoFactorBoundLog(c, n);
      const double ulps = std::abs(std::nextafter(classic, 0.0) - classic) +
                          std::abs(std::nextafter(two_factor, 0.0) - two_factor);
      EXPECT_LE(std::abs((classic - two_factor) - exact), std::max(1e-12, ulps));
    }
  }
}

TEST(BoundsPropertyTest, UnifiedFormConstantInDistance) {
  for (int n : {1, 10, 500, 2000}) {
    for (double c : {1.0, 1.5, 2.0}) {
      for (double s : {0.5, 1.7}) {
        const double expected = TwoFactorBoundLog(c, n);
        for (double r = 0.0; r <= 100.0; r += 0.5) {
          EXPECT_NEAR(UnifiedFormLog(c, n, s, r), expected, 1e-12);
        }
      }
    }
  }
}

TEST(BoundsPropertyTest, SandwichMatchesClassic) {
  for (int n : {1, 4, 50, 500}) {
    for (double s : {0.6, 1.0, 3.0}) {
      for (double ratio : {1.0, 1.25, 2.0, 3.5}) {
        EXPECT_NEAR(SandwichBoundsLog(ratio * Tau(s, n), s, n).upper_log,
                    ClassicBoundLog(ratio, n), 1e-12);
      }
    }
  }
}

TEST(BoundsPropertyTest, StrictMonotonicity) {
  for (int n : {1, 7, 500}) {
    for (double c = 1.01; c < 4.0; c += 0.05) {
      EXPECT_LT(ClassicBoundLog(c + 0.05, n), ClassicBoundLog(c, n));
      EXPECT_LT(EpsilonLog(c + 0.05, n), EpsilonLog(c, n));
      const double r = c * Tau(1.0, n);
      EXPECT_LT(SandwichBoundsLog(r + 0.05, 1.0, n).upper_log,
                SandwichBoundsLog(r, 1.0, n).upper_log);
    }
  }
}

TEST(BoundsPropertyTest, Ordering) {
  for (int n : {500, 1000}) {
    for (double c = 1.1; c <= 3.0; c += 0.1) {
      for (double k = 1.04; k <= 2.0; k += 0.08) {
        const double eps_log = EpsilonLog(k, n);
        const double penalty = -Log1mExp(eps_log);
        const double improved = ImprovedBoundLog(c, k, n);
        EXPECT_LE(improved, ClassicBoundLog(c, n) + penalty);
        if (n * std::log(c) > penalty) {
          EXPECT_LT(improved, ClassicBoundLog(c, n));
        }
      }
    }
  }
}

}  // namespace
}  // namespace latgauss
