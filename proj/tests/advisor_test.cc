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

#include "latgauss/advisor.h"

#include <cmath>

#include <gtest/gtest.h>

#include "latgauss/bounds.h"
#include "latgauss/error.h"

namespace latgauss {
namespace {

TEST(AdviseTest, Target80Bits) {
  const AdviceResult r = Advise(500, -80.0, 1.04);
  EXPECT_NEAR(r.c_min, 1.1066072864848768, 1e-14);
  EXPECT_NEAR(r.gain_log2, 72.071664194106782, 1e-10);
  EXPECT_NEAR(r.achieved_log2_bound, -80.0, 1e-10);
  EXPECT_TRUE(r.regime_ok);
}

TEST(AdviseTest, TargetJustBelowOne) {
  const AdviceResult r = Advise(500, 0.9, 1.04);
  EXPECT_GT(r.c_min, 1.0);
  EXPECT_LT(r.c_min, 1.001);
  EXPECT_LE(r.achieved_log2_bound, 0.9 + 1e-12);
}

TEST(AdviseTest, SmallDimensionIsFlagged) {
  const AdviceResult r = Advise(100, -40.0, 1.04);
  EXPECT_FALSE(r.regime_ok);
  EXPECT_GT(r.c_min, 1.0);
  EXPECT_FALSE(Advise(500, -40.0, 1.03).regime_ok);
}

TEST(AdviseTest, TargetAtOrAboveOneNeedsNoMargin) {
  EXPECT_EQ(Advise(500, 1.0, 1.04).c_min, 1.0);
  EXPECT_EQ(Advise(500, 3.0, 1.04).c_min, 1.0);
}

TEST(AdviseTest, Errors) {
  EXPECT_THROW(Advise(0, -10.0, 1.04), Error);
  EXPECT_THROW(Advise(10, NAN, 1.04), Error);
  EXPECT_THROW(Advise(10, -10.0, 0.0), Error);
}

TEST(AdvisePropertyTest, MinimalToMicroStep) {
  const double ln2 = std::log(2.0);
  for (int n : {1, 10, 100, 500, 1000, 5000}) {
    for (double target : {0.5, -1.0, -20.0, -80.0, -128.0, -256.0}) {
      const AdviceResult r = Advise(n, target, 1.04);
      EXPECT_GE(r.c_min, 1.0);
      EXPECT_LE(TwoFactorBoundLog(r.c_min, n), target * ln2 + 1e-12);
      EXPECT_GT(TwoFactorBoundLog(r.c_min - 1e-6, n), target * ln2)
          << "n=" << n << " target=" << target;
      EXPECT_NEAR(r.gain_log2, n * std::log2(r.c_min) - 1.0, 1e-9);
      if (n >= 500) {
        EXPECT_LE(ImprovedSandwichLog(r.c_min, 1.04, n).log_value,
                  target * ln2 + 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace latgauss
