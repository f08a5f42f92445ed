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
#include <limits>
#include <numbers>

#include "latgauss/bounds.h"
#include "latgauss/error.h"

namespace latgauss {

AdviceResult Advise(int n, double target_log2, double k) {
  if (n < 1) throw Error(ErrorCode::kDomainError, "n must be positive");
  if (!std::isfinite(target_log2)) {
    throw Error(ErrorCode::kDomainError, "target must be finite");
  }
  if (!(k > 0.0)) throw Error(ErrorCode::kDomainError, "k must be positive");

  constexpr double kLn2 = std::numbers::ln2;
  const double target_log = target_log2 * kLn2;
  AdviceResult result;
  if (target_log2 < 1.0) {
    result.c_min = std::sqrt(1.0 + 2.0 * (1.0 - target_log2) * kLn2 / n);
    while (TwoFactorBoundLog(result.c_min, n) > target_log + 1e-12) {
      result.c_min =
          std::nextafter(result.c_min, std::numeric_limits<double>::infinity());
    }
  }
  result.achieved_log2_bound = TwoFactorBoundLog(result.c_min, n) / kLn2;
  result.gain_log2 = n * std::log2(result.c_min) - 1.0;
  result.regime_ok = k >= kImprovedSandwichMinK && n >= kImprovedSandwichMinN;
  return result;
}

}  // namespace latgauss
