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

#ifndef LATGAUSS_ADVISOR_H_
#define LATGAUSS_ADVISOR_H_

namespace latgauss {

struct AdviceResult {
  // Smallest c >= 1 with ln 2 + (n/2)(1 - c^2) <= target * ln 2.
  double c_min = 1.0;
  // log2 of the two-factor bound at c_min.
  double achieved_log2_bound = 1.0;
  // log2 of c_min^n / 2, the gain over the classic tail bound.
  double gain_log2 = -1.0;
  // k >= 1.04 and n >= 500.
  bool regime_ok = false;
};

// Inverts the two-factor distinguishing bound 2 (e^{1-c^2})^{n/2} for a
// target advantage of 2^target_log2. The closed-form root is checked
// against the bound and nudged upward by ulps if rounding left it short.
// Targets >= 1 are met at c = 1. Error(kDomainError) if n < 1, k <= 0 or
// the target is not finite.
AdviceResult Advise(int n, double target_log2, double k);

}  // namespace latgauss

#endif  // LATGAUSS_ADVISOR_H_
