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

#include "latgauss/error.h"

namespace latgauss {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRankDeficient:
      return "RankDeficient";
    case ErrorCode::kNotFullRank:
      return "NotFullRank";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kTolUnreachable:
      return "TolUnreachable";
    case ErrorCode::kDomainError:
      return "DomainError";
    case ErrorCode::kEpsilonTooLarge:
      return "EpsilonTooLarge";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kVerificationFailure:
      return "VerificationFailure";
  }
  return "Unknown";
}

}  // namespace latgauss
