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

#ifndef LATGAUSS_ERROR_H_
#define LATGAUSS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace latgauss {

enum class ErrorCode {
  kRankDeficient,
  kNotFullRank,
  kBudgetExceeded,
  kTolUnreachable,
  kDomainError,
  kEpsilonTooLarge,
  kDimensionMismatch,
  kParseError,
  kVerificationFailure,
};

std::string_view ErrorCodeName(ErrorCode code);

// All failures raised by the library carry one of the codes above so that
// front-ends (CLI exit codes, Python exceptions) can dispatch on them.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latgauss

#endif  // LATGAUSS_ERROR_H_
