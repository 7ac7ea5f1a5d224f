// Copyright 2026 The Fennec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FENNEC_ERRORS_H_
#define FENNEC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fennec {

// Error taxonomy. Each condition gets its own type so call sites and the CLI
// can map them to stable diagnostics and exit codes.
enum class ErrorCode {
  kUnknownFirmId,
  kNegativeLiability,
  kDefaultCostOutOfRange,
  kSelfLoopDebt,
  kCdsDegenerateReference,
  kRecoveryOutOfRange,
  kStrategySpaceTooLarge,
  kNonFiniteRegime,
  kNonConvergentProfile,
  kPreconditionDefaultCosts,
  kEnumerationCapExceeded,
  kUnknownFixture,
  kParamOutOfRange,
  kInvalidInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownFirmId: return "UnknownFirmId";
    case ErrorCode::kNegativeLiability: return "NegativeLiability";
    case ErrorCode::kDefaultCostOutOfRange: return "DefaultCostOutOfRange";
    case ErrorCode::kSelfLoopDebt: return "SelfLoopDebt";
    case ErrorCode::kCdsDegenerateReference: return "CdsDegenerateReference";
    case ErrorCode::kRecoveryOutOfRange: return "RecoveryOutOfRange";
    case ErrorCode::kStrategySpaceTooLarge: return "StrategySpaceTooLarge";
    case ErrorCode::kNonFiniteRegime: return "NonFiniteRegime";
    case ErrorCode::kNonConvergentProfile: return "NonConvergentProfile";
    case ErrorCode::kPreconditionDefaultCosts: return "PreconditionDefaultCosts";
    case ErrorCode::kEnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace fennec

#endif  // FENNEC_ERRORS_H_
