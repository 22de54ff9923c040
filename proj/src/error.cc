// Copyright 2026 The SwissCheese Authors
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

#include "swisscheese/error.h"

namespace swisscheese {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameter:
      return "invalid-parameter";
    case ErrorCode::kPreconditionViolation:
      return "precondition-violation";
    case ErrorCode::kDiscrepancyNotPositive:
      return "discrepancy-not-positive";
    case ErrorCode::kAnnularStructureLost:
      return "annular-structure-lost";
    case ErrorCode::kInadmissibleRegions:
      return "inadmissible-regions";
    case ErrorCode::kControlContractFailed:
      return "control-contract-failed";
    case ErrorCode::kPlacementInfeasible:
      return "placement-infeasible";
    case ErrorCode::kSearchExhausted:
      return "search-exhausted";
    case ErrorCode::kBudgetExceeded:
      return "budget-exceeded";
    case ErrorCode::kCircleViolated:
      return "circle-violated";
    case ErrorCode::kFillerFailed:
      return "filler-failed";
    case ErrorCode::kMalformedJson:
      return "malformed-json";
    case ErrorCode::kSchemaViolation:
      return "schema-violation";
    case ErrorCode::kNegativeRadius:
      return "negative-radius";
    case ErrorCode::kIo:
      return "io-error";
  }
  return "unknown";
}

ErrorClass ClassOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kControlContractFailed:
    case ErrorCode::kSearchExhausted:
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kCircleViolated:
    case ErrorCode::kFillerFailed:
    case ErrorCode::kAnnularStructureLost:
      return ErrorClass::kContract;
    case ErrorCode::kIo:
      return ErrorClass::kIo;
    default:
      return ErrorClass::kValidation;
  }
}

}  // namespace swisscheese
