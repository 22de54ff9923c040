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

#ifndef SWISSCHEESE_ERROR_H_
#define SWISSCHEESE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace swisscheese {

enum class ErrorCode {
  kInvalidParameter,
  kPreconditionViolation,
  kDiscrepancyNotPositive,
  kAnnularStructureLost,
  kInadmissibleRegions,
  kControlContractFailed,
  kPlacementInfeasible,
  kSearchExhausted,
  kBudgetExceeded,
  kCircleViolated,
  kFillerFailed,
  kMalformedJson,
  kSchemaViolation,
  kNegativeRadius,
  kIo,
};

// Stable kebab-case name used in error payloads.
std::string_view ErrorCodeName(ErrorCode code);

// Broad class of an error; drives the CLI exit code.
enum class ErrorClass { kValidation, kContract, kIo };

ErrorClass ClassOf(ErrorCode code);

class CheeseError : public std::runtime_error {
 public:
  CheeseError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace swisscheese

#endif  // SWISSCHEESE_ERROR_H_
