// Copyright 2026 The rankprice Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RANKPRICE_CORE_STATUS_H_
#define RANKPRICE_CORE_STATUS_H_

#include <stdexcept>
#include <string>

namespace rankprice {

// Numeric values are part of the C ABI (see include/rankprice/rankprice.h)
// and must not be renumbered.
enum class ErrorCode : int {
  kOk = 0,
  kNonPositiveBudget = 1,
  kTiedPreferences = 2,
  kEmptyPreferenceRow = 3,
  kDimensionMismatch = 4,
  kInvalidPreference = 5,
  kLengthMismatch = 6,
  kSearchSpaceTooLarge = 7,
  kInvalidRange = 8,
  kInstanceRead = 9,
  kOutputWrite = 10,
  kEmptyInput = 11,
  kInvalidArgument = 12,
  kParse = 13,
  kInternal = 99,
};

const char* ErrorCodeName(ErrorCode code);

// All fallible operations in the core throw Error. The C layer converts it
// back into an ErrorCode plus a thread-local message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rankprice

#endif  // RANKPRICE_CORE_STATUS_H_
