// Copyright 2026 The privamp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace privamp {

enum class ErrorCode {
  kLengthMismatch,
  kNonZeroPadding,
  kInvalidHexDigit,
  kDimensionMismatch,
  kFieldMismatch,
  kInvalidRange,
  kPrecisionLoss,
  kNotPrimePower,
  kTooManySets,
  kNoFeasibleOutput,
  kDuplicateLabel,
  kProbeFailed,
  kConfigError,
  kNoFailures,
  kParseError,
  kLengthInconsistency,
  kMissingOutputs,
};

std::string_view ErrorCodeName(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Throw(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(ErrorCodeName(code)) + ": " + what);
}

#define PRIVAMP_ENFORCE(cond, code, msg)      \
  do {                                        \
    if (!(cond)) ::privamp::Throw(code, msg); \
  } while (0)

}  // namespace privamp
