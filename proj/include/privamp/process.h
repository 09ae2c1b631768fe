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

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace privamp {

struct ProcessResult {
  enum class Status { kExited, kSignaled, kTimedOut, kLaunchFailed };

  Status status = Status::kLaunchFailed;
  int exit_code = -1;  // exit status, or signal number when kSignaled
  std::string out;
  std::string err;

  bool ok() const { return status == Status::kExited && exit_code == 0; }
  std::string Describe() const;
};

/// Splits a command line on whitespace. Single and double quotes group
/// words; no other shell syntax is interpreted.
std::vector<std::string> SplitCommandLine(std::string_view command);

/// Runs argv[0] (looked up on PATH) with stdin from /dev/null, capturing
/// stdout and stderr. The child is killed once `timeout` elapses.
ProcessResult RunProcess(const std::vector<std::string>& argv,
                         std::chrono::milliseconds timeout);

}  // namespace privamp
