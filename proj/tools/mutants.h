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

#include <memory>
#include <string>
#include <string_view>

#include "privamp/error.h"
#include "privamp/extractor.h"
#include "privamp/validator.h"

namespace privamp::tools {

// Deliberately broken variants of a reference extractor, used to exercise
// the validator. An empty name gives the unmodified reference.
inline ExtractFunction MakeMutant(
    std::string_view name, std::shared_ptr<const RandomnessExtractor> ref) {
  if (name.empty() || name == "none") {
    return [ref](const BitString& x, const BitString& y) {
      return ref->Extract(x, y);
    };
  }
  if (name == "drop-last-bit") {
    return [ref](const BitString& x, const BitString& y) {
      BitString cut = x;
      cut.Set(cut.size() - 1, false);
      return ref->Extract(cut, y);
    };
  }
  if (name == "reverse-seed") {
    return [ref](const BitString& x, const BitString& y) {
      return ref->Extract(x, y.Reversed());
    };
  }
  if (name == "stuck-output-bit") {
    return [ref](const BitString& x, const BitString& y) {
      BitString out = ref->Extract(x, y);
      out.Set(0, false);
      return out;
    };
  }
  Throw(ErrorCode::kConfigError, "unknown mutant '" + std::string(name) + "'");
}

}  // namespace privamp::tools
