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

#include "privamp/extractor.h"

#include <string>

#include "privamp/error.h"
#include "privamp/toeplitz.h"
#include "privamp/trevisan.h"

namespace privamp {

std::string_view KindName(ExtractorKind kind) {
  switch (kind) {
    case ExtractorKind::kToeplitz:
      return "toeplitz";
    case ExtractorKind::kModifiedToeplitz:
      return "modified-toeplitz";
    case ExtractorKind::kTrevisan:
      return "trevisan";
  }
  return "unknown";
}

ExtractorKind ParseKind(std::string_view name) {
  if (name == "toeplitz") return ExtractorKind::kToeplitz;
  if (name == "modified-toeplitz") return ExtractorKind::kModifiedToeplitz;
  if (name == "trevisan") return ExtractorKind::kTrevisan;
  Throw(ErrorCode::kConfigError,
        "unknown extractor type '" + std::string(name) +
            "' (expected toeplitz, modified-toeplitz or trevisan)");
}

void RandomnessExtractor::CheckLengths(const BitString& input,
                                       const BitString& seed) const {
  PRIVAMP_ENFORCE(input.size() == input_length(), ErrorCode::kLengthMismatch,
                  "input must have " + std::to_string(input_length()) +
                      " bits, got " + std::to_string(input.size()));
  PRIVAMP_ENFORCE(seed.size() == seed_length(), ErrorCode::kLengthMismatch,
                  "seed must have " + std::to_string(seed_length()) +
                      " bits, got " + std::to_string(seed.size()));
}

std::unique_ptr<RandomnessExtractor> MakeExtractor(
    const ExtractorConfig& config) {
  switch (config.kind) {
    case ExtractorKind::kToeplitz:
      return std::make_unique<ToeplitzHashing>(config.input_length,
                                               config.output_length);
    case ExtractorKind::kModifiedToeplitz:
      return std::make_unique<ModifiedToeplitzHashing>(config.input_length,
                                                       config.output_length);
    case ExtractorKind::kTrevisan:
      return std::make_unique<TrevisanExtractor>(
          config.input_length, config.output_length,
          config.one_bit_seed_length);
  }
  Throw(ErrorCode::kConfigError, "unknown extractor kind");
}

}  // namespace privamp
