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

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "privamp/bitstring.h"

namespace privamp {

enum class ExtractorKind { kToeplitz, kModifiedToeplitz, kTrevisan };

/// CLI spelling: "toeplitz", "modified-toeplitz", "trevisan".
std::string_view KindName(ExtractorKind kind);
ExtractorKind ParseKind(std::string_view name);

/// Everything needed to rebuild an extractor. one_bit_seed_length is the
/// Trevisan weak-design set size t (the one-bit extractor reads 2l = t seed
/// bits); it is ignored by the Toeplitz variants.
struct ExtractorConfig {
  ExtractorKind kind = ExtractorKind::kToeplitz;
  size_t input_length = 0;
  size_t output_length = 0;
  size_t one_bit_seed_length = 0;

  friend bool operator==(const ExtractorConfig&,
                         const ExtractorConfig&) = default;
};

/// A seeded extractor Ext: {0,1}^n x {0,1}^d -> {0,1}^m. Implementations are
/// immutable after construction and Extract() may be called concurrently.
class RandomnessExtractor {
 public:
  virtual ~RandomnessExtractor() = default;

  virtual size_t input_length() const = 0;
  virtual size_t seed_length() const = 0;
  virtual size_t output_length() const = 0;

  virtual BitString Extract(const BitString& input,
                            const BitString& seed) const = 0;

  /// Display name used in test-vector headers, e.g. "ToeplitzHashing".
  virtual std::string name() const = 0;
  virtual ExtractorConfig config() const = 0;

 protected:
  /// Throws LengthMismatch naming the expected lengths.
  void CheckLengths(const BitString& input, const BitString& seed) const;
};

std::unique_ptr<RandomnessExtractor> MakeExtractor(
    const ExtractorConfig& config);

}  // namespace privamp
