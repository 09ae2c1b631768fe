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
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "privamp/bitstring.h"
#include "privamp/extractor.h"

namespace privamp {

enum class IoFormat { kBinaryString, kHex };

/// "binary" / "binary-string" and "hex".
IoFormat ParseIoFormat(std::string_view name);
std::string_view IoFormatName(IoFormat format);

std::string Serialize(const BitString& bits, IoFormat format);
/// Parses adapter output, ignoring surrounding whitespace. Throws ParseError
/// on bad characters and LengthInconsistency on a wrong length.
BitString Deserialize(std::string_view text, IoFormat format, size_t length);

inline constexpr std::string_view kSeedPlaceholder = "$SEED$";
inline constexpr std::string_view kInputPlaceholder = "$INPUT$";
inline constexpr std::string_view kOutputPlaceholder = "$OUTPUT$";

enum class InputMethod {
  kStdio,      // values substituted into argv, output read from stdout
  kFiles,      // placeholders become file paths; output read from $OUTPUT$
  kInProcess,  // `function` is called directly
};

using ExtractFunction =
    std::function<BitString(const BitString& input, const BitString& seed)>;

struct ImplementationAdapter {
  std::string label;
  InputMethod input_method = InputMethod::kStdio;
  std::string command_template;
  std::map<std::string, IoFormat, std::less<>> serializers = {
      {std::string(kSeedPlaceholder), IoFormat::kBinaryString},
      {std::string(kInputPlaceholder), IoFormat::kBinaryString},
  };
  IoFormat output_parser = IoFormat::kBinaryString;
  std::chrono::milliseconds timeout{30000};
  ExtractFunction function;  // kInProcess only
};

/// Throws ConfigError if the adapter is malformed.
void CheckAdapter(const ImplementationAdapter& adapter);

enum class ValidationMode { kExhaustive, kRandom };
std::string_view ValidationModeName(ValidationMode mode);

struct FailedCase {
  enum class Kind { kMismatch, kCrashed, kTimeout, kBadOutput };

  uint64_t index = 0;
  Kind kind = Kind::kMismatch;
  BitString input;
  BitString seed;
  BitString expected;
  std::optional<BitString> got;
  std::string detail;
};

std::string_view FailureKindName(FailedCase::Kind kind);

struct ValidationReport {
  std::string label;
  ValidationMode mode = ValidationMode::kRandom;
  std::optional<uint64_t> rng_seed;
  uint64_t total = 0;
  uint64_t failed_count = 0;       // all failures, including unstored ones
  std::vector<FailedCase> failed;  // lowest indices first, capped
  uint64_t crashed = 0;
  uint64_t timeouts = 0;

  bool ok() const { return failed_count == 0; }
  double failure_fraction() const {
    return total == 0 ? 0.0 : static_cast<double>(failed_count) / total;
  }
  std::string Summary() const;
};

struct FailureDiagnosis {
  // Per output index: number of mismatching cases where that bit differed.
  std::vector<uint64_t> differing_bit_positions;
  // Per input index: fraction of analysed failures with that bit set.
  std::vector<double> input_bit_correlations;
  std::vector<size_t> flagged_input_bits;
  uint64_t failures_analyzed = 0;
  double threshold = 0.0;
  std::string summary;
};

struct ValidatorOptions {
  size_t exhaustive_cap_bits = 24;
  size_t failure_cap = 10000;
  // 0: read PRIVAMP_WORKERS, else use the hardware concurrency.
  unsigned workers = 0;
};

inline constexpr const char* kWorkersEnvVar = "PRIVAMP_WORKERS";

/// Compares registered implementations against a reference extractor.
class Validator {
 public:
  explicit Validator(std::shared_ptr<const RandomnessExtractor> reference,
                     ValidatorOptions options = {});

  const RandomnessExtractor& reference() const { return *reference_; }

  /// Registers an adapter after one probe run on all-zero input and seed.
  /// Throws ConfigError, DuplicateLabel or ProbeFailed.
  void AddImplementation(ImplementationAdapter adapter);
  std::vector<std::string> labels() const;

  /// One report per registered implementation, in registration order. Every
  /// implementation sees the same case list. Random mode draws a fresh
  /// rng_seed when none is given and records it in the report.
  std::vector<ValidationReport> Validate(
      ValidationMode mode, std::optional<uint64_t> sample_size = std::nullopt,
      std::optional<uint64_t> rng_seed = std::nullopt) const;

  /// The input and seed of case `index`.
  std::pair<BitString, BitString> CaseAt(ValidationMode mode,
                                         uint64_t rng_seed,
                                         uint64_t index) const;

  /// Flags input bits set in noticeably more than half of the failures.
  /// Throws NoFailures when nothing was stored.
  FailureDiagnosis AnalyzeFailedTest(const ValidationReport& report) const;

 private:
  unsigned WorkerCount() const;

  std::shared_ptr<const RandomnessExtractor> reference_;
  ValidatorOptions options_;
  std::vector<ImplementationAdapter> adapters_;
};

/// Runs one adapter on one case. Exposed for the CLI and tests.
struct AdapterOutcome {
  std::optional<BitString> output;
  FailedCase::Kind failure = FailedCase::Kind::kMismatch;
  std::string detail;
};
AdapterOutcome RunAdapter(const ImplementationAdapter& adapter,
                          const BitString& input, const BitString& seed,
                          size_t output_length);

}  // namespace privamp
