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

#include "privamp/validator.h"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "privamp/error.h"
#include "privamp/process.h"

namespace privamp {

namespace fs = std::filesystem;

IoFormat ParseIoFormat(std::string_view name) {
  if (name == "binary" || name == "binary-string") return IoFormat::kBinaryString;
  if (name == "hex") return IoFormat::kHex;
  Throw(ErrorCode::kConfigError,
        "unknown format '" + std::string(name) + "' (binary-string, hex)");
}

std::string_view IoFormatName(IoFormat format) {
  return format == IoFormat::kHex ? "hex" : "binary-string";
}

std::string Serialize(const BitString& bits, IoFormat format) {
  return format == IoFormat::kHex ? HexEncode(bits) : bits.ToString();
}

BitString Deserialize(std::string_view text, IoFormat format, size_t length) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    text = {};
  } else {
    text = text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);
  }
  if (format == IoFormat::kBinaryString) {
    PRIVAMP_ENFORCE(text.size() == length, ErrorCode::kLengthInconsistency,
                    "expected " + std::to_string(length) + " bits, got " +
                        std::to_string(text.size()) + " characters");
    for (char c : text) {
      PRIVAMP_ENFORCE(c == '0' || c == '1', ErrorCode::kParseError,
                      "unexpected character in binary string");
    }
    return BitString::FromString(text);
  }
  const size_t digits = (length + 7) / 8 * 2;
  PRIVAMP_ENFORCE(text.size() == digits, ErrorCode::kLengthInconsistency,
                  "expected " + std::to_string(digits) + " hex digits for " +
                      std::to_string(length) + " bits, got " +
                      std::to_string(text.size()));
  try {
    return HexDecode(text, length);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNonZeroPadding) {
      Throw(ErrorCode::kLengthInconsistency, e.what());
    }
    Throw(ErrorCode::kParseError, e.what());
  }
}

namespace {

size_t CountOccurrences(std::string_view text, std::string_view needle) {
  size_t count = 0;
  for (size_t pos = text.find(needle); pos != std::string_view::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

void ReplaceAll(std::string& s, std::string_view from, const std::string& to) {
  for (size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

uint64_t MixSeed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "privamp-XXXXXX").string();
    if (::mkdtemp(tmpl.data()) == nullptr) {
      Throw(ErrorCode::kConfigError, "cannot create temporary directory");
    }
    path_ = tmpl;
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

void CheckAdapter(const ImplementationAdapter& adapter) {
  PRIVAMP_ENFORCE(!adapter.label.empty(), ErrorCode::kConfigError,
                  "adapter label is empty");
  if (adapter.input_method == InputMethod::kInProcess) {
    PRIVAMP_ENFORCE(static_cast<bool>(adapter.function),
                    ErrorCode::kConfigError,
                    "in-process adapter '" + adapter.label + "' has no function");
    return;
  }
  const std::string& cmd = adapter.command_template;
  PRIVAMP_ENFORCE(!SplitCommandLine(cmd).empty(), ErrorCode::kConfigError,
                  "adapter '" + adapter.label + "' has an empty command");
  for (auto ph : {kSeedPlaceholder, kInputPlaceholder}) {
    const size_t n = CountOccurrences(cmd, ph);
    PRIVAMP_ENFORCE(n == 1, ErrorCode::kConfigError,
                    "command must contain " + std::string(ph) +
                        " exactly once (found " + std::to_string(n) + ")");
    PRIVAMP_ENFORCE(adapter.serializers.count(ph) == 1,
                    ErrorCode::kConfigError,
                    "no serializer for " + std::string(ph));
  }
  for (const auto& [key, fmt] : adapter.serializers) {
    PRIVAMP_ENFORCE(key == kSeedPlaceholder || key == kInputPlaceholder,
                    ErrorCode::kConfigError,
                    "serializer for unknown placeholder " + key);
  }
  const size_t outs = CountOccurrences(cmd, kOutputPlaceholder);
  if (adapter.input_method == InputMethod::kFiles) {
    PRIVAMP_ENFORCE(outs == 1, ErrorCode::kConfigError,
                    "files adapters need $OUTPUT$ exactly once");
  } else {
    PRIVAMP_ENFORCE(outs == 0, ErrorCode::kConfigError,
                    "$OUTPUT$ is only valid for files adapters");
  }
}

AdapterOutcome RunAdapter(const ImplementationAdapter& adapter,
                          const BitString& input, const BitString& seed,
                          size_t output_length) {
  AdapterOutcome outcome;
  if (adapter.input_method == InputMethod::kInProcess) {
    try {
      BitString got = adapter.function(input, seed);
      if (got.size() != output_length) {
        outcome.failure = FailedCase::Kind::kBadOutput;
        outcome.detail = "output has " + std::to_string(got.size()) +
                         " bits, expected " + std::to_string(output_length);
      } else {
        outcome.output = std::move(got);
      }
    } catch (const std::exception& e) {
      outcome.failure = FailedCase::Kind::kCrashed;
      outcome.detail = e.what();
    }
    return outcome;
  }

  const std::string seed_text =
      Serialize(seed, adapter.serializers.find(kSeedPlaceholder)->second);
  const std::string input_text =
      Serialize(input, adapter.serializers.find(kInputPlaceholder)->second);

  std::optional<TempDir> dir;
  fs::path out_path;
  std::string seed_arg = seed_text;
  std::string input_arg = input_text;
  if (adapter.input_method == InputMethod::kFiles) {
    dir.emplace();
    const fs::path seed_path = dir->path() / "seed";
    const fs::path input_path = dir->path() / "input";
    out_path = dir->path() / "output";
    std::ofstream(seed_path) << seed_text << '\n';
    std::ofstream(input_path) << input_text << '\n';
    seed_arg = seed_path.string();
    input_arg = input_path.string();
  }

  std::vector<std::string> argv = SplitCommandLine(adapter.command_template);
  for (auto& word : argv) {
    ReplaceAll(word, kSeedPlaceholder, seed_arg);
    ReplaceAll(word, kInputPlaceholder, input_arg);
    if (dir) ReplaceAll(word, kOutputPlaceholder, out_path.string());
  }

  ProcessResult run = RunProcess(argv, adapter.timeout);
  if (run.status == ProcessResult::Status::kTimedOut) {
    outcome.failure = FailedCase::Kind::kTimeout;
    outcome.detail = "timed out after " +
                     std::to_string(adapter.timeout.count()) + " ms";
    return outcome;
  }
  if (!run.ok()) {
    outcome.failure = FailedCase::Kind::kCrashed;
    outcome.detail = run.Describe();
    if (!run.err.empty() && run.status != ProcessResult::Status::kLaunchFailed) {
      outcome.detail += ": " + run.err.substr(0, 200);
    }
    return outcome;
  }
  std::string text;
  if (dir) {
    if (!fs::exists(out_path)) {
      outcome.failure = FailedCase::Kind::kBadOutput;
      outcome.detail = "output file was not written";
      return outcome;
    }
    text = ReadFile(out_path);
  } else {
    text = std::move(run.out);
  }
  try {
    outcome.output = Deserialize(text, adapter.output_parser, output_length);
  } catch (const Error& e) {
    outcome.failure = FailedCase::Kind::kBadOutput;
    outcome.detail = e.what();
  }
  return outcome;
}

std::string_view ValidationModeName(ValidationMode mode) {
  return mode == ValidationMode::kExhaustive ? "exhaustive" : "random";
}

std::string_view FailureKindName(FailedCase::Kind kind) {
  switch (kind) {
    case FailedCase::Kind::kMismatch:
      return "mismatch";
    case FailedCase::Kind::kCrashed:
      return "crashed";
    case FailedCase::Kind::kTimeout:
      return "timeout";
    case FailedCase::Kind::kBadOutput:
      return "bad-output";
  }
  return "unknown";
}

std::string ValidationReport::Summary() const {
  std::ostringstream ss;
  ss << label << ": " << failed_count << " of " << total << " cases failed ("
     << ValidationModeName(mode) << " mode";
  if (rng_seed) ss << ", rng seed " << *rng_seed;
  ss << ")";
  if (crashed > 0) ss << ", " << crashed << " crashed";
  if (timeouts > 0) ss << ", " << timeouts << " timed out";
  return ss.str();
}

Validator::Validator(std::shared_ptr<const RandomnessExtractor> reference,
                     ValidatorOptions options)
    : reference_(std::move(reference)), options_(options) {
  PRIVAMP_ENFORCE(reference_ != nullptr, ErrorCode::kConfigError,
                  "validator needs a reference extractor");
}

void Validator::AddImplementation(ImplementationAdapter adapter) {
  CheckAdapter(adapter);
  for (const auto& a : adapters_) {
    PRIVAMP_ENFORCE(a.label != adapter.label, ErrorCode::kDuplicateLabel,
                    "implementation '" + adapter.label +
                        "' is already registered");
  }
  const auto& ref = *reference_;
  AdapterOutcome probe =
      RunAdapter(adapter, BitString::Zeros(ref.input_length()),
                 BitString::Zeros(ref.seed_length()), ref.output_length());
  PRIVAMP_ENFORCE(probe.output.has_value(), ErrorCode::kProbeFailed,
                  "probe of '" + adapter.label + "' failed: " + probe.detail);
  adapters_.push_back(std::move(adapter));
}

std::vector<std::string> Validator::labels() const {
  std::vector<std::string> out;
  for (const auto& a : adapters_) out.push_back(a.label);
  return out;
}

unsigned Validator::WorkerCount() const {
  if (options_.workers > 0) return options_.workers;
  if (const char* env = std::getenv(kWorkersEnvVar)) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::pair<BitString, BitString> Validator::CaseAt(ValidationMode mode,
                                                  uint64_t rng_seed,
                                                  uint64_t index) const {
  const size_t n = reference_->input_length();
  const size_t d = reference_->seed_length();
  if (mode == ValidationMode::kExhaustive) {
    const uint64_t mask = (uint64_t{1} << d) - 1;
    return {BitString::FromUint(index >> d, n),
            BitString::FromUint(index & mask, d)};
  }
  std::mt19937_64 gen(MixSeed(rng_seed, index));
  BitString input = BitString::Random(n, gen);
  BitString seed = BitString::Random(d, gen);
  return {std::move(input), std::move(seed)};
}

std::vector<ValidationReport> Validator::Validate(
    ValidationMode mode, std::optional<uint64_t> sample_size,
    std::optional<uint64_t> rng_seed) const {
  const size_t n = reference_->input_length();
  const size_t d = reference_->seed_length();
  uint64_t total = 0;
  if (mode == ValidationMode::kExhaustive) {
    PRIVAMP_ENFORCE(n + d <= options_.exhaustive_cap_bits && n + d < 64,
                    ErrorCode::kInvalidRange,
                    "exhaustive mode needs n + d <= " +
                        std::to_string(options_.exhaustive_cap_bits) +
                        ", got " + std::to_string(n + d));
    total = uint64_t{1} << (n + d);
  } else {
    PRIVAMP_ENFORCE(sample_size.has_value() && *sample_size >= 1,
                    ErrorCode::kInvalidRange,
                    "random mode needs sample_size >= 1");
    total = *sample_size;
    if (!rng_seed) rng_seed = std::random_device{}();
  }
  const uint64_t seed_value = rng_seed.value_or(0);
  const size_t k = adapters_.size();
  const size_t cap = options_.failure_cap;

  struct Partial {
    std::vector<FailedCase> failed;
    uint64_t failed_count = 0, crashed = 0, timeouts = 0;
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<uint64_t>(WorkerCount(), total));
  std::vector<std::vector<Partial>> partials(workers, std::vector<Partial>(k));
  std::atomic<uint64_t> next{0};
  std::atomic<uint64_t> visited{0};
  std::exception_ptr error;
  std::mutex error_mu;

  auto work = [&](unsigned w) {
    try {
      for (uint64_t i = next++; i < total; i = next++) {
        auto [input, seed] = CaseAt(mode, seed_value, i);
        const BitString expected = reference_->Extract(input, seed);
        for (size_t a = 0; a < k; ++a) {
          AdapterOutcome out =
              RunAdapter(adapters_[a], input, seed, expected.size());
          if (out.output && *out.output == expected) continue;
          Partial& p = partials[w][a];
          ++p.failed_count;
          if (!out.output) {
            if (out.failure == FailedCase::Kind::kCrashed) ++p.crashed;
            if (out.failure == FailedCase::Kind::kTimeout) ++p.timeouts;
          }
          if (p.failed.size() < cap) {
            FailedCase fc;
            fc.index = i;
            fc.kind = out.output ? FailedCase::Kind::kMismatch : out.failure;
            fc.input = input;
            fc.seed = seed;
            fc.expected = expected;
            fc.got = std::move(out.output);
            fc.detail = std::move(out.detail);
            p.failed.push_back(std::move(fc));
          }
        }
        ++visited;
      }
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
      next = total;
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(work, w);
  work(0);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  PRIVAMP_ENFORCE(visited == total, ErrorCode::kConfigError,
                  "validation visited " + std::to_string(visited.load()) +
                      " of " + std::to_string(total) + " cases");

  std::vector<ValidationReport> reports;
  for (size_t a = 0; a < k; ++a) {
    ValidationReport r;
    r.label = adapters_[a].label;
    r.mode = mode;
    if (mode == ValidationMode::kRandom) r.rng_seed = seed_value;
    r.total = total;
    for (auto& per_worker : partials) {
      Partial& p = per_worker[a];
      r.failed_count += p.failed_count;
      r.crashed += p.crashed;
      r.timeouts += p.timeouts;
      for (auto& fc : p.failed) r.failed.push_back(std::move(fc));
    }
    std::sort(r.failed.begin(), r.failed.end(),
              [](const FailedCase& x, const FailedCase& y) {
                return x.index < y.index;
              });
    if (r.failed.size() > cap) r.failed.resize(cap);
    reports.push_back(std::move(r));
  }
  return reports;
}

FailureDiagnosis Validator::AnalyzeFailedTest(
    const ValidationReport& report) const {
  PRIVAMP_ENFORCE(!report.failed.empty(), ErrorCode::kNoFailures,
                  "report '" + report.label + "' has no failed cases");
  const size_t n = reference_->input_length();
  const size_t m = reference_->output_length();
  FailureDiagnosis diag;
  diag.differing_bit_positions.assign(m, 0);
  std::vector<uint64_t> set_counts(n, 0);
  uint64_t mismatches = 0;
  for (const auto& fc : report.failed) {
    PRIVAMP_ENFORCE(fc.input.size() == n, ErrorCode::kDimensionMismatch,
                    "failed case input length differs from the reference");
    for (size_t i = 0; i < n; ++i) set_counts[i] += fc.input.Get(i);
    if (fc.got && fc.got->size() == m) {
      ++mismatches;
      const BitString diff = *fc.got ^ fc.expected;
      for (size_t j = 0; j < m; ++j) diag.differing_bit_positions[j] += diff.Get(j);
    }
  }
  const auto f = static_cast<double>(report.failed.size());
  diag.failures_analyzed = report.failed.size();
  diag.threshold = 4.0 / std::sqrt(f);
  diag.input_bit_correlations.resize(n);
  for (size_t i = 0; i < n; ++i) {
    diag.input_bit_correlations[i] = static_cast<double>(set_counts[i]) / f;
    if (diag.input_bit_correlations[i] - 0.5 > diag.threshold) {
      diag.flagged_input_bits.push_back(i);
    }
  }

  std::ostringstream ss;
  ss << diag.failures_analyzed << " failures analysed";
  if (diag.flagged_input_bits.empty()) {
    ss << "; no input bit is over-represented";
  }
  for (size_t i : diag.flagged_input_bits) {
    ss << "; input bit " << i << " set in "
       << diag.input_bit_correlations[i] * 100.0 << "% of failures"
       << " (threshold " << (0.5 + diag.threshold) * 100.0 << "%)";
  }
  if (mismatches > 0) {
    auto top = std::max_element(diag.differing_bit_positions.begin(),
                                diag.differing_bit_positions.end());
    ss << "; output bit " << (top - diag.differing_bit_positions.begin())
       << " differs in " << *top << " of " << mismatches << " mismatches";
  }
  diag.summary = ss.str();
  return diag;
}

}  // namespace privamp
