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

#include <gtest/gtest.h>

#include "mutants.h"
#include "oracles.h"
#include "privamp/error.h"
#include "privamp/toeplitz.h"
#include "privamp/validator.h"

#ifndef PRIVAMP_WRAPPER_PATH
#error "PRIVAMP_WRAPPER_PATH must name the privamp-wrapper binary"
#endif

namespace privamp {
namespace {

std::shared_ptr<const RandomnessExtractor> Toeplitz32() {
  return std::make_shared<ToeplitzHashing>(3, 2);
}

ImplementationAdapter InProcess(const std::string& label, ExtractFunction fn) {
  ImplementationAdapter a;
  a.label = label;
  a.input_method = InputMethod::kInProcess;
  a.function = std::move(fn);
  return a;
}

std::string Wrapper(const std::string& args) {
  return std::string(PRIVAMP_WRAPPER_PATH) + " " + args;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kConfigError;
}

TEST(SerializeTest, Formats) {
  const BitString b = BitString::FromString("1010110");
  EXPECT_EQ(Serialize(b, IoFormat::kBinaryString), "1010110");
  EXPECT_EQ(Serialize(b, IoFormat::kHex), "56");
  EXPECT_EQ(Deserialize(" 1010110\n", IoFormat::kBinaryString, 7), b);
  EXPECT_EQ(Deserialize("56\n", IoFormat::kHex, 7), b);
  EXPECT_EQ(CodeOf([] { Deserialize("101", IoFormat::kBinaryString, 4); }),
            ErrorCode::kLengthInconsistency);
  EXPECT_EQ(CodeOf([] { Deserialize("10x1", IoFormat::kBinaryString, 4); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { Deserialize("zz", IoFormat::kHex, 8); }), ErrorCode::kParseError);
  EXPECT_EQ(ParseIoFormat("binary"), IoFormat::kBinaryString);
  EXPECT_EQ(CodeOf([] { ParseIoFormat("base64"); }), ErrorCode::kConfigError);
}

TEST(AdapterConfigTest, Rejections) {
  ImplementationAdapter a;
  a.label = "x";
  a.command_template = "prog $SEED$";
  EXPECT_EQ(CodeOf([&] { CheckAdapter(a); }), ErrorCode::kConfigError);
  a.command_template = "prog $SEED$ $INPUT$ $INPUT$";
  EXPECT_EQ(CodeOf([&] { CheckAdapter(a); }), ErrorCode::kConfigError);
  a.command_template = "prog $SEED$ $INPUT$";
  a.serializers.erase(std::string(kInputPlaceholder));
  EXPECT_EQ(CodeOf([&] { CheckAdapter(a); }), ErrorCode::kConfigError);
  a.serializers[std::string(kInputPlaceholder)] = IoFormat::kHex;
  EXPECT_NO_THROW(CheckAdapter(a));
  a.input_method = InputMethod::kFiles;
  EXPECT_EQ(CodeOf([&] { CheckAdapter(a); }), ErrorCode::kConfigError);
  a.command_template += " --out $OUTPUT$";
  EXPECT_NO_THROW(CheckAdapter(a));
  a.input_method = InputMethod::kStdio;
  EXPECT_EQ(CodeOf([&] { CheckAdapter(a); }), ErrorCode::kConfigError);
  a.label.clear();
  EXPECT_EQ(CodeOf([&] { CheckAdapter(a); }), ErrorCode::kConfigError);
}

TEST(ValidatorTest, RegisterAndProbe) {
  Validator v(Toeplitz32());
  v.AddImplementation(InProcess("self", tools::MakeMutant("none", Toeplitz32())));
  EXPECT_EQ(CodeOf([&] { v.AddImplementation(InProcess("self", tools::MakeMutant("none", Toeplitz32()))); }),
            ErrorCode::kDuplicateLabel);

  ImplementationAdapter missing;
  missing.label = "missing";
  missing.command_template = "/nonexistent/binary $SEED$ $INPUT$";
  EXPECT_EQ(CodeOf([&] { v.AddImplementation(missing); }), ErrorCode::kProbeFailed);

  ImplementationAdapter garbage;
  garbage.label = "echo";
  garbage.command_template = "echo $SEED$ $INPUT$";
  EXPECT_EQ(CodeOf([&] { v.AddImplementation(garbage); }), ErrorCode::kProbeFailed);

  ImplementationAdapter failing;
  failing.label = "false";
  failing.command_template = "sh -c 'exit 1' $SEED$ $INPUT$";
  EXPECT_EQ(CodeOf([&] { v.AddImplementation(failing); }), ErrorCode::kProbeFailed);
  EXPECT_EQ(v.labels(), std::vector<std::string>{"self"});
}

TEST(ValidatorTest, SelfExhaustiveVisitsEveryCase) {
  Validator v(Toeplitz32());
  v.AddImplementation(InProcess("self", tools::MakeMutant("none", Toeplitz32())));
  const auto reports = v.Validate(ValidationMode::kExhaustive);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].total, 128u);
  EXPECT_TRUE(reports[0].ok());
  EXPECT_FALSE(reports[0].rng_seed.has_value());
}

TEST(ValidatorTest, ExhaustiveCaseLayout) {
  Validator v(Toeplitz32());
  auto [x, y] = v.CaseAt(ValidationMode::kExhaustive, 0, 0b1010011);
  EXPECT_EQ(x.ToString(), "101");
  EXPECT_EQ(y.ToString(), "0011");
}

TEST(ValidatorTest, PreconditionErrors) {
  Validator big(std::make_shared<ToeplitzHashing>(16, 8));
  big.AddImplementation(InProcess("self", tools::MakeMutant("none", std::make_shared<ToeplitzHashing>(16, 8))));
  EXPECT_EQ(CodeOf([&] { big.Validate(ValidationMode::kExhaustive); }),
            ErrorCode::kInvalidRange);
  EXPECT_EQ(CodeOf([&] { big.Validate(ValidationMode::kRandom, 0); }),
            ErrorCode::kInvalidRange);
  EXPECT_EQ(CodeOf([&] { big.Validate(ValidationMode::kRandom); }),
            ErrorCode::kInvalidRange);
}

TEST(ValidatorTest, StdioWrapperWithHex) {
  auto ref = std::make_shared<ModifiedToeplitzHashing>(128, 64);
  Validator v(ref);
  ImplementationAdapter a;
  a.label = "wrapper";
  a.command_template = Wrapper("--type modified-toeplitz -n 128 -m 64 --format hex $SEED$ $INPUT$");
  a.serializers = {{"$SEED$", IoFormat::kHex}, {"$INPUT$", IoFormat::kHex}};
  a.output_parser = IoFormat::kHex;
  v.AddImplementation(a);
  const auto r = v.Validate(ValidationMode::kRandom, 40, 5).front();
  EXPECT_EQ(r.total, 40u);
  EXPECT_TRUE(r.ok()) << r.Summary();
}

TEST(ValidatorTest, FilesWrapper) {
  Validator v(Toeplitz32());
  ImplementationAdapter a;
  a.label = "files";
  a.input_method = InputMethod::kFiles;
  a.command_template = Wrapper("--type toeplitz -n 3 -m 2 --files --out $OUTPUT$ $SEED$ $INPUT$");
  v.AddImplementation(a);
  const auto r = v.Validate(ValidationMode::kExhaustive).front();
  EXPECT_EQ(r.total, 128u);
  EXPECT_TRUE(r.ok()) << r.Summary();
}

TEST(ValidatorTest, CrashesAndTimeoutsAreRecordedPerCase) {
  Validator v(Toeplitz32());
  ImplementationAdapter a;
  a.label = "flaky";
  a.command_template =
      "sh -c 'case \"$1$2\" in 0000111) sleep 5;; 0000110) exit 7;; *) echo 00;; esac' "
      "sh $SEED$ $INPUT$";
  a.timeout = std::chrono::milliseconds(300);
  v.AddImplementation(a);
  const auto r = v.Validate(ValidationMode::kExhaustive).front();
  EXPECT_EQ(r.total, 128u);
  EXPECT_EQ(r.crashed, 1u);
  EXPECT_EQ(r.timeouts, 1u);
  uint64_t nonzero = 0;
  for (uint64_t c = 0; c < 128; ++c) {
    auto [x, y] = v.CaseAt(ValidationMode::kExhaustive, 0, c);
    nonzero += !v.reference().Extract(x, y).IsZero();
  }
  // Cases 0000111 and 0000110 give T(0) x = 00, so they are not mismatches.
  EXPECT_EQ(r.failed_count, nonzero + 2);
  size_t crash = 0, timeout = 0;
  for (const auto& fc : r.failed) {
    if (fc.kind == FailedCase::Kind::kCrashed) {
      ++crash;
      EXPECT_EQ(fc.input.ToString(), "110");
      EXPECT_FALSE(fc.got.has_value());
    }
    if (fc.kind == FailedCase::Kind::kTimeout) {
      ++timeout;
      EXPECT_EQ(fc.input.ToString(), "111");
    }
  }
  EXPECT_EQ(crash, 1u);
  EXPECT_EQ(timeout, 1u);
}

TEST(ValidatorTest, InProcessExceptionIsACrash) {
  Validator v(Toeplitz32());
  auto ref = Toeplitz32();
  v.AddImplementation(InProcess("throws", [ref](const BitString& x, const BitString& y) {
    if (x.ToString() == "111") throw std::runtime_error("boom");
    return ref->Extract(x, y);
  }));
  const auto r = v.Validate(ValidationMode::kExhaustive).front();
  EXPECT_EQ(r.failed_count, 16u);
  EXPECT_EQ(r.crashed, 16u);
}

TEST(ValidatorTest, DropLastBitMutant) {
  auto ref = std::make_shared<ModifiedToeplitzHashing>(128, 64);
  Validator v(ref);
  v.AddImplementation(InProcess("drop", tools::MakeMutant("drop-last-bit", ref)));
  const auto r = v.Validate(ValidationMode::kRandom, 10000, 2024).front();
  EXPECT_NEAR(r.failure_fraction(), 0.5, 0.02);
  for (const auto& fc : r.failed) ASSERT_TRUE(fc.input.Get(127));
  const FailureDiagnosis diag = v.AnalyzeFailedTest(r);
  EXPECT_EQ(diag.flagged_input_bits, std::vector<size_t>{127});
  EXPECT_EQ(diag.input_bit_correlations[127], 1.0);
  for (double c : diag.input_bit_correlations) {
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0);
  }
  EXPECT_NE(diag.summary.find("input bit 127"), std::string::npos);
}

TEST(ValidatorTest, SeedReversalMutantMatchesOracle) {
  auto ref = Toeplitz32();
  Validator v(ref);
  v.AddImplementation(InProcess("reverse", tools::MakeMutant("reverse-seed", ref)));
  const auto r = v.Validate(ValidationMode::kExhaustive).front();
  uint64_t want = 0;
  for (uint64_t x = 0; x < 8; ++x) {
    for (uint64_t y = 0; y < 16; ++y) {
      const auto xb = oracle::ToBits(BitString::FromUint(x, 3));
      const auto yb = oracle::ToBits(BitString::FromUint(y, 4));
      const auto ry = oracle::ToBits(BitString::FromUint(y, 4).Reversed());
      want += oracle::MatVec(oracle::ToeplitzMatrix(3, 2, yb), xb) !=
              oracle::MatVec(oracle::ToeplitzMatrix(3, 2, ry), xb);
    }
  }
  EXPECT_GT(want, 0u);
  EXPECT_EQ(r.failed_count, want);
}

TEST(ValidatorTest, StuckOutputBitConcentratesHistogram) {
  auto ref = std::make_shared<ToeplitzHashing>(40, 12);
  Validator v(ref);
  v.AddImplementation(InProcess("stuck", tools::MakeMutant("stuck-output-bit", ref)));
  const auto r = v.Validate(ValidationMode::kRandom, 2000, 3).front();
  ASSERT_GT(r.failed_count, 0u);
  const FailureDiagnosis diag = v.AnalyzeFailedTest(r);
  EXPECT_EQ(diag.differing_bit_positions[0], r.failed_count);
  for (size_t j = 1; j < 12; ++j) EXPECT_EQ(diag.differing_bit_positions[j], 0u);
}

TEST(ValidatorTest, AllZeroInputFailuresAreNotFlagged) {
  Validator v(Toeplitz32());
  ValidationReport r;
  r.label = "zero";
  for (uint64_t i = 0; i < 100; ++i) {
    FailedCase fc;
    fc.index = i;
    fc.input = BitString(3);
    fc.seed = BitString::FromUint(i % 16, 4);
    fc.expected = BitString(2);
    fc.got = BitString::Ones(2);
    r.failed.push_back(fc);
  }
  r.failed_count = r.total = 100;
  const FailureDiagnosis diag = v.AnalyzeFailedTest(r);
  EXPECT_TRUE(diag.flagged_input_bits.empty());
  for (double c : diag.input_bit_correlations) EXPECT_EQ(c, 0.0);
  EXPECT_EQ(CodeOf([&] { v.AnalyzeFailedTest(ValidationReport{}); }), ErrorCode::kNoFailures);
}

TEST(ValidatorTest, RandomModeIsDeterministicAcrossWorkers) {
  auto ref = std::make_shared<ModifiedToeplitzHashing>(20, 7);
  std::vector<ValidationReport> runs;
  for (unsigned workers : {1u, 3u, 1u}) {
    ValidatorOptions opts;
    opts.workers = workers;
    Validator v(ref, opts);
    v.AddImplementation(InProcess("rev", tools::MakeMutant("reverse-seed", ref)));
    runs.push_back(v.Validate(ValidationMode::kRandom, 3000, 99).front());
  }
  for (const auto& r : runs) {
    EXPECT_EQ(r.failed_count, runs[0].failed_count);
    ASSERT_EQ(r.failed.size(), runs[0].failed.size());
    for (size_t i = 0; i < r.failed.size(); ++i) {
      EXPECT_EQ(r.failed[i].index, runs[0].failed[i].index);
      EXPECT_EQ(r.failed[i].input, runs[0].failed[i].input);
      EXPECT_EQ(r.failed[i].seed, runs[0].failed[i].seed);
    }
  }
}

TEST(ValidatorTest, UnseededRunRecordsItsSeed) {
  auto ref = std::make_shared<ToeplitzHashing>(30, 10);
  Validator v(ref);
  v.AddImplementation(InProcess("rev", tools::MakeMutant("reverse-seed", ref)));
  const auto first = v.Validate(ValidationMode::kRandom, 500).front();
  ASSERT_TRUE(first.rng_seed.has_value());
  const auto again = v.Validate(ValidationMode::kRandom, 500, first.rng_seed).front();
  EXPECT_EQ(again.failed_count, first.failed_count);
  ASSERT_FALSE(first.failed.empty());
  EXPECT_EQ(again.failed.front().input, first.failed.front().input);
}

TEST(ValidatorTest, FailureCap) {
  auto ref = Toeplitz32();
  ValidatorOptions opts;
  opts.failure_cap = 5;
  opts.workers = 2;
  Validator v(ref, opts);
  v.AddImplementation(InProcess("ones", [](const BitString&, const BitString&) {
    return BitString::Ones(2);
  }));
  const auto r = v.Validate(ValidationMode::kExhaustive).front();
  EXPECT_GT(r.failed_count, 5u);
  ASSERT_EQ(r.failed.size(), 5u);
  for (size_t i = 1; i < 5; ++i) EXPECT_LT(r.failed[i - 1].index, r.failed[i].index);
}

TEST(ValidatorTest, SeveralImplementationsShareCases) {
  auto ref = Toeplitz32();
  Validator v(ref);
  v.AddImplementation(InProcess("good", tools::MakeMutant("none", ref)));
  v.AddImplementation(InProcess("bad", tools::MakeMutant("reverse-seed", ref)));
  const auto reports = v.Validate(ValidationMode::kExhaustive);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].label, "good");
  EXPECT_TRUE(reports[0].ok());
  EXPECT_EQ(reports[1].label, "bad");
  EXPECT_FALSE(reports[1].ok());
}

}  // namespace
}  // namespace privamp
