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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "privamp/process.h"

#if !defined(PRIVAMP_CLI_PATH) || !defined(PRIVAMP_WRAPPER_PATH) || \
    !defined(PRIVAMP_TESTDATA_DIR)
#error "CLI test paths are not configured"
#endif

namespace privamp {
namespace {

namespace fs = std::filesystem;

const std::string kGolden = std::string(PRIVAMP_TESTDATA_DIR) + "/modified_toeplitz_128_64.rsp";

ProcessResult Cli(std::vector<std::string> args) {
  args.insert(args.begin(), PRIVAMP_CLI_PATH);
  return RunProcess(args, std::chrono::seconds(120));
}

int Code(const ProcessResult& r) {
  EXPECT_EQ(r.status, ProcessResult::Status::kExited) << r.Describe();
  return r.exit_code;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("privamp-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string File(const std::string& name, const std::string& content = "") const {
    const fs::path p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(CliExtractTest, GoldenVector) {
  const auto r = Cli({"extract", "--type", "modified-toeplitz", "-n", "128", "-m", "64", "--input",
                      "e3fc097a6dcc77fc781a7ed3533528c8", "--seed",
                      "05f47ea39db462da99e3e29b06721ae6"});
  EXPECT_EQ(Code(r), 0);
  EXPECT_EQ(r.out, "ab264a34f8ebc27c\n");
}

TEST(CliExtractTest, ZeroInputFile) {
  TempDir dir;
  const auto r = Cli({"extract", "--type", "toeplitz", "-n", "16", "-m", "8", "--input-file",
                      dir.File("x", "0000\n"), "--seed", "012345"});
  EXPECT_EQ(Code(r), 0);
  EXPECT_EQ(r.out, "00\n");
}

TEST(CliExtractTest, BinaryFormatAndOutputFile) {
  TempDir dir;
  const std::string out = dir.File("out");
  const auto r = Cli({"extract", "--type", "toeplitz", "-n", "3", "-m", "2", "--format",
                      "binary-string", "--input", "111", "--seed", "1111", "-o", out});
  EXPECT_EQ(Code(r), 0);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(Slurp(out), "11\n");
}

TEST(CliExtractTest, WrongSeedLength) {
  const auto r = Cli({"extract", "--type", "modified-toeplitz", "-n", "128", "-m", "64",
                      "--input", "e3fc097a6dcc77fc781a7ed3533528c8", "--seed", "05f4"});
  EXPECT_EQ(Code(r), 1);
  EXPECT_EQ(r.err, "privamp: seed: LengthInconsistency: expected 32 hex digits for 127 bits, got 4\n");
}

TEST(CliExtractTest, ArgumentErrors) {
  EXPECT_EQ(Code(Cli({"extract", "-n", "8", "-m", "4", "--input", "zz", "--seed", "000"})), 2);
  EXPECT_EQ(Code(Cli({"extract", "-n", "8", "-m", "9", "--input", "00", "--seed", "0000"})), 2);
  EXPECT_EQ(Code(Cli({"extract", "-n", "8", "-m", "4", "--seed", "0000"})), 2);
  EXPECT_EQ(Code(Cli({"extract", "--type", "sha", "-n", "8", "-m", "4"})), 2);
  EXPECT_EQ(Code(Cli({"frobnicate"})), 2);
  EXPECT_EQ(Code(Cli({})), 2);
}

TEST(CliParamsTest, Examples) {
  auto r = Cli({"params", "--type", "toeplitz", "-n", "8388608", "--entropy", "0.5", "--error", "1e-6"});
  EXPECT_EQ(Code(r), 0);
  EXPECT_EQ(r.out, "4194266\n");
  r = Cli({"params", "--entropy", "1.0", "--error", "0.5", "-n", "10"});
  EXPECT_EQ(Code(r), 0);
  EXPECT_EQ(r.out, "10\n");
  r = Cli({"params", "--entropy", "1.0", "--error", "2.0", "-n", "10"});
  EXPECT_EQ(Code(r), 2);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(Code(Cli({"params", "--entropy", "0", "--error", "0.1", "-n", "10"})), 2);
}

TEST(CliParamsTest, Trevisan) {
  auto r = Cli({"params", "--type", "trevisan", "-n", "1000000", "--entropy", "0.5", "--error",
                "1e-6", "-t", "512"});
  EXPECT_EQ(Code(r), 0);
  EXPECT_NE(r.out.find("\none-bit seed length: 512\nfield degree: 256\n"), std::string::npos)
      << r.out;
  r = Cli({"params", "--type", "trevisan", "-n", "100", "--entropy", "0.5", "--error", "1e-6",
           "-t", "512"});
  EXPECT_EQ(Code(r), 1);
  EXPECT_EQ(Code(Cli({"params", "--type", "trevisan", "-n", "100", "--entropy", "0.5",
                      "--error", "1e-6", "-t", "6"})),
            2);
}

std::string WrapperCommand(const std::string& mutant) {
  return std::string(PRIVAMP_WRAPPER_PATH) + " --type modified-toeplitz -n 128 -m 64 --mutant " +
         mutant + " $SEED$ $INPUT$";
}

TEST(CliValidateTest, SelfValidationPasses) {
  const auto r = Cli({"validate", "--type", "modified-toeplitz", "-n", "128", "-m", "64",
                      "--command", WrapperCommand("none"), "--samples", "200", "--rng-seed",
                      "1"});
  EXPECT_EQ(Code(r), 0);
  EXPECT_EQ(r.out, "implementation: 0 of 200 cases failed (random mode, rng seed 1)\n");
}

TEST(CliValidateTest, DropLastBitMutantFails) {
  const auto r = Cli({"validate", "--type", "modified-toeplitz", "-n", "128", "-m", "64",
                      "--command", WrapperCommand("drop-last-bit"), "--samples", "300",
                      "--rng-seed", "1", "--label", "gpu", "--show", "0"});
  EXPECT_EQ(Code(r), 3);
  EXPECT_EQ(r.out.rfind("gpu: ", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("diagnosis: "), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("input bit 127 set in 100% of failures"), std::string::npos) << r.out;
}

TEST(CliValidateTest, ExhaustiveFilesMode) {
  const auto r = Cli({"validate", "--type", "toeplitz", "-n", "3", "-m", "2", "--mode",
                      "exhaustive", "--method", "files", "--seed-format", "hex",
                      "--input-format", "hex", "--output-format", "hex", "--command",
                      std::string(PRIVAMP_WRAPPER_PATH) +
                          " --type toeplitz -n 3 -m 2 --format hex --files --out $OUTPUT$ "
                          "$SEED$ $INPUT$"});
  EXPECT_EQ(Code(r), 0);
  EXPECT_EQ(r.out, "implementation: 0 of 128 cases failed (exhaustive mode)\n");
}

TEST(CliValidateTest, UnlaunchableCommand) {
  const auto r = Cli({"validate", "-n", "8", "-m", "4", "--command",
                      "/does/not/exist $SEED$ $INPUT$"});
  EXPECT_EQ(Code(r), 4);
  EXPECT_NE(r.err.find("ProbeFailed"), std::string::npos);
}

TEST(CliValidateTest, BadTemplate) {
  EXPECT_EQ(Code(Cli({"validate", "-n", "8", "-m", "4", "--command", "true $SEED$"})), 2);
}

TEST(CliVectorsTest, VerifyGolden) {
  const auto r = Cli({"vectors", "verify", kGolden});
  EXPECT_EQ(Code(r), 0);
  EXPECT_EQ(r.out, "8 of 8 cases passed\n");
}

TEST(CliVectorsTest, GenVerifyRoundTrip) {
  TempDir dir;
  const std::string a = dir.File("a.rsp"), b = dir.File("b.rsp");
  for (const auto& path : {a, b}) {
    EXPECT_EQ(Code(Cli({"vectors", "gen", "--type", "trevisan", "-n", "16", "-m", "2", "-t",
                        "2", "--count", "5", "--rng-seed", "9", "-o", path})),
              0);
  }
  EXPECT_EQ(Slurp(a), Slurp(b));
  const auto r = Cli({"vectors", "verify", a});
  EXPECT_EQ(Code(r), 0);
  EXPECT_EQ(r.out, "5 of 5 cases passed\n");
}

TEST(CliVectorsTest, GenToStdoutMatchesFile) {
  const auto r = Cli({"vectors", "gen", "--type", "modified-toeplitz", "-n", "128", "-m", "64",
                      "--count", "2", "--rng-seed", "4", "--kind", "req"});
  EXPECT_EQ(Code(r), 0);
  EXPECT_EQ(r.out.rfind("# CAVS\n# ModifiedToeplitzHashing\n# Input Length : 128\n"
                        "# Compression ratio: 1/2\n# Generated on Thu Jan  1 00:00:00 1970\n\n"
                        "[EXTRACT]\n\nCOUNT = 0\nINPUT = ",
                        0),
            0u)
      << r.out;
  EXPECT_EQ(r.out.find("OUTPUT"), std::string::npos);
}

TEST(CliVectorsTest, TamperedFile) {
  TempDir dir;
  std::string text = Slurp(kGolden);
  text.replace(text.find("48f041d38296ffcc"), 16, "48f041d38296ffcd");
  const auto r = Cli({"vectors", "verify", dir.File("bad.rsp", text)});
  EXPECT_EQ(Code(r), 3);
  EXPECT_EQ(r.out,
            "FAIL COUNT 3: expected 48f041d38296ffcd, computed 48f041d38296ffcc\n"
            "7 of 8 cases passed\n");
}

TEST(CliVectorsTest, ParseErrorsExitTwo) {
  TempDir dir;
  std::string text = Slurp(kGolden);
  text.replace(text.find("SEED = 05f4"), 6, "SEEED ");
  EXPECT_EQ(Code(Cli({"vectors", "verify", dir.File("bad.rsp", text)})), 2);
  EXPECT_EQ(Code(Cli({"vectors", "verify", dir.File("missing.rsp")})), 2);
  const std::string req = dir.File("x.req");
  EXPECT_EQ(Code(Cli({"vectors", "gen", "-n", "8", "-m", "4", "--kind", "req", "--rng-seed",
                      "1", "-o", req})),
            0);
  const auto r = Cli({"vectors", "verify", req});
  EXPECT_EQ(Code(r), 2);
  EXPECT_NE(r.err.find("MissingOutputs"), std::string::npos);
}

TEST(CliHelpTest, EverySubcommandHasHelp) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"--help"}, {"extract", "--help"}, {"params", "--help"},
        {"validate", "--help"}, {"vectors", "--help"}, {"vectors", "gen", "--help"},
        {"vectors", "verify", "--help"}}) {
    const auto r = Cli(args);
    EXPECT_EQ(Code(r), 0) << args.front();
    EXPECT_NE(r.out.find("Usage"), std::string::npos) << r.out;
  }
}

}  // namespace
}  // namespace privamp
