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

// privamp: extraction, parameter calculation, conformance validation and
// test-vector workflows.
//
// Exit codes: 0 success; 1 length mismatch or infeasible parameters;
// 2 argument, range or parse errors; 3 validation or verification
// failures; 4 adapter probe failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "extractor_options.h"
#include "privamp/test_vectors.h"
#include "privamp/toeplitz.h"
#include "privamp/trevisan.h"
#include "privamp/validator.h"

namespace {

using namespace privamp;

constexpr int kExitOk = 0;
constexpr int kExitLength = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailures = 3;
constexpr int kExitProbe = 4;

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Throw(ErrorCode::kConfigError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) Throw(ErrorCode::kConfigError, "cannot write " + path);
  out << text;
}

int Fail(const Error& e, int code) {
  std::cerr << "privamp: " << e.what() << '\n';
  return code;
}

struct ExtractCommand {
  tools::ExtractorOptions ext;
  std::string input, input_file, seed, seed_file, output_file;
  std::string format = "hex";

  void Register(CLI::App& app) {
    ext.Register(app);
    auto* in = app.add_option("--input", input, "input value");
    auto* in_f = app.add_option("--input-file", input_file, "file holding the input");
    auto* sd = app.add_option("--seed", seed, "seed value");
    auto* sd_f = app.add_option("--seed-file", seed_file, "file holding the seed");
    in->excludes(in_f);
    sd->excludes(sd_f);
    app.add_option("--format", format, "hex or binary-string, for all values");
    app.add_option("-o,--output", output_file, "write the output here instead of stdout");
  }

  int Run() const {
    std::unique_ptr<RandomnessExtractor> ex;
    IoFormat fmt;
    try {
      ex = MakeExtractor(ext.Config());
      fmt = ParseIoFormat(format);
      if (input.empty() == input_file.empty() || seed.empty() == seed_file.empty()) {
        Throw(ErrorCode::kConfigError, "give --input or --input-file, and --seed or --seed-file");
      }
    } catch (const Error& e) {
      return Fail(e, kExitUsage);
    }
    try {
      const std::string x_text = input_file.empty() ? input : ReadText(input_file);
      const std::string y_text = seed_file.empty() ? seed : ReadText(seed_file);
      BitString x, y;
      try {
        x = Deserialize(x_text, fmt, ex->input_length());
      } catch (const Error& e) {
        throw Error(e.code(), std::string("input: ") + e.what());
      }
      try {
        y = Deserialize(y_text, fmt, ex->seed_length());
      } catch (const Error& e) {
        throw Error(e.code(), std::string("seed: ") + e.what());
      }
      WriteText(output_file, Serialize(ex->Extract(x, y), fmt) + "\n");
    } catch (const Error& e) {
      const bool length = e.code() == ErrorCode::kLengthInconsistency ||
                          e.code() == ErrorCode::kLengthMismatch ||
                          e.code() == ErrorCode::kNonZeroPadding;
      return Fail(e, length ? kExitLength : kExitUsage);
    }
    return kExitOk;
  }
};

struct ParamsCommand {
  tools::ExtractorOptions ext;
  double entropy = 1.0;
  double error = 1e-6;
  std::string model = "quantum";

  void Register(CLI::App& app) {
    ext.Register(app, false);
    app.add_option("--entropy", entropy, "relative source min-entropy k/n")->required();
    app.add_option("--error", error, "security parameter")->required();
    app.add_option("--model", model, "quantum or classical")
        ->check(CLI::IsMember({"quantum", "classical"}));
  }

  int Run() const {
    try {
      const ExtractorKind kind = ParseKind(ext.type);
      if (kind != ExtractorKind::kTrevisan) {
        const auto sm = model == "classical" ? SecurityModel::kClassical
                                             : SecurityModel::kQuantum;
        std::cout << CalculateLength(sm, ext.n, entropy, error) << '\n';
        return kExitOk;
      }
      if (ext.t == 0) Throw(ErrorCode::kConfigError, "trevisan needs -t");
      const TrevisanParameters p = CalculateTrevisanLength(ext.n, entropy, error, ext.t);
      std::cout << p.output_length << '\n'
                << "one-bit seed length: " << p.one_bit_seed_length << '\n'
                << "field degree: " << p.field_degree << '\n'
                << "chunks: " << p.num_chunks << '\n'
                << "seed length: " << p.seed_length << '\n'
                << "design degree: " << p.design_degree << '\n'
                << "one-bit entropy: " << p.one_bit_entropy << '\n'
                << "per-bit error: " << p.per_bit_error << '\n';
    } catch (const Error& e) {
      return Fail(e, e.code() == ErrorCode::kNoFeasibleOutput ? kExitLength : kExitUsage);
    }
    return kExitOk;
  }
};

struct ValidateCommand {
  tools::ExtractorOptions ext;
  std::string command, label = "implementation", method = "stdio";
  std::string seed_format = "binary-string", input_format = "binary-string";
  std::string output_format = "binary-string", mode = "random";
  uint64_t samples = 10000;
  std::optional<uint64_t> rng_seed;
  unsigned workers = 0;
  int64_t timeout_ms = 30000;
  size_t show = 5;

  void Register(CLI::App& app) {
    ext.Register(app);
    app.add_option("--command", command,
                   "command template with $SEED$ and $INPUT$ (and $OUTPUT$ for files)")
        ->required();
    app.add_option("--label", label, "name used in the report");
    app.add_option("--method", method, "stdio or files")
        ->check(CLI::IsMember({"stdio", "files"}));
    app.add_option("--seed-format", seed_format, "serializer for $SEED$");
    app.add_option("--input-format", input_format, "serializer for $INPUT$");
    app.add_option("--output-format", output_format, "format the command prints");
    app.add_option("--mode", mode, "random or exhaustive")
        ->check(CLI::IsMember({"random", "exhaustive"}));
    app.add_option("--samples", samples, "random-mode case count");
    app.add_option("--rng-seed", rng_seed, "random-mode generator seed");
    app.add_option("--workers", workers,
                   std::string("parallel cases (default: $") + kWorkersEnvVar +
                       " or CPU count)");
    app.add_option("--timeout-ms", timeout_ms, "per-case timeout");
    app.add_option("--show", show, "failing cases to print");
  }

  int Run() const {
    std::unique_ptr<Validator> validator;
    try {
      ValidatorOptions opts;
      opts.workers = workers;
      validator = std::make_unique<Validator>(MakeExtractor(ext.Config()), opts);
      ImplementationAdapter a;
      a.label = label;
      a.input_method = method == "files" ? InputMethod::kFiles : InputMethod::kStdio;
      a.command_template = command;
      a.serializers = {{std::string(kSeedPlaceholder), ParseIoFormat(seed_format)},
                       {std::string(kInputPlaceholder), ParseIoFormat(input_format)}};
      a.output_parser = ParseIoFormat(output_format);
      a.timeout = std::chrono::milliseconds(timeout_ms);
      validator->AddImplementation(std::move(a));
    } catch (const Error& e) {
      return Fail(e, e.code() == ErrorCode::kProbeFailed ? kExitProbe : kExitUsage);
    }
    std::vector<ValidationReport> reports;
    try {
      reports = mode == "exhaustive"
                    ? validator->Validate(ValidationMode::kExhaustive)
                    : validator->Validate(ValidationMode::kRandom, samples, rng_seed);
    } catch (const Error& e) {
      return Fail(e, kExitUsage);
    }
    const ValidationReport& r = reports.front();
    std::cout << r.Summary() << '\n';
    if (r.ok()) return kExitOk;
    for (size_t i = 0; i < r.failed.size() && i < show; ++i) {
      const FailedCase& fc = r.failed[i];
      std::cout << "case " << fc.index << " (" << FailureKindName(fc.kind)
                << "): input=" << HexEncode(fc.input) << " seed=" << HexEncode(fc.seed)
                << " expected=" << HexEncode(fc.expected);
      if (fc.got) std::cout << " got=" << HexEncode(*fc.got);
      if (!fc.detail.empty()) std::cout << " [" << fc.detail << "]";
      std::cout << '\n';
    }
    std::cout << "diagnosis: " << validator->AnalyzeFailedTest(r).summary << '\n';
    return kExitFailures;
  }
};

struct VectorsGenCommand {
  tools::ExtractorOptions ext;
  size_t count = 8;
  std::optional<uint64_t> rng_seed;
  std::string kind = "rsp", out;

  void Register(CLI::App& app) {
    ext.Register(app);
    app.add_option("--count", count, "number of cases");
    app.add_option("--rng-seed", rng_seed, "generator seed; fixes the timestamp too");
    app.add_option("--kind", kind, "req or rsp")->check(CLI::IsMember({"req", "rsp"}));
    app.add_option("-o,--output", out, "output file (default stdout)");
  }

  int Run() const {
    try {
      auto ex = MakeExtractor(ext.Config());
      const TestVectorFile f = GenerateTestVectors(
          *ex, count, rng_seed, kind == "req" ? VectorKind::kRequest : VectorKind::kResponse);
      WriteText(out, RenderVectorFile(f));
    } catch (const Error& e) {
      return Fail(e, kExitUsage);
    }
    return kExitOk;
  }
};

struct VectorsVerifyCommand {
  std::string path;

  void Register(CLI::App& app) {
    app.add_option("file", path, ".rsp file to check")->required();
  }

  int Run() const {
    VerificationReport report;
    try {
      const TestVectorFile f = ParseVectorFile(ReadText(path));
      auto ex = MakeExtractor(f.config);
      report = VerifyResponseFile(*ex, f);
    } catch (const Error& e) {
      return Fail(e, kExitUsage);
    }
    const auto failed = report.failed_counts();
    for (size_t c : failed) {
      const auto& v = report.cases[c];
      std::cout << "FAIL COUNT " << c << ": expected " << HexEncode(v.expected)
                << ", computed " << HexEncode(v.got) << '\n';
    }
    std::cout << report.cases.size() - failed.size() << " of " << report.cases.size()
              << " cases passed\n";
    return failed.empty() ? kExitOk : kExitFailures;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy amplification extractors and conformance tooling"};
  app.require_subcommand(1);

  ExtractCommand extract;
  extract.Register(*app.add_subcommand("extract", "Run an extractor on one input"));
  ParamsCommand params;
  params.Register(*app.add_subcommand("params", "Compute the secure output length"));
  ValidateCommand validate;
  validate.Register(*app.add_subcommand("validate", "Test an external implementation"));
  auto* vectors = app.add_subcommand("vectors", "Generate or verify .req/.rsp files");
  vectors->require_subcommand(1);
  VectorsGenCommand gen;
  gen.Register(*vectors->add_subcommand("gen", "Write a request or response file"));
  VectorsVerifyCommand verify;
  verify.Register(*vectors->add_subcommand("verify", "Recompute a response file"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return privamp::tools::ExitForParseError(app, e);
  }
  if (app.got_subcommand("extract")) return extract.Run();
  if (app.got_subcommand("params")) return params.Run();
  if (app.got_subcommand("validate")) return validate.Run();
  if (vectors->got_subcommand("gen")) return gen.Run();
  return verify.Run();
}
