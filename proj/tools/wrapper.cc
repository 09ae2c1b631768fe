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

// Reference extractor behind the adapter calling convention:
//
//   privamp-wrapper --type T -n N -m M [--mutant NAME] SEED INPUT
//
// SEED and INPUT are serialized values, or file paths with --files, in which
// case the result goes to --out instead of stdout.

#include <fstream>
#include <iostream>
#include <sstream>

#include "extractor_options.h"
#include "mutants.h"
#include "privamp/validator.h"

namespace {

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    privamp::Throw(privamp::ErrorCode::kConfigError, "cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace privamp;
  CLI::App app{"Reference and mutant extractor for validator adapters"};
  tools::ExtractorOptions ext;
  ext.Register(app);
  std::string mutant = "none";
  std::string format = "binary-string";
  std::string output_format;
  bool files = false;
  std::string out_path;
  std::string seed_arg, input_arg;
  app.add_option("--mutant", mutant, "none, drop-last-bit, reverse-seed or stuck-output-bit")
      ->check(CLI::IsMember({"none", "drop-last-bit", "reverse-seed", "stuck-output-bit"}));
  app.add_option("--format", format, "format of SEED and INPUT");
  app.add_option("--output-format", output_format, "defaults to --format");
  app.add_flag("--files", files, "SEED and INPUT are file paths");
  app.add_option("--out", out_path, "output file (required with --files)");
  app.add_option("seed", seed_arg)->required();
  app.add_option("input", input_arg)->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return tools::ExitForParseError(app, e);
  }

  try {
    std::shared_ptr<const RandomnessExtractor> ref = MakeExtractor(ext.Config());
    const IoFormat in_fmt = ParseIoFormat(format);
    const IoFormat out_fmt =
        output_format.empty() ? in_fmt : ParseIoFormat(output_format);
    if (files) {
      if (out_path.empty()) {
        Throw(ErrorCode::kConfigError, "--files needs --out");
      }
      seed_arg = Slurp(seed_arg);
      input_arg = Slurp(input_arg);
    }
    const BitString seed = Deserialize(seed_arg, in_fmt, ref->seed_length());
    const BitString input = Deserialize(input_arg, in_fmt, ref->input_length());
    const BitString out = tools::MakeMutant(mutant, ref)(input, seed);
    if (files) {
      std::ofstream(out_path) << Serialize(out, out_fmt) << '\n';
    } else {
      std::cout << Serialize(out, out_fmt) << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "privamp-wrapper: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
