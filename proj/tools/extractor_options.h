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

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "privamp/error.h"
#include "privamp/extractor.h"

namespace privamp::tools {

struct ExtractorOptions {
  std::string type = "toeplitz";
  size_t n = 0;
  size_t m = 0;
  size_t t = 0;

  void Register(CLI::App& app, bool need_output_length = true) {
    app.add_option("--type", type, "toeplitz, modified-toeplitz or trevisan")
        ->check(CLI::IsMember({"toeplitz", "modified-toeplitz", "trevisan"}));
    app.add_option("-n,--input-length", n, "input length in bits")->required();
    auto* m_opt = app.add_option("-m,--output-length", m, "output length in bits");
    if (need_output_length) m_opt->required();
    app.add_option("-t,--one-bit-seed-length", t,
                   "Trevisan weak-design set size (even prime power)");
  }

  ExtractorConfig Config() const {
    ExtractorConfig config;
    config.kind = ParseKind(type);
    config.input_length = n;
    config.output_length = m;
    config.one_bit_seed_length = t;
    if (config.kind == ExtractorKind::kTrevisan && t == 0) {
      Throw(ErrorCode::kConfigError, "trevisan needs -t");
    }
    return config;
  }
};

// Parse errors exit with 2; --help exits with 0.
inline int ExitForParseError(CLI::App& app, const CLI::ParseError& e) {
  const int code = app.exit(e);
  return code == 0 ? 0 : 2;
}

}  // namespace privamp::tools
