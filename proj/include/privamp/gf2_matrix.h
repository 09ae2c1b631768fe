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
#include <vector>

#include "privamp/bitstring.h"

namespace privamp {

// Dense row-major matrix over GF(2).
class Gf2Matrix {
 public:
  Gf2Matrix(size_t rows, size_t cols);

  static Gf2Matrix Identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  bool Get(size_t i, size_t j) const { return rows_data_[i].Get(j); }
  void Set(size_t i, size_t j, bool v) { rows_data_[i].Set(j, v); }
  const BitString& Row(size_t i) const { return rows_data_[i]; }

  /// [this | other], row counts must agree.
  Gf2Matrix HConcat(const Gf2Matrix& other) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  size_t rows_;
  size_t cols_;
  std::vector<BitString> rows_data_;
};

/// z_i = XOR_j (M_ij AND x_j).
BitString Gf2MatVec(const Gf2Matrix& m, const BitString& x);

}  // namespace privamp
