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

#include "privamp/gf2_matrix.h"

#include <bit>
#include <string>

#include "privamp/error.h"

namespace privamp {

Gf2Matrix::Gf2Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), rows_data_(rows, BitString(cols)) {}

Gf2Matrix Gf2Matrix::Identity(size_t n) {
  Gf2Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.Set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::HConcat(const Gf2Matrix& other) const {
  PRIVAMP_ENFORCE(rows_ == other.rows_, ErrorCode::kDimensionMismatch,
                  "cannot concatenate matrices with " + std::to_string(rows_) +
                      " and " + std::to_string(other.rows_) + " rows");
  Gf2Matrix out(rows_, cols_ + other.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    out.rows_data_[i] = rows_data_[i].Concat(other.rows_data_[i]);
  }
  return out;
}

BitString Gf2MatVec(const Gf2Matrix& m, const BitString& x) {
  PRIVAMP_ENFORCE(m.cols() == x.size(), ErrorCode::kDimensionMismatch,
                  "matrix has " + std::to_string(m.cols()) +
                      " columns but vector has " + std::to_string(x.size()) +
                      " entries");
  BitString z(m.rows());
  auto xw = x.words();
  for (size_t i = 0; i < m.rows(); ++i) {
    auto rw = m.Row(i).words();
    uint64_t acc = 0;
    for (size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & xw[w];
    z.Set(i, std::popcount(acc) & 1);
  }
  return z;
}

}  // namespace privamp
