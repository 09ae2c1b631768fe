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

#include "privamp/extractor.h"
#include "privamp/gf2_matrix.h"

namespace privamp {

enum class SecurityModel { kQuantum, kClassical };

/// Largest output length allowed by the leftover hash lemma,
/// floor(k + 2 - 2*log2(1/error_bound)) with k = relative_source_entropy * n,
/// clamped to [0, n].
///
/// Both security models use the same bound today; the flag exists so callers
/// state which adversary they assume. The logarithm is evaluated in extended
/// precision and nudged upward (unless exact) so rounding can only shrink
/// the result.
size_t CalculateLength(SecurityModel model, size_t input_length,
                       double relative_source_entropy, double error_bound);

struct FftOptions {
  // Largest tolerated |v - round(v)| for a convolution coefficient.
  double max_residual = 0.25;
  // On residual failure, recompute exactly instead of throwing PrecisionLoss.
  bool exact_fallback = true;
};

/// Standard Toeplitz hashing, z = T(y) x with T(y) an m x n Toeplitz matrix.
///
/// Seed layout: T(y)[i][j] = y[(i - j) mod (n + m - 1)]. The main diagonal is
/// y[0], the first column reads y[0..m) downward and the first row reads
/// y[0], y[q-1], y[q-2], ... to the right. This is the circulant embedding
/// FFT^-1(FFT(y) . FFT(x padded)) truncated to m entries.
class ToeplitzHashing : public RandomnessExtractor {
 public:
  ToeplitzHashing(size_t input_length, size_t output_length);

  size_t input_length() const override { return n_; }
  size_t seed_length() const override { return n_ + m_ - 1; }
  size_t output_length() const override { return m_; }
  std::string name() const override { return "ToeplitzHashing"; }
  ExtractorConfig config() const override;

  BitString Extract(const BitString& input,
                    const BitString& seed) const override;
  /// Word-parallel row-by-row product, O(mn/64).
  BitString ExtractNaive(const BitString& input, const BitString& seed) const;
  /// Floating-point circulant convolution, O(n log n).
  BitString ExtractFft(const BitString& input, const BitString& seed,
                       const FftOptions& options = {}) const;

  Gf2Matrix ToMatrix(const BitString& seed) const;

 private:
  size_t n_;
  size_t m_;
};

/// Modified Toeplitz hashing, z = (T'(y) | I_m) x with T'(y) an
/// m x (n - m) Toeplitz matrix and an (n - 1)-bit seed.
///
/// T'(y)[i][j] = y[(i - j) mod (n - 1)], the same wrap-around layout as
/// ToeplitzHashing with q = n - 1. Requires 1 <= m < n.
class ModifiedToeplitzHashing : public RandomnessExtractor {
 public:
  ModifiedToeplitzHashing(size_t input_length, size_t output_length);

  size_t input_length() const override { return n_; }
  size_t seed_length() const override { return n_ - 1; }
  size_t output_length() const override { return m_; }
  std::string name() const override { return "ModifiedToeplitzHashing"; }
  ExtractorConfig config() const override;

  BitString Extract(const BitString& input,
                    const BitString& seed) const override;
  BitString ExtractNaive(const BitString& input, const BitString& seed) const;
  BitString ExtractFft(const BitString& input, const BitString& seed,
                       const FftOptions& options = {}) const;

  Gf2Matrix ToMatrix(const BitString& seed) const;

 private:
  size_t n_;
  size_t m_;
};

namespace internal {

// out[i] = XOR_j y[(i - j) mod q] v[j] for i < rows, q = y.size() >= v.size().
BitString CirculantHeadExact(const BitString& y, const BitString& v,
                             size_t rows);
BitString CirculantHeadFft(const BitString& y, const BitString& v, size_t rows,
                           const FftOptions& options);

}  // namespace internal

}  // namespace privamp
