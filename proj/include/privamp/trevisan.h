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
#include <cstdint>
#include <span>
#include <vector>

#include "privamp/binary_field.h"
#include "privamp/extractor.h"
#include "privamp/weak_design.h"

namespace privamp {

/// One-bit extractor from a Reed-Solomon code concatenated with a Hadamard
/// code over GF(2^l). The seed is 2l bits: alpha = first l bits, beta = last
/// l bits. The input is cut into s = ceil(n/l) chunks of l bits, the final
/// chunk zero-padded on the right; chunk j (leftmost first) is the
/// coefficient of X^(s-1-j). Output is <p_x(alpha), beta> over GF(2).
class PolynomialOneBitExtractor {
 public:
  PolynomialOneBitExtractor(size_t input_length, size_t field_degree);

  size_t input_length() const { return n_; }
  size_t seed_length() const { return 2 * field_.degree(); }
  size_t field_degree() const { return field_.degree(); }
  size_t num_chunks() const { return chunks_; }
  const BinaryField& field() const { return field_; }

  bool Extract(const BitString& input, const BitString& seed) const;

  /// Input polynomial coefficients, highest degree first, packed
  /// words_per_element() words each. Reusable across seeds.
  std::vector<uint64_t> PrepareInput(const BitString& input) const;
  bool ExtractPrepared(const std::vector<uint64_t>& prepared,
                       const BitString& seed) const;
  /// Same as ExtractPrepared with alpha and beta already packed as field
  /// words. `scratch` needs words_per_element() words.
  bool EvaluatePacked(std::span<const uint64_t> prepared,
                      std::span<const uint64_t> alpha,
                      std::span<const uint64_t> beta,
                      std::span<uint64_t> scratch) const;

 private:
  size_t n_;
  BinaryField field_;
  size_t chunks_;
};

/// Trevisan's construction: output bit i is the one-bit extractor applied to
/// the input and to the seed bits indexed by S_i (ascending), i = 0..m-1
/// from left to right.
class TrevisanExtractor : public RandomnessExtractor {
 public:
  /// Finite-field polynomial design with set size t = one_bit_seed_length
  /// and a polynomial one-bit extractor over GF(2^(t/2)).
  TrevisanExtractor(size_t input_length, size_t output_length,
                    size_t one_bit_seed_length);
  TrevisanExtractor(WeakDesign design, PolynomialOneBitExtractor one_bit);

  size_t input_length() const override { return one_bit_.input_length(); }
  size_t seed_length() const override { return design_.universe_size(); }
  size_t output_length() const override { return design_.num_sets(); }
  std::string name() const override { return "TrevisanExtractor"; }
  ExtractorConfig config() const override;

  BitString Extract(const BitString& input,
                    const BitString& seed) const override;

  const WeakDesign& design() const { return design_; }
  const PolynomialOneBitExtractor& one_bit() const { return one_bit_; }

  /// Seed bits y_{S_i}, in ascending index order.
  BitString SubSeed(const BitString& seed, size_t i) const;

 private:
  WeakDesign design_;
  PolynomialOneBitExtractor one_bit_;
};

struct TrevisanParameters {
  size_t output_length = 0;
  size_t one_bit_seed_length = 0;  // t
  size_t field_degree = 0;         // l = t / 2
  size_t num_chunks = 0;           // s = ceil(n / l)
  uint64_t seed_length = 0;        // d = t^2
  uint32_t design_degree = 0;      // c, m <= t^(c+1)
  double r = kFiniteFieldDesignR;
  double source_entropy = 0.0;     // k
  double per_bit_error = 0.0;      // quantum-proof error of one output bit
  double classical_error = 0.0;    // one-bit error before the quantum lift
  double one_bit_entropy = 0.0;    // k_1
};

/// Largest m for which Trevisan with the finite-field design and the
/// polynomial one-bit extractor is a quantum-proof (k, error_bound)-strong
/// extractor, under these rules:
///   per-bit quantum error  e1 = error_bound / m
///   classical one-bit error ec with (1 + sqrt 2) sqrt(ec) = e1
///   field size             l >= log2(s) + 2 log2(1/ec)
///   one-bit entropy        k1 = l + 2 log2(1/ec) + log2(s)
///   composition            k >= k1 + r m,  r = 2e
/// Throws NoFeasibleOutput when even m = 1 fails.
TrevisanParameters CalculateTrevisanLength(size_t input_length,
                                           double relative_source_entropy,
                                           double error_bound,
                                           size_t one_bit_seed_length);

}  // namespace privamp
