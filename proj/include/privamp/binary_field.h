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

#include "privamp/bitstring.h"

namespace privamp {

/// Element of GF(2^l): bit k of the packed words is the coefficient of X^k.
class BinaryFieldElement {
 public:
  BinaryFieldElement() = default;
  BinaryFieldElement(size_t degree, std::vector<uint64_t> words)
      : degree_(degree), words_(std::move(words)) {}

  size_t degree() const { return degree_; }
  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> mutable_words() { return words_; }
  bool IsZero() const;

  friend bool operator==(const BinaryFieldElement&,
                         const BinaryFieldElement&) = default;

 private:
  size_t degree_ = 0;
  std::vector<uint64_t> words_;
};

/// GF(2^l) for arbitrary l >= 1, reduced modulo the lexicographically least
/// irreducible polynomial X^l + r(X) of degree l (smallest r as an integer).
/// For l = 1 that is X itself; for l = 2 it is X^2 + X + 1 and for l = 8 it
/// is X^8 + X^4 + X^3 + X + 1.
class BinaryField {
 public:
  explicit BinaryField(size_t degree);

  size_t degree() const { return degree_; }
  /// r(X) in f = X^l + r(X), as a bit pattern.
  uint64_t modulus_tail() const { return tail_; }

  BinaryFieldElement Zero() const;
  BinaryFieldElement One() const;
  /// Requires degree() <= 64.
  BinaryFieldElement FromUint(uint64_t value) const;
  uint64_t ToUint(const BinaryFieldElement& e) const;

  /// Interprets an l-bit chunk with its leftmost bit as the coefficient of
  /// X^(l-1), so the chunk "01" is the element 1 and "10" is X.
  BinaryFieldElement FromBits(const BitString& chunk) const;
  BitString ToBits(const BinaryFieldElement& e) const;

  BinaryFieldElement Add(const BinaryFieldElement& a,
                         const BinaryFieldElement& b) const;
  BinaryFieldElement Mul(const BinaryFieldElement& a,
                         const BinaryFieldElement& b) const;

  /// Horner evaluation with ascending coefficients (coeffs[0] is constant).
  BinaryFieldElement EvalPoly(std::span<const BinaryFieldElement> coeffs,
                              const BinaryFieldElement& point) const;

  /// acc <- acc * point + addend, all given as packed words of this field.
  void MulAdd(std::span<uint64_t> acc, std::span<const uint64_t> point,
              std::span<const uint64_t> addend) const;

  size_t words_per_element() const { return nwords_; }

 private:
  void Check(const BinaryFieldElement& e) const;
  void MulWords(std::span<const uint64_t> a, std::span<const uint64_t> b,
                std::span<uint64_t> out) const;

  size_t degree_;
  size_t nwords_;
  uint64_t tail_;
};

/// Tail r(X) of the least irreducible X^l + r(X). Cached per degree.
uint64_t LeastIrreducibleTail(size_t degree);

}  // namespace privamp
