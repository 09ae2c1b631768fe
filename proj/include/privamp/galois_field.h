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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace privamp {

struct PrimePower {
  uint32_t prime;
  uint32_t exponent;
};

/// p^k decomposition of q, or nullopt when q is not a prime power.
std::optional<PrimePower> FactorPrimePower(uint64_t q);

/// An element of a GaloisField. The value is the canonical representative:
/// the integer itself for prime fields, and for GF(p^k) the integer whose
/// base-p digits are the polynomial coefficients (digit i is the coefficient
/// of X^i). For p = 2 this is the bit pattern of the polynomial.
struct FieldElement {
  uint32_t field_order = 0;
  uint32_t value = 0;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// GF(q) for small prime powers q (q <= 2^20).
///
/// Extension fields use the lexicographically least monic irreducible
/// polynomial of degree k over GF(p), where polynomials are ordered by the
/// integer value of their base-p digit encoding. Multiplication is a true
/// polynomial product followed by reduction; addition is digit-wise mod p.
class GaloisField {
 public:
  static constexpr uint32_t kMaxOrder = 1U << 20;

  explicit GaloisField(uint32_t order);

  uint32_t order() const { return order_; }
  uint32_t characteristic() const { return prime_; }
  uint32_t degree() const { return degree_; }
  /// Monic modulus, coefficient of X^i at index i (size degree()+1).
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FieldElement Element(uint32_t value) const;
  FieldElement Zero() const { return {order_, 0}; }
  FieldElement One() const { return {order_, 1}; }

  FieldElement Add(FieldElement a, FieldElement b) const;
  FieldElement Sub(FieldElement a, FieldElement b) const;
  FieldElement Mul(FieldElement a, FieldElement b) const;

  /// Horner evaluation. coeffs[0] is the constant term and coeffs[k] the
  /// coefficient of X^k (ascending order).
  FieldElement EvalPoly(std::span<const FieldElement> coeffs,
                        FieldElement point) const;

  // Unchecked arithmetic on canonical representatives.
  uint32_t AddValues(uint32_t a, uint32_t b) const;
  uint32_t SubValues(uint32_t a, uint32_t b) const;
  uint32_t MulValues(uint32_t a, uint32_t b) const;

 private:
  void Check(FieldElement e) const;

  uint32_t order_;
  uint32_t prime_;
  uint32_t degree_;
  std::vector<uint32_t> modulus_;
  // For p == 2: the modulus bit pattern without the leading term.
  uint32_t binary_tail_ = 0;
};

}  // namespace privamp
