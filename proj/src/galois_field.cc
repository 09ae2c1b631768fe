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

#include "privamp/galois_field.h"

#include <string>

#include "privamp/error.h"

namespace privamp {

namespace {

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

using Poly = std::vector<uint32_t>;  // ascending coefficients mod p

void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly FromDigits(uint64_t v, uint32_t p) {
  Poly out;
  while (v != 0) {
    out.push_back(static_cast<uint32_t>(v % p));
    v /= p;
  }
  return out;
}

uint64_t ToDigits(const Poly& a, uint32_t p) {
  uint64_t v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

uint32_t InvMod(uint32_t a, uint32_t p) {
  // p is prime, so a^(p-2).
  uint64_t result = 1, base = a % p;
  for (uint32_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<uint32_t>(result);
}

// Remainder of a modulo b (b non-zero).
Poly PolyMod(Poly a, const Poly& b, uint32_t p) {
  Trim(a);
  const size_t db = b.size() - 1;
  const uint64_t inv_lead = InvMod(b.back(), p);
  while (a.size() >= b.size()) {
    uint64_t factor = a.back() * inv_lead % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i <= db; ++i) {
      uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
    }
    Trim(a);
  }
  return a;
}

bool IsIrreducible(const Poly& f, uint32_t p) {
  const size_t deg = f.size() - 1;
  // Any reducible f has a monic factor of degree <= deg / 2.
  for (size_t d = 1; d <= deg / 2; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t low = 0; low < count; ++low) {
      Poly g = FromDigits(low, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (PolyMod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly LeastIrreducible(uint32_t p, uint32_t k) {
  uint64_t lead = 1;
  for (uint32_t i = 0; i < k; ++i) lead *= p;
  for (uint64_t low = 0; low < lead; ++low) {
    Poly f = FromDigits(low, p);
    f.resize(k + 1, 0);
    f[k] = 1;
    if (IsIrreducible(f, p)) return f;
  }
  Throw(ErrorCode::kInvalidRange, "no irreducible polynomial found");
}

}  // namespace

std::optional<PrimePower> FactorPrimePower(uint64_t q) {
  if (q < 2) return std::nullopt;
  uint64_t p = 2;
  while (q % p != 0) {
    if (p * p > q) {
      p = q;
      break;
    }
    ++p;
  }
  if (!IsPrime(p)) return std::nullopt;
  uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{static_cast<uint32_t>(p), k};
}

GaloisField::GaloisField(uint32_t order) : order_(order) {
  auto pk = FactorPrimePower(order);
  PRIVAMP_ENFORCE(pk.has_value(), ErrorCode::kNotPrimePower,
                  std::to_string(order) + " is not a prime power");
  PRIVAMP_ENFORCE(order <= kMaxOrder, ErrorCode::kInvalidRange,
                  "field order " + std::to_string(order) + " exceeds 2^20");
  prime_ = pk->prime;
  degree_ = pk->exponent;
  if (degree_ == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = LeastIrreducible(prime_, degree_);
  }
  if (prime_ == 2 && degree_ > 1) {
    binary_tail_ = static_cast<uint32_t>(ToDigits(modulus_, 2)) ^ order_;
  }
}

void GaloisField::Check(FieldElement e) const {
  PRIVAMP_ENFORCE(e.field_order == order_, ErrorCode::kFieldMismatch,
                  "element of GF(" + std::to_string(e.field_order) +
                      ") used with GF(" + std::to_string(order_) + ")");
}

FieldElement GaloisField::Element(uint32_t value) const {
  PRIVAMP_ENFORCE(value < order_, ErrorCode::kInvalidRange,
                  std::to_string(value) + " is not a representative of GF(" +
                      std::to_string(order_) + ")");
  return {order_, value};
}

uint32_t GaloisField::AddValues(uint32_t a, uint32_t b) const {
  if (degree_ == 1) return static_cast<uint32_t>((uint64_t{a} + b) % prime_);
  if (prime_ == 2) return a ^ b;
  uint32_t result = 0, scale = 1;
  while (a != 0 || b != 0) {
    result += ((a % prime_ + b % prime_) % prime_) * scale;
    a /= prime_;
    b /= prime_;
    scale *= prime_;
  }
  return result;
}

uint32_t GaloisField::SubValues(uint32_t a, uint32_t b) const {
  if (degree_ == 1) return (a + prime_ - b) % prime_;
  if (prime_ == 2) return a ^ b;
  uint32_t result = 0, scale = 1;
  while (a != 0 || b != 0) {
    result += ((a % prime_ + prime_ - b % prime_) % prime_) * scale;
    a /= prime_;
    b /= prime_;
    scale *= prime_;
  }
  return result;
}

uint32_t GaloisField::MulValues(uint32_t a, uint32_t b) const {
  if (degree_ == 1) {
    return static_cast<uint32_t>(uint64_t{a} * b % prime_);
  }
  if (prime_ == 2) {
    // Carry-less product, then fold the bits at and above X^degree.
    uint64_t prod = 0;
    for (uint32_t i = 0; i < degree_; ++i) {
      if ((b >> i) & 1U) prod ^= uint64_t{a} << i;
    }
    for (uint32_t bit = 2 * degree_ - 1; bit-- > degree_;) {
      if ((prod >> bit) & 1U) {
        prod ^= uint64_t{1} << bit;
        prod ^= uint64_t{binary_tail_} << (bit - degree_);
      }
    }
    return static_cast<uint32_t>(prod);
  }
  Poly pa = FromDigits(a, prime_), pb = FromDigits(b, prime_);
  if (pa.empty() || pb.empty()) return 0;
  Poly prod(pa.size() + pb.size() - 1, 0);
  for (size_t i = 0; i < pa.size(); ++i) {
    for (size_t j = 0; j < pb.size(); ++j) {
      prod[i + j] = static_cast<uint32_t>(
          (prod[i + j] + uint64_t{pa[i]} * pb[j]) % prime_);
    }
  }
  return static_cast<uint32_t>(ToDigits(PolyMod(prod, modulus_, prime_), prime_));
}

FieldElement GaloisField::Add(FieldElement a, FieldElement b) const {
  Check(a);
  Check(b);
  return {order_, AddValues(a.value, b.value)};
}

FieldElement GaloisField::Sub(FieldElement a, FieldElement b) const {
  Check(a);
  Check(b);
  return {order_, SubValues(a.value, b.value)};
}

FieldElement GaloisField::Mul(FieldElement a, FieldElement b) const {
  Check(a);
  Check(b);
  return {order_, MulValues(a.value, b.value)};
}

FieldElement GaloisField::EvalPoly(std::span<const FieldElement> coeffs,
                                   FieldElement point) const {
  Check(point);
  uint32_t acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    Check(coeffs[i]);
    acc = AddValues(MulValues(acc, point.value), coeffs[i].value);
  }
  return {order_, acc};
}

}  // namespace privamp
