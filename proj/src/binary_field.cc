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

#include "privamp/binary_field.h"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <string>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

#include "privamp/error.h"

namespace privamp {

namespace {

using Words = std::vector<uint64_t>;

void ClmulPortable(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
  lo = 0;
  hi = 0;
  for (unsigned i = 0; i < 64; ++i) {
    uint64_t mask = -((b >> i) & 1U);
    lo ^= (a << i) & mask;
    if (i != 0) hi ^= (a >> (64 - i)) & mask;
  }
}

#if defined(__x86_64__)
__attribute__((target("pclmul,sse2"))) void ClmulHw(uint64_t a, uint64_t b,
                                                     uint64_t& lo,
                                                     uint64_t& hi) {
  __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
  __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
  __m128i r = _mm_clmulepi64_si128(va, vb, 0x00);
  lo = static_cast<uint64_t>(_mm_cvtsi128_si64(r));
  hi = static_cast<uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)));
}

bool HasClmul() {
  static const bool has = __builtin_cpu_supports("pclmul");
  return has;
}
#endif

inline void Clmul(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
#if defined(__x86_64__)
  if (HasClmul()) {
    ClmulHw(a, b, lo, hi);
    return;
  }
#endif
  ClmulPortable(a, b, lo, hi);
}

// out (size a.size() + b.size()) = a * b over GF(2)[X].
void PolyMulWords(std::span<const uint64_t> a, std::span<const uint64_t> b,
                  std::span<uint64_t> out) {
  std::fill(out.begin(), out.end(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t lo, hi;
      Clmul(a[i], b[j], lo, hi);
      out[i + j] ^= lo;
      out[i + j + 1] ^= hi;
    }
  }
}

// Reduces `poly` in place modulo X^degree + tail, leaving the remainder in the
// low words. `poly` must have room for one extra word of fold carry.
void ReduceInPlace(std::span<uint64_t> poly, size_t degree, uint64_t tail) {
  const size_t nwords = (degree + 63) / 64;
  const unsigned shift = degree & 63;
  const size_t base = degree >> 6;
  Words high;
  for (;;) {
    // high = poly >> degree
    size_t top = poly.size();
    while (top > 0 && poly[top - 1] == 0) --top;
    if (top * 64 <= degree) break;
    size_t hwords = top - base;
    high.assign(hwords, 0);
    for (size_t w = 0; w < hwords; ++w) {
      uint64_t lo = poly[base + w];
      uint64_t hi = base + w + 1 < top ? poly[base + w + 1] : 0;
      high[w] = shift == 0 ? lo : (lo >> shift) | (hi << (64 - shift));
    }
    if (high.back() == 0 && hwords > 1) high.pop_back();
    bool any = std::any_of(high.begin(), high.end(),
                           [](uint64_t w) { return w != 0; });
    // poly <- poly mod X^degree
    for (size_t w = base + 1; w < poly.size(); ++w) poly[w] = 0;
    if (base < poly.size()) {
      poly[base] &= shift == 0 ? 0 : (uint64_t{1} << shift) - 1;
    }
    if (!any) break;
    // poly ^= high * tail
    for (size_t w = 0; w < high.size(); ++w) {
      uint64_t lo, hi;
      Clmul(high[w], tail, lo, hi);
      poly[w] ^= lo;
      if (w + 1 < poly.size()) poly[w + 1] ^= hi;
    }
  }
  (void)nwords;
}

// --- irreducibility -------------------------------------------------------

int Degree(const Words& a) {
  for (size_t w = a.size(); w-- > 0;) {
    if (a[w] != 0) return static_cast<int>(w * 64 + 63 - std::countl_zero(a[w]));
  }
  return -1;
}

// a <- a mod b over GF(2)[X]
void PolyModInPlace(Words& a, const Words& b) {
  const int db = Degree(b);
  for (int da = Degree(a); da >= db; da = Degree(a)) {
    const int s = da - db;
    const size_t ws = s >> 6;
    const unsigned bs = s & 63;
    for (size_t w = 0; w < b.size(); ++w) {
      if (b[w] == 0) continue;
      a[w + ws] ^= b[w] << bs;
      if (bs != 0 && w + ws + 1 < a.size()) a[w + ws + 1] ^= b[w] >> (64 - bs);
    }
  }
}

bool GcdIsOne(Words a, Words b) {
  while (Degree(b) >= 0) {
    PolyModInPlace(a, b);
    std::swap(a, b);
  }
  return Degree(a) == 0;
}

uint64_t SmallPolyMulMod(uint64_t a, uint64_t b, uint64_t g, int dg) {
  uint64_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> dg) & 1U) a ^= g;
  }
  return r;
}

// X^e mod g for a small polynomial g of degree dg <= 31.
uint64_t SmallPowX(size_t e, uint64_t g, int dg) {
  uint64_t result = 1, base = dg == 1 ? (2 ^ g) : 2;
  while (e != 0) {
    if (e & 1U) result = SmallPolyMulMod(result, base, g, dg);
    base = SmallPolyMulMod(base, base, g, dg);
    e >>= 1;
  }
  return result;
}

uint64_t SmallMod(uint64_t a, uint64_t g, int dg) {
  for (int d = 63; d >= dg; --d) {
    if ((a >> d) & 1U) a ^= g << (d - dg);
  }
  return a;
}

const std::vector<std::pair<uint64_t, int>>& SmallIrreducibles() {
  static const std::vector<std::pair<uint64_t, int>> table = [] {
    std::vector<std::pair<uint64_t, int>> out;
    constexpr int kMaxDeg = 12;
    for (int d = 1; d <= kMaxDeg; ++d) {
      for (uint64_t g = uint64_t{1} << d; g < (uint64_t{2} << d); ++g) {
        bool irreducible = true;
        for (const auto& [h, dh] : out) {
          if (2 * dh > d) break;
          if (SmallMod(g, h, dh) == 0) {
            irreducible = false;
            break;
          }
        }
        if (irreducible) out.emplace_back(g, d);
      }
    }
    return out;
  }();
  return table;
}

std::vector<size_t> PrimeFactors(size_t n) {
  std::vector<size_t> out;
  for (size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's test for f = X^degree + tail.
bool IsIrreducibleLarge(size_t degree, uint64_t tail) {
  if (degree <= 12) {
    uint64_t f = (uint64_t{1} << degree) | tail;
    for (const auto& [h, dh] : SmallIrreducibles()) {
      if (2 * static_cast<size_t>(dh) > degree) break;
      if (SmallMod(f, h, dh) == 0) return false;
    }
    return true;
  }
  // Cheap sieve: f mod g == (X^degree mod g) + (tail mod g).
  for (const auto& [g, dg] : SmallIrreducibles()) {
    if (2 * static_cast<size_t>(dg) > degree) break;
    if ((SmallPowX(degree, g, dg) ^ SmallMod(tail, g, dg)) == 0) return false;
  }
  const size_t nwords = (degree + 63) / 64;
  Words f(nwords + 1, 0);
  f[0] = tail;
  f[degree >> 6] |= uint64_t{1} << (degree & 63);

  // X^(2^i) mod f; keep only the exponents the test needs.
  const std::vector<size_t> factors = PrimeFactors(degree);
  std::map<size_t, Words> kept;
  for (size_t p : factors) kept[degree / p];
  Words x(nwords, 0);
  x[0] = 2;
  Words cur = x, prod(2 * nwords + 1, 0);
  for (size_t i = 1; i <= degree; ++i) {
    std::fill(prod.begin(), prod.end(), 0);
    PolyMulWords(cur, cur, std::span(prod).first(2 * nwords));
    ReduceInPlace(prod, degree, tail);
    std::copy(prod.begin(), prod.begin() + nwords, cur.begin());
    if (auto it = kept.find(i); it != kept.end()) it->second = cur;
  }
  if (cur != x) return false;
  for (size_t p : factors) {
    Words g = kept[degree / p];
    g[0] ^= 2;
    g.push_back(0);
    if (!GcdIsOne(f, g)) return false;
  }
  return true;
}

}  // namespace

uint64_t LeastIrreducibleTail(size_t degree) {
  PRIVAMP_ENFORCE(degree >= 1, ErrorCode::kInvalidRange,
                  "binary field degree must be positive");
  static std::mutex mu;
  static std::map<size_t, uint64_t> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;
  }
  uint64_t found = 0;
  if (degree == 1) {
    found = 0;  // f = X
  } else {
    // Constant term must be 1 and f(1) = 1, i.e. tail is odd with even weight.
    bool ok = false;
    for (uint64_t tail = 1; tail != 0; tail += 2) {
      if (degree < 64 && tail >= (uint64_t{1} << degree)) break;
      if (std::popcount(tail) % 2 != 0) continue;
      if (IsIrreducibleLarge(degree, tail)) {
        found = tail;
        ok = true;
        break;
      }
    }
    PRIVAMP_ENFORCE(ok, ErrorCode::kInvalidRange,
                    "no irreducible polynomial of degree " +
                        std::to_string(degree) + " with a 64-bit tail");
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(degree, found);
  return found;
}

bool BinaryFieldElement::IsZero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](uint64_t w) { return w == 0; });
}

BinaryField::BinaryField(size_t degree)
    : degree_(degree),
      nwords_((degree + 63) / 64),
      tail_(LeastIrreducibleTail(degree)) {}

void BinaryField::Check(const BinaryFieldElement& e) const {
  PRIVAMP_ENFORCE(e.degree() == degree_ && e.words().size() == nwords_,
                  ErrorCode::kFieldMismatch,
                  "element of GF(2^" + std::to_string(e.degree()) +
                      ") used with GF(2^" + std::to_string(degree_) + ")");
}

BinaryFieldElement BinaryField::Zero() const {
  return BinaryFieldElement(degree_, Words(nwords_, 0));
}

BinaryFieldElement BinaryField::One() const {
  Words w(nwords_, 0);
  w[0] = 1;
  return BinaryFieldElement(degree_, std::move(w));
}

BinaryFieldElement BinaryField::FromUint(uint64_t value) const {
  PRIVAMP_ENFORCE(degree_ <= 64 && (degree_ == 64 || value >> degree_ == 0),
                  ErrorCode::kInvalidRange,
                  "value does not fit in GF(2^" + std::to_string(degree_) + ")");
  Words w(nwords_, 0);
  w[0] = value;
  return BinaryFieldElement(degree_, std::move(w));
}

uint64_t BinaryField::ToUint(const BinaryFieldElement& e) const {
  Check(e);
  PRIVAMP_ENFORCE(degree_ <= 64, ErrorCode::kInvalidRange,
                  "element wider than 64 bits");
  return e.words()[0];
}

BinaryFieldElement BinaryField::FromBits(const BitString& chunk) const {
  PRIVAMP_ENFORCE(chunk.size() == degree_, ErrorCode::kLengthMismatch,
                  "chunk of " + std::to_string(chunk.size()) +
                      " bits for GF(2^" + std::to_string(degree_) + ")");
  Words w(nwords_, 0);
  for (size_t i = 0; i < degree_; ++i) {
    if (chunk.Get(i)) {
      size_t k = degree_ - 1 - i;
      w[k >> 6] |= uint64_t{1} << (k & 63);
    }
  }
  return BinaryFieldElement(degree_, std::move(w));
}

BitString BinaryField::ToBits(const BinaryFieldElement& e) const {
  Check(e);
  BitString out(degree_);
  auto w = e.words();
  for (size_t k = 0; k < degree_; ++k) {
    if ((w[k >> 6] >> (k & 63)) & 1U) out.Set(degree_ - 1 - k, true);
  }
  return out;
}

BinaryFieldElement BinaryField::Add(const BinaryFieldElement& a,
                                    const BinaryFieldElement& b) const {
  Check(a);
  Check(b);
  Words w(nwords_);
  for (size_t i = 0; i < nwords_; ++i) w[i] = a.words()[i] ^ b.words()[i];
  return BinaryFieldElement(degree_, std::move(w));
}

void BinaryField::MulWords(std::span<const uint64_t> a,
                           std::span<const uint64_t> b,
                           std::span<uint64_t> out) const {
  thread_local Words prod;
  prod.assign(2 * nwords_ + 1, 0);
  PolyMulWords(a, b, std::span(prod).first(2 * nwords_));
  ReduceInPlace(prod, degree_, tail_);
  std::copy(prod.begin(), prod.begin() + nwords_, out.begin());
}

BinaryFieldElement BinaryField::Mul(const BinaryFieldElement& a,
                                    const BinaryFieldElement& b) const {
  Check(a);
  Check(b);
  Words w(nwords_);
  MulWords(a.words(), b.words(), w);
  return BinaryFieldElement(degree_, std::move(w));
}

void BinaryField::MulAdd(std::span<uint64_t> acc,
                         std::span<const uint64_t> point,
                         std::span<const uint64_t> addend) const {
  MulWords(acc, point, acc);
  for (size_t i = 0; i < nwords_; ++i) acc[i] ^= addend[i];
}

BinaryFieldElement BinaryField::EvalPoly(
    std::span<const BinaryFieldElement> coeffs,
    const BinaryFieldElement& point) const {
  Check(point);
  BinaryFieldElement acc = Zero();
  for (size_t i = coeffs.size(); i-- > 0;) {
    Check(coeffs[i]);
    MulAdd(acc.mutable_words(), point.words(), coeffs[i].words());
  }
  return acc;
}

}  // namespace privamp
