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

#include "privamp/trevisan.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "privamp/error.h"
#include "privamp/galois_field.h"

namespace privamp {

namespace {

void CheckOneBitSeedLength(size_t t) {
  PRIVAMP_ENFORCE(t >= 2 && t % 2 == 0, ErrorCode::kInvalidRange,
                  "one-bit seed length must be even and at least 2, got " +
                      std::to_string(t));
  PRIVAMP_ENFORCE(t <= UINT32_MAX && FactorPrimePower(t).has_value(),
                  ErrorCode::kNotPrimePower,
                  "one-bit seed length " + std::to_string(t) +
                      " is not a prime power");
}

}  // namespace

PolynomialOneBitExtractor::PolynomialOneBitExtractor(size_t input_length,
                                                     size_t field_degree)
    : n_(input_length),
      field_(field_degree),
      chunks_((input_length + field_degree - 1) / field_degree) {
  PRIVAMP_ENFORCE(input_length >= 1, ErrorCode::kInvalidRange,
                  "input length must be positive");
}

std::vector<uint64_t> PolynomialOneBitExtractor::PrepareInput(
    const BitString& input) const {
  PRIVAMP_ENFORCE(input.size() == n_, ErrorCode::kLengthMismatch,
                  "input must have " + std::to_string(n_) + " bits, got " +
                      std::to_string(input.size()));
  const size_t l = field_.degree();
  const size_t nw = field_.words_per_element();
  std::vector<uint64_t> out(chunks_ * nw, 0);
  for (size_t j = 0; j < chunks_; ++j) {
    const size_t begin = j * l;
    const size_t avail = std::min(l, n_ - begin);
    uint64_t* w = out.data() + j * nw;
    // Chunk bit i is the coefficient of X^(l-1-i); padding bits stay zero.
    for (size_t i = 0; i < avail; ++i) {
      if (input.Get(begin + i)) {
        const size_t k = l - 1 - i;
        w[k >> 6] |= uint64_t{1} << (k & 63);
      }
    }
  }
  return out;
}

bool PolynomialOneBitExtractor::ExtractPrepared(
    const std::vector<uint64_t>& prepared, const BitString& seed) const {
  const size_t l = field_.degree();
  PRIVAMP_ENFORCE(seed.size() == 2 * l, ErrorCode::kLengthMismatch,
                  "one-bit seed must have " + std::to_string(2 * l) +
                      " bits, got " + std::to_string(seed.size()));
  const BinaryFieldElement alpha = field_.FromBits(seed.Slice(0, l));
  const BinaryFieldElement beta = field_.FromBits(seed.Slice(l, l));
  std::vector<uint64_t> acc(field_.words_per_element());
  return EvaluatePacked(prepared, alpha.words(), beta.words(), acc);
}

bool PolynomialOneBitExtractor::EvaluatePacked(
    std::span<const uint64_t> prepared, std::span<const uint64_t> alpha,
    std::span<const uint64_t> beta, std::span<uint64_t> scratch) const {
  const size_t nw = field_.words_per_element();
  // Horner from the leading coefficient (leftmost chunk) down.
  std::fill(scratch.begin(), scratch.end(), 0);
  for (size_t j = 0; j < chunks_; ++j) {
    field_.MulAdd(scratch, alpha, prepared.subspan(j * nw, nw));
  }
  uint64_t dot = 0;
  for (size_t w = 0; w < nw; ++w) dot ^= scratch[w] & beta[w];
  return std::popcount(dot) & 1;
}

bool PolynomialOneBitExtractor::Extract(const BitString& input,
                                        const BitString& seed) const {
  return ExtractPrepared(PrepareInput(input), seed);
}

TrevisanExtractor::TrevisanExtractor(size_t input_length, size_t output_length,
                                     size_t one_bit_seed_length)
    : TrevisanExtractor(
          [&] {
            CheckOneBitSeedLength(one_bit_seed_length);
            return FiniteFieldPolynomialDesign::Generate(
                output_length, static_cast<uint32_t>(one_bit_seed_length));
          }(),
          PolynomialOneBitExtractor(input_length, one_bit_seed_length / 2)) {}

TrevisanExtractor::TrevisanExtractor(WeakDesign design,
                                     PolynomialOneBitExtractor one_bit)
    : design_(std::move(design)), one_bit_(std::move(one_bit)) {
  PRIVAMP_ENFORCE(design_.set_size() == one_bit_.seed_length(),
                  ErrorCode::kConfigError,
                  "design set size " + std::to_string(design_.set_size()) +
                      " differs from one-bit seed length " +
                      std::to_string(one_bit_.seed_length()));
  PRIVAMP_ENFORCE(design_.num_sets() >= 1, ErrorCode::kInvalidRange,
                  "output length must be positive");
}

ExtractorConfig TrevisanExtractor::config() const {
  return {ExtractorKind::kTrevisan, input_length(), output_length(),
          one_bit_.seed_length()};
}

BitString TrevisanExtractor::SubSeed(const BitString& seed, size_t i) const {
  const auto& s = design_.set(i);
  BitString sub(s.size());
  for (size_t k = 0; k < s.size(); ++k) {
    if (seed.Get(s[k])) sub.Set(k, true);
  }
  return sub;
}

BitString TrevisanExtractor::Extract(const BitString& input,
                                     const BitString& seed) const {
  CheckLengths(input, seed);
  const std::vector<uint64_t> prepared = one_bit_.PrepareInput(input);
  const size_t l = one_bit_.field_degree();
  const size_t nw = (l + 63) / 64;
  std::vector<uint64_t> buf(3 * nw);
  const std::span<uint64_t> alpha(buf.data(), nw), beta(buf.data() + nw, nw),
      scratch(buf.data() + 2 * nw, nw);
  BitString out(output_length());
  for (size_t i = 0; i < output_length(); ++i) {
    const auto& s = design_.set(i);
    std::fill(buf.begin(), buf.begin() + 2 * nw, 0);
    for (size_t k = 0; k < l; ++k) {
      const size_t c = l - 1 - k;
      if (seed.Get(s[k])) alpha[c >> 6] |= uint64_t{1} << (c & 63);
      if (seed.Get(s[l + k])) beta[c >> 6] |= uint64_t{1} << (c & 63);
    }
    if (one_bit_.EvaluatePacked(prepared, alpha, beta, scratch)) {
      out.Set(i, true);
    }
  }
  return out;
}

namespace {

struct Feasibility {
  bool ok;
  TrevisanParameters params;
};

Feasibility Evaluate(size_t m, size_t n, double k, double error_bound,
                     size_t t) {
  TrevisanParameters p;
  p.output_length = m;
  p.one_bit_seed_length = t;
  p.field_degree = t / 2;
  p.num_chunks = (n + p.field_degree - 1) / p.field_degree;
  p.seed_length = uint64_t{t} * t;
  p.source_entropy = k;
  uint32_t c = 0;
  for (uint64_t reach = t; reach < m && reach <= UINT64_MAX / t; reach *= t) {
    ++c;
  }
  p.design_degree = c;

  p.per_bit_error = error_bound / static_cast<double>(m);
  const double lift = 1.0 + std::sqrt(2.0);
  p.classical_error = std::pow(p.per_bit_error / lift, 2.0);
  // log2(1/ec) computed from logs to stay finite for tiny errors.
  const double log_inv_ec =
      2.0 * (std::log2(lift) - std::log2(p.per_bit_error));
  const double log_s = std::log2(static_cast<double>(p.num_chunks));
  p.one_bit_entropy =
      static_cast<double>(p.field_degree) + 2.0 * log_inv_ec + log_s;

  const bool field_ok =
      static_cast<double>(p.field_degree) >= log_s + 2.0 * log_inv_ec;
  const bool entropy_ok =
      k >= p.one_bit_entropy + p.r * static_cast<double>(m);
  return {field_ok && entropy_ok, p};
}

}  // namespace

TrevisanParameters CalculateTrevisanLength(size_t input_length,
                                           double relative_source_entropy,
                                           double error_bound,
                                           size_t one_bit_seed_length) {
  PRIVAMP_ENFORCE(input_length >= 1, ErrorCode::kInvalidRange,
                  "input length must be positive");
  PRIVAMP_ENFORCE(relative_source_entropy > 0.0 &&
                      relative_source_entropy <= 1.0,
                  ErrorCode::kInvalidRange,
                  "relative source entropy must lie in (0, 1]");
  PRIVAMP_ENFORCE(error_bound > 0.0 && error_bound < 1.0,
                  ErrorCode::kInvalidRange, "error bound must lie in (0, 1)");
  CheckOneBitSeedLength(one_bit_seed_length);

  const size_t t = one_bit_seed_length;
  const double k = relative_source_entropy * static_cast<double>(input_length);

  // Feasibility is monotone in m, so binary search the largest feasible m.
  size_t hi = static_cast<size_t>(k / kFiniteFieldDesignR);
  if (t < 16) {
    uint64_t cap = 1;
    for (size_t i = 0; i < t; ++i) cap *= t;
    hi = std::min<size_t>(hi, cap);
  }
  Feasibility first = Evaluate(1, input_length, k, error_bound, t);
  PRIVAMP_ENFORCE(hi >= 1 && first.ok, ErrorCode::kNoFeasibleOutput,
                  "no output length satisfies the entropy (k = " +
                      std::to_string(k) + ") and error requirements with t = " +
                      std::to_string(t));
  size_t lo = 1;
  TrevisanParameters best = first.params;
  while (lo < hi) {
    size_t mid = lo + (hi - lo + 1) / 2;
    Feasibility f = Evaluate(mid, input_length, k, error_bound, t);
    if (f.ok) {
      lo = mid;
      best = f.params;
    } else {
      hi = mid - 1;
    }
  }
  return best;
}

}  // namespace privamp
