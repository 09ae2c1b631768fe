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

#include "privamp/toeplitz.h"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "privamp/error.h"

namespace privamp {

size_t CalculateLength(SecurityModel model, size_t input_length,
                       double relative_source_entropy, double error_bound) {
  (void)model;  // both models share the leftover-hash bound
  PRIVAMP_ENFORCE(input_length >= 1, ErrorCode::kInvalidRange,
                  "input length must be positive");
  PRIVAMP_ENFORCE(relative_source_entropy > 0.0 &&
                      relative_source_entropy <= 1.0,
                  ErrorCode::kInvalidRange,
                  "relative source entropy must lie in (0, 1]");
  PRIVAMP_ENFORCE(error_bound > 0.0 && error_bound < 1.0,
                  ErrorCode::kInvalidRange, "error bound must lie in (0, 1)");

  const long double n = static_cast<long double>(input_length);
  long double k = static_cast<long double>(relative_source_entropy) * n;
  bool exact = std::fma(static_cast<long double>(relative_source_entropy), n,
                        -k) == 0.0L;
  if (!exact) k = std::nextafter(k, 0.0L);

  int exponent = 0;
  const bool power_of_two = std::frexp(error_bound, &exponent) == 0.5;
  long double penalty = -2.0L * std::log2(static_cast<long double>(error_bound));
  if (!power_of_two) {
    penalty = std::nextafter(std::nextafter(penalty, INFINITY), INFINITY);
    exact = false;
  }

  long double bound = k + 2.0L - penalty;
  if (!exact) bound = std::nextafter(bound, -INFINITY);
  if (!(bound > 0.0L)) return 0;
  long double m = std::floor(bound);
  if (m >= n) return input_length;
  return static_cast<size_t>(m);
}

namespace internal {

BitString CirculantHeadExact(const BitString& y, const BitString& v,
                             size_t rows) {
  const size_t q = y.size();
  const size_t len = v.size();
  PRIVAMP_ENFORCE(len <= q && rows <= q, ErrorCode::kDimensionMismatch,
                  "circulant product larger than its seed");
  // ww = w || w with w[k] = y[-k mod q]; row i is ww[(q - i) mod q, +len).
  BitString ww(2 * q);
  for (size_t k = 0; k < q; ++k) {
    if (y.Get((q - k) % q)) {
      ww.Set(k, true);
      ww.Set(q + k, true);
    }
  }
  BitString out(rows);
  std::vector<uint64_t> row(BitString::WordsFor(len));
  auto vw = v.words();
  for (size_t i = 0; i < rows; ++i) {
    CopyBitWindow(ww.words(), (q - i) % q, len, row);
    uint64_t acc = 0;
    for (size_t w = 0; w < row.size(); ++w) acc ^= row[w] & vw[w];
    if (std::popcount(acc) & 1) out.Set(i, true);
  }
  return out;
}

namespace {

struct FftwDeleter {
  void operator()(void* p) const { fftw_free(p); }
};
template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwDeleter>;

struct PlanPair {
  fftw_plan forward;
  fftw_plan backward;
};

// The FFTW planner is not thread-safe; executing an existing plan on fresh
// arrays is.
PlanPair GetPlans(size_t n) {
  static std::mutex mu;
  static std::map<size_t, PlanPair> plans;
  std::lock_guard<std::mutex> lock(mu);
  auto it = plans.find(n);
  if (it != plans.end()) return it->second;
  const size_t nc = n / 2 + 1;
  FftwBuffer<double> r(fftw_alloc_real(n));
  FftwBuffer<fftw_complex> c(fftw_alloc_complex(nc));
  const int ni = static_cast<int>(n);
  PlanPair p{
      fftw_plan_dft_r2c_1d(ni, r.get(), c.get(), FFTW_ESTIMATE),
      fftw_plan_dft_c2r_1d(ni, c.get(), r.get(), FFTW_ESTIMATE),
  };
  plans.emplace(n, p);
  return p;
}

}  // namespace

BitString CirculantHeadFft(const BitString& y, const BitString& v, size_t rows,
                           const FftOptions& options) {
  const size_t q = y.size();
  const size_t len = v.size();
  PRIVAMP_ENFORCE(len <= q && rows <= q, ErrorCode::kDimensionMismatch,
                  "circulant product larger than its seed");
  if (rows == 0) return BitString(0);
  if (len == 0) return BitString(rows);

  // Linear convolution of y and v, folded mod q for the circular product.
  const size_t lin_len = q + len - 1;
  const size_t n = std::bit_ceil(lin_len);
  const size_t nc = n / 2 + 1;
  const PlanPair plans = GetPlans(n);

  FftwBuffer<double> a(fftw_alloc_real(n)), b(fftw_alloc_real(n));
  FftwBuffer<fftw_complex> fa(fftw_alloc_complex(nc)),
      fb(fftw_alloc_complex(nc));
  for (size_t i = 0; i < n; ++i) {
    a[i] = i < q && y.Get(i) ? 1.0 : 0.0;
    b[i] = i < len && v.Get(i) ? 1.0 : 0.0;
  }
  fftw_execute_dft_r2c(plans.forward, a.get(), fa.get());
  fftw_execute_dft_r2c(plans.forward, b.get(), fb.get());
  for (size_t i = 0; i < nc; ++i) {
    const double re = fa[i][0] * fb[i][0] - fa[i][1] * fb[i][1];
    const double im = fa[i][0] * fb[i][1] + fa[i][1] * fb[i][0];
    fa[i][0] = re;
    fa[i][1] = im;
  }
  fftw_execute_dft_c2r(plans.backward, fa.get(), a.get());

  const double scale = 1.0 / static_cast<double>(n);
  bool precise = true;
  auto coefficient = [&](size_t idx) -> uint64_t {
    const double value = a[idx] * scale;
    const double rounded = std::nearbyint(value);
    if (!(std::fabs(value - rounded) < options.max_residual)) precise = false;
    return static_cast<uint64_t>(std::max(rounded, 0.0));
  };

  BitString out(rows);
  for (size_t i = 0; i < rows; ++i) {
    uint64_t c = coefficient(i);
    if (i + q < lin_len) c += coefficient(i + q);
    if (c & 1U) out.Set(i, true);
  }
  if (!precise) {
    PRIVAMP_ENFORCE(options.exact_fallback, ErrorCode::kPrecisionLoss,
                    "floating-point convolution residual exceeded " +
                        std::to_string(options.max_residual));
    return CirculantHeadExact(y, v, rows);
  }
  return out;
}

}  // namespace internal

namespace {

// Work below this many matrix entries goes through the word-parallel path.
constexpr size_t kNaiveCutoff = size_t{1} << 22;

}  // namespace

ToeplitzHashing::ToeplitzHashing(size_t input_length, size_t output_length)
    : n_(input_length), m_(output_length) {
  PRIVAMP_ENFORCE(m_ >= 1 && m_ <= n_, ErrorCode::kInvalidRange,
                  "Toeplitz hashing needs 1 <= m <= n, got n=" +
                      std::to_string(n_) + " m=" + std::to_string(m_));
}

ExtractorConfig ToeplitzHashing::config() const {
  return {ExtractorKind::kToeplitz, n_, m_, 0};
}

BitString ToeplitzHashing::Extract(const BitString& input,
                                   const BitString& seed) const {
  if (n_ * m_ <= kNaiveCutoff) return ExtractNaive(input, seed);
  return ExtractFft(input, seed);
}

BitString ToeplitzHashing::ExtractNaive(const BitString& input,
                                        const BitString& seed) const {
  CheckLengths(input, seed);
  return internal::CirculantHeadExact(seed, input, m_);
}

BitString ToeplitzHashing::ExtractFft(const BitString& input,
                                      const BitString& seed,
                                      const FftOptions& options) const {
  CheckLengths(input, seed);
  return internal::CirculantHeadFft(seed, input, m_, options);
}

Gf2Matrix ToeplitzHashing::ToMatrix(const BitString& seed) const {
  PRIVAMP_ENFORCE(seed.size() == seed_length(), ErrorCode::kLengthMismatch,
                  "seed must have " + std::to_string(seed_length()) +
                      " bits, got " + std::to_string(seed.size()));
  const size_t q = seed_length();
  Gf2Matrix t(m_, n_);
  for (size_t i = 0; i < m_; ++i) {
    for (size_t j = 0; j < n_; ++j) {
      t.Set(i, j, seed.Get((i + q - j) % q));
    }
  }
  return t;
}

ModifiedToeplitzHashing::ModifiedToeplitzHashing(size_t input_length,
                                                 size_t output_length)
    : n_(input_length), m_(output_length) {
  PRIVAMP_ENFORCE(m_ >= 1 && m_ < n_, ErrorCode::kInvalidRange,
                  "modified Toeplitz hashing needs 1 <= m < n, got n=" +
                      std::to_string(n_) + " m=" + std::to_string(m_));
}

ExtractorConfig ModifiedToeplitzHashing::config() const {
  return {ExtractorKind::kModifiedToeplitz, n_, m_, 0};
}

BitString ModifiedToeplitzHashing::Extract(const BitString& input,
                                           const BitString& seed) const {
  if ((n_ - m_) * m_ <= kNaiveCutoff) return ExtractNaive(input, seed);
  return ExtractFft(input, seed);
}

BitString ModifiedToeplitzHashing::ExtractNaive(const BitString& input,
                                                const BitString& seed) const {
  CheckLengths(input, seed);
  BitString head =
      internal::CirculantHeadExact(seed, input.Slice(0, n_ - m_), m_);
  return head ^ input.Slice(n_ - m_, m_);
}

BitString ModifiedToeplitzHashing::ExtractFft(const BitString& input,
                                              const BitString& seed,
                                              const FftOptions& options) const {
  CheckLengths(input, seed);
  BitString head = internal::CirculantHeadFft(seed, input.Slice(0, n_ - m_),
                                              m_, options);
  return head ^ input.Slice(n_ - m_, m_);
}

Gf2Matrix ModifiedToeplitzHashing::ToMatrix(const BitString& seed) const {
  PRIVAMP_ENFORCE(seed.size() == seed_length(), ErrorCode::kLengthMismatch,
                  "seed must have " + std::to_string(seed_length()) +
                      " bits, got " + std::to_string(seed.size()));
  const size_t q = seed_length();
  Gf2Matrix t(m_, n_ - m_);
  for (size_t i = 0; i < m_; ++i) {
    for (size_t j = 0; j < n_ - m_; ++j) {
      t.Set(i, j, seed.Get((i + q - j) % q));
    }
  }
  return t.HConcat(Gf2Matrix::Identity(m_));
}

}  // namespace privamp
