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

#include "privamp/weak_design.h"

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <numeric>
#include <random>

#include "privamp/error.h"
#include "privamp/galois_field.h"

namespace privamp {

WeakDesign::WeakDesign(size_t set_size, uint64_t universe_size,
                       std::vector<std::vector<uint64_t>> sets)
    : set_size_(set_size),
      universe_size_(universe_size),
      sets_(std::move(sets)) {}

namespace {

// sum_{j<i} 2^|S_i n S_j|, with `mark` holding the membership of S_i.
long double OverlapSum(const WeakDesign& design, size_t i,
                       const std::vector<uint8_t>& mark) {
  long double sum = 0.0L;
  for (size_t j = 0; j < i; ++j) {
    int common = 0;
    for (uint64_t e : design.set(j)) {
      if (e < mark.size() && mark[e]) ++common;
    }
    sum += std::ldexp(1.0L, common);
  }
  return sum;
}

}  // namespace

DesignReport VerifyDesign(const WeakDesign& design, double r,
                          const VerifyOptions& options) {
  DesignReport report;
  report.r = r;
  const size_t m = design.num_sets();
  const size_t t = design.set_size();
  auto fail = [&](size_t i, std::string why) {
    if (!report.first_failure) {
      report.first_failure = i;
      report.message = std::move(why);
    }
    report.passed = false;
  };

  for (size_t i = 0; i < m; ++i) {
    const auto& s = design.set(i);
    if (s.size() != t) {
      fail(i, "set " + std::to_string(i) + " has " + std::to_string(s.size()) +
                  " elements, expected " + std::to_string(t));
    } else if (!s.empty() && s.back() >= design.universe_size()) {
      fail(i, "set " + std::to_string(i) + " has an element outside [0, " +
                  std::to_string(design.universe_size()) + ")");
    } else if (std::adjacent_find(s.begin(), s.end(),
                                  std::greater_equal<>()) != s.end()) {
      fail(i, "set " + std::to_string(i) +
                  " is not strictly ascending (duplicate or unsorted)");
    }
  }
  if (!report.passed || m == 0) return report;

  std::vector<size_t> indices;
  if (m * t <= options.exhaustive_cap) {
    indices.resize(m);
    std::iota(indices.begin(), indices.end(), 0);
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(options.rng_seed);
    std::uniform_int_distribution<size_t> pick(0, m - 1);
    indices.push_back(m - 1);
    while (indices.size() < options.sample_count) indices.push_back(pick(rng));
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  }

  const long double bound = static_cast<long double>(r) * m;
  std::vector<uint8_t> mark(design.universe_size(), 0);
  long double worst = -1.0L;
  for (size_t i : indices) {
    for (uint64_t e : design.set(i)) mark[e] = 1;
    const long double sum = OverlapSum(design, i, mark);
    for (uint64_t e : design.set(i)) mark[e] = 0;
    ++report.indices_checked;
    if (sum > worst) {
      worst = sum;
      report.worst_index = i;
    }
    if (sum > bound) {
      fail(i, "overlap sum " + std::to_string(static_cast<double>(sum)) +
                  " at index " + std::to_string(i) + " exceeds r*m = " +
                  std::to_string(static_cast<double>(bound)));
    }
  }
  report.achieved_r = static_cast<double>(std::max(worst, 0.0L) / m);
  return report;
}

FiniteFieldPolynomialDesign::FiniteFieldPolynomialDesign(
    size_t t, std::vector<std::vector<uint64_t>> sets, uint32_t max_degree)
    : WeakDesign(t, uint64_t{t} * t, std::move(sets)),
      max_degree_(max_degree) {}

FiniteFieldPolynomialDesign FiniteFieldPolynomialDesign::Generate(
    size_t num_sets, uint32_t t, const VerifyOptions& options) {
  PRIVAMP_ENFORCE(FactorPrimePower(t).has_value(), ErrorCode::kNotPrimePower,
                  "set size " + std::to_string(t) + " is not a prime power");
  PRIVAMP_ENFORCE(num_sets >= 1, ErrorCode::kInvalidRange,
                  "a design needs at least one set");
  // m <= t^t; t^t overflows 64 bits already for t >= 16.
  if (t < 16) {
    uint64_t cap = 1;
    for (uint32_t i = 0; i < t; ++i) cap *= t;
    PRIVAMP_ENFORCE(num_sets <= cap, ErrorCode::kTooManySets,
                    std::to_string(num_sets) + " sets exceed t^t = " +
                        std::to_string(cap));
  }

  // Smallest c with t^(c+1) >= m.
  uint32_t c = 0;
  for (uint64_t reach = t; reach < num_sets; reach *= t) {
    ++c;
    if (reach > UINT64_MAX / t) break;
  }

  const GaloisField field(t);
  std::vector<std::vector<uint64_t>> sets(num_sets);
  std::vector<uint32_t> coeffs(c + 1);
  for (size_t i = 0; i < num_sets; ++i) {
    uint64_t rest = i;
    for (auto& coeff : coeffs) {
      coeff = static_cast<uint32_t>(rest % t);
      rest /= t;
    }
    auto& s = sets[i];
    s.resize(t);
    for (uint32_t a = 0; a < t; ++a) {
      uint32_t value = 0;
      for (size_t k = coeffs.size(); k-- > 0;) {
        value = field.AddValues(field.MulValues(value, a), coeffs[k]);
      }
      s[a] = uint64_t{a} * t + value;
    }
  }

  FiniteFieldPolynomialDesign design(t, std::move(sets), c);
  if (num_sets * t <= options.exhaustive_cap) {
    DesignReport report = VerifyDesign(design, kFiniteFieldDesignR, options);
    PRIVAMP_ENFORCE(report.passed, ErrorCode::kInvalidRange,
                    "generated design failed verification: " + report.message);
    design.set_achieved_r(report.achieved_r);
  }
  return design;
}

}  // namespace privamp
