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
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace privamp {

/// Overlap parameter r = 2e of the finite-field polynomial design.
inline constexpr double kFiniteFieldDesignR = 2.0 * std::numbers::e;

/// A family of m subsets of {0, ..., d-1}, each sorted ascending.
///
/// A weak (m, t, r, d)-design additionally satisfies, for every i,
///   sum_{j<i} 2^|S_i n S_j| <= r m;
/// VerifyDesign() checks that property. Construction only checks shape.
class WeakDesign {
 public:
  WeakDesign(size_t set_size, uint64_t universe_size,
             std::vector<std::vector<uint64_t>> sets);

  size_t num_sets() const { return sets_.size(); }
  size_t set_size() const { return set_size_; }
  uint64_t universe_size() const { return universe_size_; }
  const std::vector<uint64_t>& set(size_t i) const { return sets_[i]; }
  const std::vector<std::vector<uint64_t>>& sets() const { return sets_; }

  /// Largest sum_{j<i} 2^|S_i n S_j| / m seen by the last verification run
  /// at construction, if one ran.
  std::optional<double> achieved_r() const { return achieved_r_; }

 protected:
  void set_achieved_r(double r) { achieved_r_ = r; }

 private:
  size_t set_size_;
  uint64_t universe_size_;
  std::vector<std::vector<uint64_t>> sets_;
  std::optional<double> achieved_r_;
};

struct VerifyOptions {
  // Above this many set elements (m * t) only sampled indices are checked.
  size_t exhaustive_cap = 100000;
  size_t sample_count = 64;
  uint64_t rng_seed = 0;
};

struct DesignReport {
  bool passed = true;
  bool exhaustive = true;
  double r = 0.0;
  size_t indices_checked = 0;
  // Index with the largest overlap sum and that sum divided by m.
  size_t worst_index = 0;
  double achieved_r = 0.0;
  // First index breaking the size, range or overlap condition.
  std::optional<size_t> first_failure;
  std::string message;
};

DesignReport VerifyDesign(const WeakDesign& design, double r,
                          const VerifyOptions& options = {});

/// S_i = { a*t + p_i(a) : a in GF(t) }, where the coefficient of X^k in p_i
/// is the k-th base-t digit of i. Field elements are identified with
/// integers by GaloisField's canonical representative, so d = t^2.
class FiniteFieldPolynomialDesign : public WeakDesign {
 public:
  /// Builds the design for m sets of size t (a prime power) using the
  /// smallest degree bound c with m <= t^(c+1), and verifies it against
  /// kFiniteFieldDesignR when the verification cap allows.
  static FiniteFieldPolynomialDesign Generate(size_t num_sets, uint32_t t,
                                              const VerifyOptions& options = {});

  uint32_t max_degree() const { return max_degree_; }

 private:
  FiniteFieldPolynomialDesign(size_t t, std::vector<std::vector<uint64_t>> sets,
                              uint32_t max_degree);

  uint32_t max_degree_;
};

}  // namespace privamp
