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

#include <gtest/gtest.h>

#include <array>
#include <bit>
#include <map>
#include <random>

#include "oracles.h"
#include "privamp/binary_field.h"
#include "privamp/error.h"
#include "privamp/trevisan.h"

namespace privamp {
namespace {

uint64_t FullModulus(size_t l) { return (uint64_t{1} << l) | LeastIrreducibleTail(l); }

oracle::Bits OracleTrevisan(const oracle::Bits& x, const oracle::Bits& y, size_t m,
                            uint32_t t) {
  return oracle::Trevisan(x, y, m, t, FullModulus(t / 2));
}

TEST(OneBitTest, Examples) {
  const PolynomialOneBitExtractor ob(4, 2);
  EXPECT_EQ(ob.seed_length(), 4u);
  EXPECT_EQ(ob.num_chunks(), 2u);
  EXPECT_FALSE(ob.Extract(BitString::FromString("1100"), BitString::FromString("0111")));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const BitString x = BitString::Random(4, rng);
    const BitString y = BitString::Random(4, rng);
    EXPECT_FALSE(ob.Extract(BitString(4), y));
    EXPECT_FALSE(ob.Extract(x, y.Slice(0, 2).Concat(BitString(2))));
  }
}

// alpha = 1 evaluates to the XOR of all chunks; beta picks bits.
TEST(OneBitTest, ChunkOrderAndPadding) {
  const PolynomialOneBitExtractor ob(5, 2);  // chunks 2, 2, 1 padded right
  EXPECT_EQ(ob.num_chunks(), 3u);
  // alpha = 0 selects the constant term: the last chunk, "1" + pad "0".
  EXPECT_TRUE(ob.Extract(BitString::FromString("00001"), BitString::FromString("0010")));
  EXPECT_FALSE(ob.Extract(BitString::FromString("00001"), BitString::FromString("0001")));
  // alpha = X: leading chunk is multiplied by X^2 = X + 1.
  EXPECT_TRUE(ob.Extract(BitString::FromString("01000"), BitString::FromString("1001")));
  EXPECT_TRUE(ob.Extract(BitString::FromString("01000"), BitString::FromString("1010")));
}

TEST(OneBitTest, MatchesOracle) {
  std::mt19937_64 rng(2);
  for (size_t l : {1u, 2u, 3u, 5u, 8u, 13u, 16u}) {
    for (size_t n : {1u, 7u, 16u, 33u, 100u}) {
      const PolynomialOneBitExtractor ob(n, l);
      for (int trial = 0; trial < 30; ++trial) {
        const BitString x = BitString::Random(n, rng);
        const BitString y = BitString::Random(2 * l, rng);
        ASSERT_EQ(ob.Extract(x, y),
                  oracle::OneBit(oracle::ToBits(x), oracle::ToBits(y), l, FullModulus(l)) == 1)
            << "n=" << n << " l=" << l;
      }
    }
  }
}

TEST(OneBitTest, LengthMismatch) {
  const PolynomialOneBitExtractor ob(8, 2);
  EXPECT_THROW(ob.Extract(BitString(7), BitString(4)), Error);
  EXPECT_THROW(ob.Extract(BitString(8), BitString(3)), Error);
}

TEST(OneBitTest, LinearInInput) {
  std::mt19937_64 rng(3);
  const PolynomialOneBitExtractor ob(300, 64);
  for (int trial = 0; trial < 200; ++trial) {
    const BitString a = BitString::Random(300, rng), b = BitString::Random(300, rng);
    const BitString y = BitString::Random(128, rng);
    ASSERT_EQ(ob.Extract(a ^ b, y), ob.Extract(a, y) != ob.Extract(b, y));
  }
}

TEST(TrevisanTest, SeedLengthRules) {
  auto code = [](size_t t) {
    try {
      TrevisanExtractor(16, 2, t);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kConfigError;
  };
  EXPECT_EQ(code(3), ErrorCode::kInvalidRange);
  EXPECT_EQ(code(0), ErrorCode::kInvalidRange);
  EXPECT_EQ(code(6), ErrorCode::kNotPrimePower);
  const TrevisanExtractor ext(16, 3, 4);
  EXPECT_EQ(ext.seed_length(), 16u);
  EXPECT_EQ(ext.output_length(), 3u);
  EXPECT_EQ(ext.one_bit().field_degree(), 2u);
}

TEST(TrevisanTest, DesignMustMatchOneBitSeed) {
  WeakDesign w(4, 16, {{0, 5, 10, 15}});
  try {
    TrevisanExtractor(w, PolynomialOneBitExtractor(8, 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfigError);
  }
}

TEST(TrevisanTest, SingleOutputIsOneBit) {
  std::mt19937_64 rng(4);
  const TrevisanExtractor ext(20, 1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const BitString x = BitString::Random(20, rng);
    const BitString y = BitString::Random(16, rng);
    const BitString sub = ext.SubSeed(y, 0);
    // S_0 = {0, 4, 8, 12}.
    const std::string want = {char('0' + y[0]), char('0' + y[4]), char('0' + y[8]),
                              char('0' + y[12])};
    EXPECT_EQ(sub.ToString(), want);
    EXPECT_EQ(ext.Extract(x, y).Get(0), ext.one_bit().Extract(x, sub));
  }
}

TEST(TrevisanTest, ZeroInputGivesZero) {
  std::mt19937_64 rng(5);
  const TrevisanExtractor ext(50, 10, 8);
  for (int i = 0; i < 20; ++i) {
    EXPECT_TRUE(ext.Extract(BitString(50), BitString::Random(64, rng)).IsZero());
  }
}

TEST(TrevisanTest, MatchesCompositionOracleRandom) {
  std::mt19937_64 rng(6);
  for (auto [n, m, t] : {std::tuple{8, 2, 2}, {8, 2, 4}, {8, 16, 4}, {37, 40, 4}}) {
    const TrevisanExtractor ext(n, m, t);
    for (int trial = 0; trial < 100; ++trial) {
      const BitString x = BitString::Random(n, rng);
      const BitString y = BitString::Random(ext.seed_length(), rng);
      ASSERT_EQ(oracle::ToBits(ext.Extract(x, y)),
                OracleTrevisan(oracle::ToBits(x), oracle::ToBits(y), m, t));
    }
  }
}

TEST(TrevisanTest, MatchesCompositionOracleExhaustive) {
  const TrevisanExtractor ext(4, 2, 2);
  ASSERT_EQ(ext.seed_length(), 4u);
  size_t cases = 0;
  for (uint64_t x = 0; x < 16; ++x) {
    for (uint64_t y = 0; y < 16; ++y) {
      const BitString xs = BitString::FromUint(x, 4), ys = BitString::FromUint(y, 4);
      ASSERT_EQ(oracle::ToBits(ext.Extract(xs, ys)),
                OracleTrevisan(oracle::ToBits(xs), oracle::ToBits(ys), 2, 2));
      ++cases;
    }
  }
  EXPECT_EQ(cases, 256u);
}

TEST(TrevisanTest, LargeParametersAreConsistent) {
  std::mt19937_64 rng(7);
  const TrevisanExtractor ext(5000, 64, 256);
  const BitString x = BitString::Random(5000, rng);
  const BitString y = BitString::Random(ext.seed_length(), rng);
  const BitString out = ext.Extract(x, y);
  for (size_t i = 0; i < 64; i += 9) {
    EXPECT_EQ(out.Get(i), ext.one_bit().Extract(x, ext.SubSeed(y, i)));
  }
  // Linear in x for a fixed seed.
  const BitString x2 = BitString::Random(5000, rng);
  EXPECT_EQ(ext.Extract(x ^ x2, y), out ^ ext.Extract(x2, y));
}

// Uniform 8-bit input, m = 2, t = 4, every seed. For a fixed seed each output
// bit is a linear functional of x; the exact output distribution over all
// 256 inputs must equal the one predicted by those functionals (taken from
// the oracle), and is exactly uniform whenever they are independent.
TEST(TrevisanTest, StrongnessOverAllSeeds) {
  const size_t n = 8;
  const TrevisanExtractor ext(n, 2, 4);
  const size_t d = ext.seed_length();
  ASSERT_EQ(d, 16u);
  std::vector<BitString> inputs;
  for (uint64_t x = 0; x < 256; ++x) inputs.push_back(BitString::FromUint(x, n));

  uint64_t good_seeds = 0;
  double total_distance = 0.0;
  for (uint64_t y = 0; y < (uint64_t{1} << d); ++y) {
    const BitString seed = BitString::FromUint(y, d);
    const oracle::Bits yb = oracle::ToBits(seed);
    // Functional masks from the oracle on unit vectors; bit 7 - j is x[j].
    std::array<uint32_t, 2> f = {0, 0};
    for (size_t j = 0; j < n; ++j) {
      oracle::Bits e(n, 0);
      e[j] = 1;
      const oracle::Bits out = OracleTrevisan(e, yb, 2, 4);
      for (size_t i = 0; i < 2; ++i) f[i] |= static_cast<uint32_t>(out[i]) << (n - 1 - j);
    }
    std::array<int, 4> want{}, got{};
    for (uint32_t x = 0; x < 256; ++x) {
      const int b0 = std::popcount(f[0] & x) & 1, b1 = std::popcount(f[1] & x) & 1;
      ++want[b0 * 2 + b1];
      const BitString z = ext.Extract(inputs[x], seed);
      ++got[z.Get(0) * 2 + z.Get(1)];
    }
    ASSERT_EQ(got, want) << "seed " << y;
    const bool independent = f[0] != 0 && f[1] != 0 && f[0] != f[1];
    double distance = 0.0;
    for (int v : got) distance += std::abs(v / 256.0 - 0.25);
    distance /= 2;
    if (independent) {
      ASSERT_EQ(got, (std::array<int, 4>{64, 64, 64, 64})) << "seed " << y;
      ++good_seeds;
    } else {
      ASSERT_GT(distance, 0.0);
    }
    total_distance += distance;
  }
  const double bad_fraction = 1.0 - static_cast<double>(good_seeds) / 65536.0;
  // Each bad seed is at distance 1/2 or 3/4 from uniform.
  EXPECT_GE(total_distance / 65536.0, bad_fraction / 2);
  EXPECT_LE(total_distance / 65536.0, bad_fraction * 3 / 4);
  // A zero mask beta on either sub-seed already costs 1 - (3/4)^2.
  EXPECT_GE(bad_fraction, 1.0 - 9.0 / 16.0);
  EXPECT_LT(bad_fraction, 0.5);
}

TEST(TrevisanLengthTest, InfeasibleWhenEntropyTooLow) {
  try {
    CalculateTrevisanLength(1000, 0.1, 1e-6, 512);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoFeasibleOutput);
  }
  // The field is too small for the requested error.
  EXPECT_THROW(CalculateTrevisanLength(1000000, 1.0, 1e-6, 16), Error);
}

TEST(TrevisanLengthTest, FeasibleParametersAreConsistent) {
  const TrevisanParameters p = CalculateTrevisanLength(1000000, 0.5, 1e-6, 512);
  EXPECT_GT(p.output_length, 0u);
  EXPECT_EQ(p.field_degree, 256u);
  EXPECT_EQ(p.seed_length, 512u * 512u);
  EXPECT_EQ(p.num_chunks, (1000000u + 255u) / 256u);
  EXPECT_LE(p.one_bit_entropy + p.r * p.output_length, p.source_entropy);
  // One more bit would break the composition requirement or the field bound.
  EXPECT_NEAR(p.per_bit_error * p.output_length, 1e-6, 1e-12);
  EXPECT_GE(p.output_length, 50000u);
}

TEST(TrevisanLengthTest, MonotoneInError) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<size_t> pick_n(100000, 3000000);
  std::uniform_real_distribution<double> pick_rel(0.2, 1.0);
  std::uniform_real_distribution<double> pick_exp(-20, -3);
  for (int trial = 0; trial < 10; ++trial) {
    const size_t n = pick_n(rng);
    const double rel = pick_rel(rng), err = std::pow(10.0, pick_exp(rng));
    const size_t m1 = CalculateTrevisanLength(n, rel, err, 1024).output_length;
    const size_t m2 = CalculateTrevisanLength(n, rel, 2 * err, 1024).output_length;
    EXPECT_GE(m2, m1) << n << " " << rel << " " << err;
  }
}

TEST(TrevisanLengthTest, MonotoneInEntropy) {
  for (size_t n : {200000u, 1000000u}) {
    const size_t lo = CalculateTrevisanLength(n, 0.5, 1e-8, 512).output_length;
    const size_t hi = CalculateTrevisanLength(n, 0.9, 1e-8, 512).output_length;
    EXPECT_GE(hi, lo);
  }
}

}  // namespace
}  // namespace privamp
