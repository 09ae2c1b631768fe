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
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace privamp {

/// An ordered sequence of bits with an exact length.
///
/// Index 0 is the leftmost bit: it is printed first by ToString() and is the
/// most significant bit of the hex encoding. Storage is packed into 64-bit
/// words, bit i living at bit (i % 64) of word i / 64; bits past size() in
/// the last word are always zero.
class BitString {
 public:
  BitString() = default;
  explicit BitString(size_t size) : size_(size), words_(WordsFor(size), 0) {}

  static BitString Zeros(size_t size) { return BitString(size); }
  static BitString Ones(size_t size);
  /// Parses a string of '0'/'1' characters.
  static BitString FromString(std::string_view bits);
  static BitString FromWords(std::vector<uint64_t> words, size_t size);
  /// Low `size` bits of `value`, most significant first.
  static BitString FromUint(uint64_t value, size_t size);

  template <typename Rng>
  static BitString Random(size_t size, Rng& rng) {
    BitString b(size);
    for (auto& w : b.words_) w = static_cast<uint64_t>(rng());
    b.ClearTail();
    return b;
  }

  size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool Get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  bool operator[](size_t i) const { return Get(i); }
  void Set(size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void Flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  std::span<const uint64_t> words() const { return words_; }

  BitString Slice(size_t pos, size_t len) const;
  BitString Concat(const BitString& other) const;
  BitString Reversed() const;

  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString a, const BitString& b) {
    a ^= b;
    return a;
  }

  size_t Popcount() const;
  bool Parity() const { return Popcount() & 1U; }
  bool IsZero() const;
  /// Interprets the string as an unsigned integer, index 0 most significant.
  /// Requires size() <= 64.
  uint64_t ToUint() const;

  std::string ToString() const;

  friend bool operator==(const BitString& a, const BitString& b) = default;

  static size_t WordsFor(size_t bits) { return (bits + 63) / 64; }

 private:
  void ClearTail();

  size_t size_ = 0;
  std::vector<uint64_t> words_;
};

/// Lowercase hex, most significant bit first. A length that is not a
/// multiple of 8 is left-padded with zero bits to the next byte boundary.
std::string HexEncode(const BitString& bits);

/// Inverse of HexEncode. `hex` must hold exactly ceil(length/8)*2 digits and
/// every padding bit must be zero.
BitString HexDecode(std::string_view hex, size_t length);

/// Copies bits [pos, pos + len) of a packed little-endian word array into
/// `out`, which must hold WordsFor(len) words. Bits past len are cleared.
void CopyBitWindow(std::span<const uint64_t> src, size_t pos, size_t len,
                   std::span<uint64_t> out);

}  // namespace privamp
