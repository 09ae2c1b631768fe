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

#include "privamp/bitstring.h"

#include <algorithm>
#include <bit>

#include "privamp/error.h"

namespace privamp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kNonZeroPadding:
      return "NonZeroPadding";
    case ErrorCode::kInvalidHexDigit:
      return "InvalidHexDigit";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kFieldMismatch:
      return "FieldMismatch";
    case ErrorCode::kInvalidRange:
      return "InvalidRange";
    case ErrorCode::kPrecisionLoss:
      return "PrecisionLoss";
    case ErrorCode::kNotPrimePower:
      return "NotPrimePower";
    case ErrorCode::kTooManySets:
      return "TooManySets";
    case ErrorCode::kNoFeasibleOutput:
      return "NoFeasibleOutput";
    case ErrorCode::kDuplicateLabel:
      return "DuplicateLabel";
    case ErrorCode::kProbeFailed:
      return "ProbeFailed";
    case ErrorCode::kConfigError:
      return "ConfigError";
    case ErrorCode::kNoFailures:
      return "NoFailures";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kLengthInconsistency:
      return "LengthInconsistency";
    case ErrorCode::kMissingOutputs:
      return "MissingOutputs";
  }
  return "Unknown";
}

BitString BitString::Ones(size_t size) {
  BitString b(size);
  std::fill(b.words_.begin(), b.words_.end(), ~uint64_t{0});
  b.ClearTail();
  return b;
}

BitString BitString::FromString(std::string_view bits) {
  BitString b(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    char c = bits[i];
    PRIVAMP_ENFORCE(c == '0' || c == '1', ErrorCode::kInvalidRange,
                    "bit string contains character '" + std::string(1, c) +
                        "'");
    if (c == '1') b.Set(i, true);
  }
  return b;
}

BitString BitString::FromWords(std::vector<uint64_t> words, size_t size) {
  PRIVAMP_ENFORCE(words.size() == WordsFor(size), ErrorCode::kLengthMismatch,
                  "word count does not match bit length");
  BitString b;
  b.size_ = size;
  b.words_ = std::move(words);
  b.ClearTail();
  return b;
}

BitString BitString::FromUint(uint64_t value, size_t size) {
  PRIVAMP_ENFORCE(size <= 64, ErrorCode::kInvalidRange,
                  "FromUint supports at most 64 bits");
  BitString b(size);
  for (size_t i = 0; i < size; ++i) {
    b.Set(i, (value >> (size - 1 - i)) & 1U);
  }
  return b;
}

void CopyBitWindow(std::span<const uint64_t> src, size_t pos, size_t len,
                   std::span<uint64_t> out) {
  const size_t nwords = BitString::WordsFor(len);
  const size_t first = pos >> 6;
  const unsigned shift = pos & 63;
  for (size_t w = 0; w < nwords; ++w) {
    size_t k = first + w;
    uint64_t lo = k < src.size() ? src[k] : 0;
    if (shift == 0) {
      out[w] = lo;
    } else {
      uint64_t hi = k + 1 < src.size() ? src[k + 1] : 0;
      out[w] = (lo >> shift) | (hi << (64 - shift));
    }
  }
  if (len & 63) out[nwords - 1] &= (uint64_t{1} << (len & 63)) - 1;
}

BitString BitString::Slice(size_t pos, size_t len) const {
  PRIVAMP_ENFORCE(pos <= size_ && len <= size_ - pos,
                  ErrorCode::kLengthMismatch, "slice out of range");
  BitString out(len);
  CopyBitWindow(words_, pos, len, out.words_);
  return out;
}

BitString BitString::Concat(const BitString& other) const {
  BitString out(size_ + other.size_);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  const unsigned shift = size_ & 63;
  const size_t base = size_ >> 6;
  for (size_t w = 0; w < other.words_.size(); ++w) {
    out.words_[base + w] |= other.words_[w] << shift;
    if (shift != 0 && base + w + 1 < out.words_.size()) {
      out.words_[base + w + 1] |= other.words_[w] >> (64 - shift);
    }
  }
  return out;
}

BitString BitString::Reversed() const {
  BitString out(size_);
  for (size_t i = 0; i < size_; ++i) out.Set(size_ - 1 - i, Get(i));
  return out;
}

BitString& BitString::operator^=(const BitString& other) {
  PRIVAMP_ENFORCE(size_ == other.size_, ErrorCode::kLengthMismatch,
                  "xor of bit strings with lengths " + std::to_string(size_) +
                      " and " + std::to_string(other.size_));
  for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

size_t BitString::Popcount() const {
  size_t c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool BitString::IsZero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](uint64_t w) { return w == 0; });
}

uint64_t BitString::ToUint() const {
  PRIVAMP_ENFORCE(size_ <= 64, ErrorCode::kInvalidRange,
                  "ToUint supports at most 64 bits");
  uint64_t v = 0;
  for (size_t i = 0; i < size_; ++i) v = (v << 1) | (Get(i) ? 1U : 0U);
  return v;
}

std::string BitString::ToString() const {
  std::string s(size_, '0');
  for (size_t i = 0; i < size_; ++i) {
    if (Get(i)) s[i] = '1';
  }
  return s;
}

void BitString::ClearTail() {
  if (size_ & 63) words_.back() &= (uint64_t{1} << (size_ & 63)) - 1;
}

std::string HexEncode(const BitString& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const size_t nbytes = (bits.size() + 7) / 8;
  const size_t pad = nbytes * 8 - bits.size();
  std::string out(nbytes * 2, '0');
  // Padded bit position p maps to bits[p - pad].
  for (size_t nib = 0; nib < nbytes * 2; ++nib) {
    unsigned v = 0;
    for (size_t k = 0; k < 4; ++k) {
      size_t p = nib * 4 + k;
      v <<= 1;
      if (p >= pad && bits.Get(p - pad)) v |= 1;
    }
    out[nib] = kDigits[v];
  }
  return out;
}

namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitString HexDecode(std::string_view hex, size_t length) {
  const size_t nbytes = (length + 7) / 8;
  PRIVAMP_ENFORCE(hex.size() == nbytes * 2, ErrorCode::kLengthMismatch,
                  "expected " + std::to_string(nbytes * 2) +
                      " hex digits for " + std::to_string(length) +
                      " bits, got " + std::to_string(hex.size()));
  const size_t pad = nbytes * 8 - length;
  BitString out(length);
  for (size_t nib = 0; nib < hex.size(); ++nib) {
    int v = HexValue(hex[nib]);
    PRIVAMP_ENFORCE(v >= 0, ErrorCode::kInvalidHexDigit,
                    "invalid hex digit '" + std::string(1, hex[nib]) + "'");
    for (size_t k = 0; k < 4; ++k) {
      size_t p = nib * 4 + k;
      bool bit = (v >> (3 - k)) & 1;
      if (p < pad) {
        PRIVAMP_ENFORCE(!bit, ErrorCode::kNonZeroPadding,
                        "padding bits above a " + std::to_string(length) +
                            "-bit value must be zero");
      } else if (bit) {
        out.Set(p - pad, true);
      }
    }
  }
  return out;
}

}  // namespace privamp
