// Copyright 2026 The VGF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

namespace vgf {

/// Two-state bit vector, 1..128 bits wide. Values are always kept masked
/// to the declared width; arithmetic wraps modulo 2^width.
struct BitVec {
  uint64_t lo = 0;
  uint64_t hi = 0;
  uint32_t width = 1;

  static constexpr uint32_t kMaxWidth = 128;

  BitVec() = default;
  BitVec(uint32_t w, uint64_t value) : lo(value), hi(0), width(w) { mask(); }
  BitVec(uint32_t w, uint64_t value_hi, uint64_t value_lo)
      : lo(value_lo), hi(value_hi), width(w) {
    mask();
  }

  static BitVec zeros(uint32_t w) { return BitVec(w, 0); }
  static BitVec ones(uint32_t w) {
    return BitVec(w, ~uint64_t{0}, ~uint64_t{0});
  }

  void mask() {
    if (width >= 128) return;
    if (width >= 64) {
      uint32_t h = width - 64;
      hi = (h == 0) ? 0 : (hi & (~uint64_t{0} >> (64 - h)));
    } else {
      hi = 0;
      lo &= ~uint64_t{0} >> (64 - width);
    }
  }

  bool operator==(const BitVec& o) const { return lo == o.lo && hi == o.hi; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  bool is_zero() const { return lo == 0 && hi == 0; }
  bool truthy() const { return !is_zero(); }
  uint64_t to_u64() const { return lo; }

  bool bit(uint32_t i) const {
    if (i >= width) return false;
    return i < 64 ? ((lo >> i) & 1) : ((hi >> (i - 64)) & 1);
  }

  void set_bit(uint32_t i, bool v) {
    if (i >= 128) return;
    uint64_t& word = i < 64 ? lo : hi;
    uint32_t off = i < 64 ? i : i - 64;
    if (v)
      word |= uint64_t{1} << off;
    else
      word &= ~(uint64_t{1} << off);
  }

  /// Unsigned comparison.
  int cmp(const BitVec& o) const {
    if (hi != o.hi) return hi < o.hi ? -1 : 1;
    if (lo != o.lo) return lo < o.lo ? -1 : 1;
    return 0;
  }

  /// Value resized to a new width (zero-extend or truncate).
  BitVec resized(uint32_t w) const {
    BitVec r = *this;
    r.width = w;
    r.mask();
    return r;
  }

  BitVec shl(uint32_t n) const {
    BitVec r = BitVec::zeros(width);
    if (n >= 128) return r;
    if (n == 0) return *this;
    if (n >= 64) {
      r.hi = lo << (n - 64);
    } else {
      r.hi = (hi << n) | (lo >> (64 - n));
      r.lo = lo << n;
    }
    r.mask();
    return r;
  }

  BitVec shr(uint32_t n) const {
    BitVec r = BitVec::zeros(width);
    if (n >= 128) return r;
    if (n == 0) return *this;
    if (n >= 64) {
      r.lo = hi >> (n - 64);
    } else {
      r.lo = (lo >> n) | (hi << (64 - n));
      r.hi = hi >> n;
    }
    return r;
  }

  std::string to_hex() const;
};

inline BitVec bv_and(const BitVec& a, const BitVec& b, uint32_t w) {
  return BitVec(w, a.hi & b.hi, a.lo & b.lo);
}
inline BitVec bv_or(const BitVec& a, const BitVec& b, uint32_t w) {
  return BitVec(w, a.hi | b.hi, a.lo | b.lo);
}
inline BitVec bv_xor(const BitVec& a, const BitVec& b, uint32_t w) {
  return BitVec(w, a.hi ^ b.hi, a.lo ^ b.lo);
}
inline BitVec bv_not(const BitVec& a, uint32_t w) {
  return BitVec(w, ~a.hi, ~a.lo);
}

inline BitVec bv_add(const BitVec& a, const BitVec& b, uint32_t w) {
  uint64_t lo = a.lo + b.lo;
  uint64_t carry = lo < a.lo ? 1 : 0;
  return BitVec(w, a.hi + b.hi + carry, lo);
}
inline BitVec bv_sub(const BitVec& a, const BitVec& b, uint32_t w) {
  uint64_t lo = a.lo - b.lo;
  uint64_t borrow = a.lo < b.lo ? 1 : 0;
  return BitVec(w, a.hi - b.hi - borrow, lo);
}
inline BitVec bv_neg(const BitVec& a, uint32_t w) {
  return bv_sub(BitVec::zeros(w), a, w);
}

/// {a, b}: a occupies the most significant bits.
inline BitVec bv_concat(const BitVec& a, const BitVec& b) {
  BitVec r = a.resized(a.width + b.width).shl(b.width);
  BitVec bb = b.resized(a.width + b.width);
  return bv_or(r, bb, a.width + b.width);
}

/// a[hi_bit:lo_bit], inclusive.
inline BitVec bv_slice(const BitVec& a, uint32_t hi_bit, uint32_t lo_bit) {
  return a.shr(lo_bit).resized(hi_bit - lo_bit + 1);
}

}  // namespace vgf
