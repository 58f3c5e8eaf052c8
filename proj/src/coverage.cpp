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

#include "vgf/coverage.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "vgf/blake2b.hpp"

namespace vgf {

namespace {

// 160-bit lane {c:32, value:128}, serialized most-significant byte first.
struct Lane {
  uint8_t bytes[20];

  Lane(uint32_t code, const BitVec& v) {
    bytes[0] = static_cast<uint8_t>(code >> 24);
    bytes[1] = static_cast<uint8_t>(code >> 16);
    bytes[2] = static_cast<uint8_t>(code >> 8);
    bytes[3] = static_cast<uint8_t>(code);
    for (int i = 0; i < 8; ++i) bytes[4 + i] = static_cast<uint8_t>(v.hi >> (56 - 8 * i));
    for (int i = 0; i < 8; ++i) bytes[12 + i] = static_cast<uint8_t>(v.lo >> (56 - 8 * i));
  }

  void shift_right_one() {
    uint8_t carry = 0;
    for (int i = 0; i < 20; ++i) {
      uint8_t next_carry = bytes[i] & 1;
      bytes[i] = static_cast<uint8_t>((bytes[i] >> 1) | (carry << 7));
      carry = next_carry;
    }
  }

  void xor_with(const Lane& o) {
    for (int i = 0; i < 20; ++i) bytes[i] ^= o.bytes[i];
  }
};

}  // namespace

uint16_t compress_values(const TrackedSignal& t, const BitVec& prev,
                         const BitVec& next, PrevShift shift) {
  if (prev.width != t.width || next.width != t.width)
    throw WidthMismatch("compress_values: value width does not match tracked signal");
  Lane a(t.code, next.resized(128));
  if (shift == PrevShift::whole_concat) {
    Lane b(t.code, prev.resized(128));
    b.shift_right_one();
    a.xor_with(b);
  } else {
    Lane b(t.code, prev.resized(128).shr(1));
    a.xor_with(b);
  }
  return blake2b16(a.bytes, sizeof(a.bytes));
}

uint16_t vectorize_values(
    std::span<const std::pair<TrackedSignal, BitVec>> tracked_now) {
  std::vector<uint8_t> buf;
  buf.reserve(tracked_now.size() * 20);
  for (const auto& [t, v] : tracked_now) {
    Lane lane(t.code, v.resized(128));
    buf.insert(buf.end(), lane.bytes, lane.bytes + 20);
  }
  return blake2b16(buf.data(), buf.size());
}

CoverageMap::CoverageMap()
    : buckets_(kMapSize, 0), virgin_(kMapSize / 64, 0) {}

void CoverageMap::record(uint32_t index, uint32_t weight) {
  index &= kMapSize - 1;
  uint8_t before = buckets_[index];
  uint32_t after = before + weight;
  buckets_[index] = static_cast<uint8_t>(std::min<uint32_t>(after, 255));
  if (before == 0 && weight > 0) {
    ++populated_;
    touched_.push_back(index);
    uint64_t bit = uint64_t{1} << (index & 63);
    if (!(virgin_[index >> 6] & bit)) {
      virgin_[index >> 6] |= bit;
      ++virgin_count_;
      ++newly_virgin_;
    }
  }
}

void CoverageMap::begin_run() {
  for (uint32_t idx : touched_) buckets_[idx] = 0;
  touched_.clear();
  populated_ = 0;
  newly_virgin_ = 0;
}

std::vector<uint32_t> CoverageMap::delta_set() const {
  std::vector<uint32_t> s(touched_.begin(), touched_.end());
  std::sort(s.begin(), s.end());
  return s;
}

void CoverageMap::merge(const CoverageMap& other) {
  for (uint32_t idx : other.touched_) {
    uint8_t mine = buckets_[idx];
    uint8_t theirs = other.buckets_[idx];
    if (theirs > mine) {
      if (mine == 0) {
        ++populated_;
        touched_.push_back(idx);
      }
      buckets_[idx] = theirs;
    }
  }
  for (size_t w = 0; w < virgin_.size(); ++w) {
    uint64_t added = other.virgin_[w] & ~virgin_[w];
    if (added) {
      virgin_[w] |= added;
      virgin_count_ += static_cast<uint32_t>(__builtin_popcountll(added));
    }
  }
}

void CoverageMap::clear_all() {
  std::fill(buckets_.begin(), buckets_.end(), 0);
  std::fill(virgin_.begin(), virgin_.end(), 0);
  touched_.clear();
  populated_ = 0;
  virgin_count_ = 0;
  newly_virgin_ = 0;
}

void CoverageMap::export_raw(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write coverage map: " + path);
  out.write(reinterpret_cast<const char*>(buckets_.data()), buckets_.size());
}

}  // namespace vgf
