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
#include <span>
#include <string>
#include <vector>

#include "vgf/bitvec.hpp"
#include "vgf/errors.hpp"

namespace vgf {

inline constexpr uint32_t kMapSize = 1u << 16;

struct TrackedSignal {
  uint32_t code = 0;  // unique signal identification code c
  uint32_t width = 1;
  uint32_t weight = 1;
};

enum class CompressionKind : uint8_t { compress_values, vectorize_values };

/// How the "previous value halved" term of the transition compression is
/// formed: shift the whole {code, value} concatenation (default, mirroring
/// the prev_loc>>1 idiom), or shift only the value lane.
enum class PrevShift : uint8_t { whole_concat, value_only };

/// Bucket index for one value transition of one tracked signal.
uint16_t compress_values(const TrackedSignal& t, const BitVec& prev,
                         const BitVec& next,
                         PrevShift shift = PrevShift::whole_concat);

/// Bucket index for the concatenated current values of the whole tracked set,
/// in configuration order.
uint16_t vectorize_values(
    std::span<const std::pair<TrackedSignal, BitVec>> tracked_now);

/// 2^16 saturating 8-bit counters plus the campaign-level virgin set.
/// Buckets are per-run (cleared by begin_run); the virgin set only grows.
class CoverageMap {
 public:
  CoverageMap();

  void record(uint32_t index, uint32_t weight);

  /// Clears the per-run buckets, keeping the virgin set.
  void begin_run();

  uint8_t bucket(uint32_t index) const { return buckets_[index]; }
  uint32_t populated() const { return populated_; }

  /// Bucket indices touched by the current run, unordered.
  std::span<const uint32_t> touched() const { return touched_; }
  /// Ascending copy of touched() — the run-delta bucket set.
  std::vector<uint32_t> delta_set() const;

  bool virgin_has(uint32_t index) const {
    return (virgin_[index >> 6] >> (index & 63)) & 1;
  }
  uint32_t virgin_count() const { return virgin_count_; }
  /// Buckets this run populated for the first time in the campaign.
  uint32_t newly_virgin() const { return newly_virgin_; }

  /// Bucket-wise max; virgin-wise OR. Associative and commutative.
  void merge(const CoverageMap& other);

  void clear_all();

  /// Raw 65536-byte bucket array, AFL map layout.
  void export_raw(const std::string& path) const;

 private:
  std::vector<uint8_t> buckets_;
  std::vector<uint64_t> virgin_;
  std::vector<uint32_t> touched_;
  uint32_t populated_ = 0;
  uint32_t virgin_count_ = 0;
  uint32_t newly_virgin_ = 0;
};

}  // namespace vgf
