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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "vgf/config.hpp"
#include "vgf/coverage.hpp"
#include "vgf/design.hpp"
#include "vgf/sim.hpp"

namespace vgf {

/// MSB-first bit reader over a testcase byte buffer; reads past the end
/// return zero padding but still count as consumed.
class InputCursor {
 public:
  InputCursor() = default;
  explicit InputCursor(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  BitVec take(uint32_t width) {
    BitVec v = BitVec::zeros(width);
    for (uint32_t i = 0; i < width; ++i) {
      v = v.shl(1);
      uint64_t pos = bitpos_ + i;
      if (pos < bytes_.size() * 8) {
        uint8_t byte = bytes_[pos / 8];
        if ((byte >> (7 - pos % 8)) & 1) v = bv_or(v, BitVec(width, 1), width);
      }
    }
    bitpos_ += width;
    return v;
  }

  bool exhausted() const { return bitpos_ >= bytes_.size() * 8; }
  uint64_t bits_consumed() const { return bitpos_; }

 private:
  std::span<const uint8_t> bytes_;
  uint64_t bitpos_ = 0;
};

struct RunVerdict {
  enum class Outcome : uint8_t { clean, fault };
  Outcome outcome = Outcome::clean;
  std::string property;  // first property that fired
  uint32_t property_index = 0;
  uint64_t fault_time = 0;
  uint64_t events_observed = 0;
  uint64_t sim_cycles = 0;

  bool is_fault() const { return outcome == Outcome::fault; }
};

/// Drives one simulator instance per the harness configuration: virtual PLL
/// clock generation, reset control, round-robin input scheduling, tracked
/// signal monitoring into a CoverageMap, and assertion checking. Assertions
/// report faults without stopping the simulator; the run stops because one
/// fault is enough for a verdict.
class Harness {
 public:
  Harness(const Design& d, const HarnessConfig& cfg, SimMode mode,
          CoverageMap* map = nullptr);

  Harness(const Harness&) = delete;
  Harness& operator=(const Harness&) = delete;

  /// Holds every reset at its active level for one period of the slowest
  /// clock (clocks keep running), applies init overrides, deasserts.
  /// Coverage and property checks are suppressed throughout.
  void apply_reset();

  RunVerdict run_testcase(std::span<const uint8_t> input, uint32_t max_cycles);

  /// One full scheduling round driven from an external cursor.
  void run_round(InputCursor& cursor);

  /// Timesteps per scheduling round (accurate mode): slowest clock period.
  uint32_t round_length() const { return cfg_.slowest_period(); }

  Simulator& sim() { return *sim_; }
  const HarnessConfig& config() const { return cfg_; }
  const Design& design() const { return *design_; }

  void set_trace(std::vector<std::string>* out) { trace_ = out; }

  uint64_t events_observed() const { return events_observed_; }
  uint64_t sim_cycles() const { return sim_cycles_; }

 private:
  void on_change(const ChangeEvent& ev);
  void check_properties();
  void step_one_timestep(InputCursor* cursor);
  void drive_domain(const InputDomain& dom, InputCursor& cursor);
  void fast_round(InputCursor& cursor);
  void zero_data_inputs();
  bool faulted() const { return fault_index_ >= 0; }

  const Design* design_;
  HarnessConfig cfg_;
  CoverageMap* map_;
  std::unique_ptr<Simulator> sim_;

  std::vector<CompiledExpr> property_exprs_;
  std::vector<uint8_t> clock_level_;
  std::vector<uint8_t> stable_level_;
  std::vector<uint32_t> weight_of_;        // per SignalId (tracked only)
  std::vector<TrackedSignal> tracked_meta_;  // config order, for vectorize
  std::vector<uint32_t> tracked_slot_;       // SignalId -> meta index + 1

  bool suppress_ = true;
  int32_t fault_index_ = -1;  // index into cfg_.properties
  uint64_t fault_time_ = 0;
  uint64_t events_observed_ = 0;
  uint64_t sim_cycles_ = 0;
  std::vector<std::string>* trace_ = nullptr;
  std::vector<std::pair<TrackedSignal, BitVec>> vec_buf_;
  std::vector<std::pair<SignalId, BitVec>> input_buf_;
};

struct ReplayResult {
  RunVerdict verdict;
  std::vector<std::string> trace;
};

/// Standalone mode: reset, run the recorded input, dump the change trace.
ReplayResult replay(const Design& d, const HarnessConfig& cfg,
                    const std::string& input_path, SimMode mode,
                    uint32_t max_cycles);

ReplayResult replay_bytes(const Design& d, const HarnessConfig& cfg,
                          std::span<const uint8_t> input, SimMode mode,
                          uint32_t max_cycles);

}  // namespace vgf
