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

#include <optional>
#include <string>
#include <vector>

#include "vgf/coverage.hpp"
#include "vgf/design.hpp"
#include "vgf/errors.hpp"

namespace vgf {

struct ClockSpec {
  std::string name;
  SignalId signal = 0;
  uint32_t period = 10;
  uint32_t duty_num = 1, duty_den = 2;  // h as a rational in (0,1)
  uint32_t phase = 0;
  uint32_t high_time = 5;  // round(period * h), in [1, period-1]
  std::optional<SignalId> differential_pin;
  uint64_t stable_after = 0;  // defaults to one full period
  std::optional<SignalId> stable_signal;
  bool derived = false;  // true for the generated half of a differential pair

  /// Clock level at timestep t.
  bool level(uint64_t t) const {
    uint64_t u = (t + period - (phase % period)) % period;
    return u < high_time;
  }
};

struct ResetSpec {
  std::string name;
  SignalId signal = 0;
  bool active_high = true;
  bool synchronous = true;
};

struct InputDomain {
  std::string name;
  std::optional<uint32_t> clock_index;  // nullopt = asynchronous domain
  EdgeKind drive_edge = EdgeKind::rising;
  std::vector<SignalId> inputs;  // config order
  uint32_t total_width = 0;
};

struct TrackedEntry {
  SignalId signal = 0;
  uint32_t weight = 1;
};

struct HarnessConfig {
  std::vector<ClockSpec> clocks;  // derived differential pairs appended
  std::vector<ResetSpec> resets;
  std::vector<InputDomain> domains;
  std::vector<TrackedEntry> tracked;  // may be empty: blackbox fuzzing
  std::vector<uint32_t> properties;   // armed assertion indices, config order
  CompressionKind compression = CompressionKind::compress_values;
  PrevShift prev_shift = PrevShift::whole_concat;
  bool use_weights = true;
  std::vector<std::pair<SignalId, BitVec>> init_overrides;
  uint32_t reference_period = 4;  // paces async-only designs and their reset

  uint32_t slowest_period() const {
    uint32_t p = 0;
    for (const ClockSpec& c : clocks) p = std::max(p, c.period);
    return p == 0 ? reference_period : p;
  }
};

/// Parses the line-oriented `section.key = value` format documented in
/// docs/config.md and resolves names against the design.
HarnessConfig load_config(const std::string& text, const Design& d);
HarnessConfig load_config_file(const std::string& path, const Design& d);

}  // namespace vgf
