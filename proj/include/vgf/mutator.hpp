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
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace vgf {

using Rng = std::mt19937_64;

struct MutatorConfig {
  bool trimming = false;            // detrimental for these targets; off by default
  bool deterministic_stage = false; // slows growth with input size; off by default
  size_t max_len = 4096;
  uint64_t rng_seed = 0;
};

/// 1..64 stacked havoc operations: bit/byte flips, arithmetic, interesting
/// value substitution, block duplicate/remove/overwrite, splice against a
/// random queue entry (skipped when the queue has no other entry).
std::vector<uint8_t> havoc(const MutatorConfig& cfg,
                           std::span<const uint8_t> parent,
                           std::span<const std::vector<uint8_t>> queue,
                           Rng& rng);

/// Fixed deterministic mutation stream: walking 1/2/4-bit flips, byte flips,
/// 8/16/32-bit arithmetic +-1..35, interesting-value substitutions. Child
/// count is a fixed, linear function of the input length.
void for_each_deterministic_child(
    std::span<const uint8_t> parent,
    const std::function<bool(std::span<const uint8_t>)>& visit);

uint64_t deterministic_child_count(size_t len);

/// Coverage-preserving shrink: removes power-of-two sized blocks (down to
/// 4 bytes) while `still_good` confirms the run-delta bucket set is intact.
/// `still_good` is called once per removal attempt.
std::vector<uint8_t> trim_testcase(
    std::span<const uint8_t> input,
    const std::function<bool(std::span<const uint8_t>)>& still_good);

}  // namespace vgf
