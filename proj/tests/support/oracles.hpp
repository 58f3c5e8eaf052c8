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
//
// Independent ground-truth models for the bundled benchmarks. These model
// the documented behavior directly (keys, counters, clock schedules) and
// never touch the parser, simulator, or harness, so they can serve as
// oracles for them.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vgf::testsup {

// ---- lock benches -----------------------------------------------------
// Stage model: stages 0..4, advance on the stage key, fall back to 0
// otherwise; stage 4 is unlocked. Keys per bench README: A5 5A C3 96.
int lock_next_stage(int stage, uint8_t byte);
bool lock_unlocks(std::span<const uint8_t> bytes);
// Shortest unlocking byte sequence via breadth-first search over stages.
std::vector<uint8_t> lock_shortest_unlock();

// ---- counter_trojan ----------------------------------------------------
// Rising edges after reset deassert until the 4-bit counter saturates.
int counter_fault_edge();

// ---- seq_trojan ---------------------------------------------------------
// 16-bit shift of the last two bytes; armed once they spell 9E D6; the flag
// latches one edge later. Returns edges-to-armed or nullopt.
std::optional<int> seq_armed_after(std::span<const uint8_t> bytes, int max_edges);
std::vector<uint8_t> seq_shortest_arm();

// ---- async_fifo ----------------------------------------------------------
// Exact re-model of the documented harness timing: write clock period 3,
// read clock period 7, duty 1/2, phase 0, reset held t=1..7, clocks
// processed write-first on coincident edges, inputs driven at write rising
// edges. One bool per write edge decides write vs idle.
struct FifoRun {
  bool fault = false;
  int fault_time = 0;
  int edges_consumed = 0;
};
FifoRun fifo_accurate(std::span<const uint8_t> wr_en_bits, int max_t);

// Shortest write/idle string that overflows, searched in length order.
std::vector<uint8_t> fifo_shortest_fault(int max_edges);

// Lockstep (collapsed-clock) model: one shared tick per round; the reader
// drains every tick the FIFO is non-empty. True when NO write/idle string
// up to max_len reaches occupancy > 4.
bool fifo_fast_unreachable(int max_len);

// Packs write/idle decisions into harness input bytes: write-enable is the
// leading bit of each 8-bit slice.
std::vector<uint8_t> fifo_bits_to_bytes(std::span<const uint8_t> wr_en_bits);

// ---- fitness recomputation ----------------------------------------------
// Naive recomputation of the four bucket statistics over raw (value) lists,
// product-based (with exponent rescaling) rather than log-based.
struct FitnessRef {
  double geo;
  double arith;
  double count;
  double total;
};
FitnessRef recompute_fitness(std::span<const uint8_t> bucket_values);

}  // namespace vgf::testsup
