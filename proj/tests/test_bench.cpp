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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "support/oracles.hpp"
#include "vgf/bench.hpp"
#include "vgf/depgraph.hpp"
#include "vgf/harness.hpp"

using namespace vgf;

namespace {

std::string bench_path(const std::string& name) {
  return std::string(VGF_BENCH_DIR) + "/" + name;
}

size_t line_count(const std::string& path) {
  std::ifstream in(path);
  size_t n = 0;
  std::string line;
  while (std::getline(in, line)) ++n;
  return n;
}

}  // namespace

TEST_CASE("five benchmarks load with all four artifacts") {
  auto benches = bundled_benchmarks(VGF_BENCH_DIR);
  REQUIRE(benches.size() == 5);
  CHECK(benches[0].name == "lock_case");
  CHECK(benches[1].name == "lock_micro");
  CHECK(benches[2].name == "counter_trojan");
  CHECK(benches[3].name == "seq_trojan");
  CHECK(benches[4].name == "async_fifo");
  for (const auto& b : benches) {
    INFO(b.name);
    CHECK(line_count(b.design_path) <= 200);
    CHECK_FALSE(b.oracle.fault_input.empty() && b.name != "counter_trojan");
    CHECK_FALSE(b.oracle.property.empty());
    // 8-bit input domains throughout
    for (const auto& dom : b.config.domains) CHECK(dom.total_width == 8);
  }
}

TEST_CASE("every oracle input replays to its fault in accurate mode") {
  for (const auto& b : bundled_benchmarks(VGF_BENCH_DIR)) {
    INFO(b.name);
    ReplayResult r = replay_bytes(b.design, b.config, b.oracle.fault_input,
                                  SimMode::accurate, b.oracle.max_cycles);
    REQUIRE(r.verdict.is_fault());
    CHECK(r.verdict.property == b.oracle.property);
  }
}

TEST_CASE("lock oracle: BFS on the independent model gives the 4-byte key") {
  auto key = testsup::lock_shortest_unlock();
  REQUIRE(key.size() == 4);
  Benchmark lock_case = load_benchmark(bench_path("lock_case"));
  CHECK(key == lock_case.oracle.fault_input);
  Benchmark lock_micro = load_benchmark(bench_path("lock_micro"));
  CHECK(key == lock_micro.oracle.fault_input);
  CHECK(testsup::lock_unlocks(key));
  std::vector<uint8_t> wrong = key;
  wrong[2] ^= 0x01;
  CHECK_FALSE(testsup::lock_unlocks(wrong));
}

TEST_CASE("lock pair: same property through different structures") {
  Benchmark a = load_benchmark(bench_path("lock_case"));
  Benchmark b = load_benchmark(bench_path("lock_micro"));

  // identical verdict on identical inputs
  for (auto input : {std::vector<uint8_t>{0xA5, 0x5A, 0xC3, 0x96},
                     std::vector<uint8_t>{0x00, 0xA5, 0x5A, 0xC3, 0x96},
                     std::vector<uint8_t>{0xA5, 0x5A, 0xC3, 0x00, 0x96},
                     std::vector<uint8_t>{0x11, 0x22}}) {
    ReplayResult ra = replay_bytes(a.design, a.config, input, SimMode::accurate, 10);
    ReplayResult rb = replay_bytes(b.design, b.config, input, SimMode::accurate, 10);
    CHECK(ra.verdict.is_fault() == rb.verdict.is_fault());
  }

  // different dependency structure: case FSM vs microcode ROM
  Selection dfa_case = analyze(a.design, AnalysisKind::dfa, TauLevel::max, {});
  Selection dfa_micro = analyze(b.design, AnalysisKind::dfa, TauLevel::max, {});
  CHECK(dfa_case.picks.empty());
  CHECK(dfa_micro.picks.empty());
  Selection cfa_case = analyze(a.design, AnalysisKind::cfa, TauLevel::max, {});
  Selection cfa_micro = analyze(b.design, AnalysisKind::cfa, TauLevel::max, {});
  CHECK(cfa_case.picks.size() == 1);   // the state register
  CHECK(cfa_micro.picks.size() == 2);  // state register + rom-index match wire
}

TEST_CASE("counter trojan faults exactly at the oracle edge count") {
  Benchmark b = load_benchmark(bench_path("counter_trojan"));
  CHECK(testsup::counter_fault_edge() == 15);
  ReplayResult r = replay_bytes(b.design, b.config, {}, SimMode::accurate, 20);
  REQUIRE(r.verdict.is_fault());
  // period-2 clock: reset ends at t=2, edge k lands at t=2+2k
  CHECK(r.verdict.fault_time == 2 + 2 * 15);
}

TEST_CASE("seq trojan arms on the 2-byte key and the model agrees") {
  Benchmark b = load_benchmark(bench_path("seq_trojan"));
  auto key = testsup::seq_shortest_arm();
  CHECK(key == b.oracle.fault_input);
  auto edges = testsup::seq_armed_after(key, 8);
  REQUIRE(edges.has_value());
  CHECK(*edges == 3);  // two key bytes shift in, the flag latches on the third

  ReplayResult r = replay_bytes(b.design, b.config, key, SimMode::accurate, 8);
  REQUIRE(r.verdict.is_fault());
  CHECK(r.verdict.fault_time == 2 + 2 * *edges);

  // position independence: the key may appear later in the stream
  std::vector<uint8_t> shifted = {0x31, 0x41, 0x9E, 0xD6};
  ReplayResult r2 = replay_bytes(b.design, b.config, shifted, SimMode::accurate, 8);
  CHECK(r2.verdict.is_fault());
}

TEST_CASE("fifo oracle: shortest fault string replays through the harness") {
  Benchmark b = load_benchmark(bench_path("async_fifo"));
  auto bits = testsup::fifo_shortest_fault(16);
  REQUIRE_FALSE(bits.empty());
  CHECK(bits.size() == 12);
  CHECK(testsup::fifo_bits_to_bytes(bits) == b.oracle.fault_input);

  FifoRun model = testsup::fifo_accurate(bits, 120);
  REQUIRE(model.fault);

  ReplayResult r = replay_bytes(b.design, b.config, b.oracle.fault_input,
                                SimMode::accurate, b.oracle.max_cycles);
  REQUIRE(r.verdict.is_fault());
  CHECK(r.verdict.property == "overflow");
  // the independent timing model and the harness agree on the fault instant
  CHECK(r.verdict.fault_time == static_cast<uint64_t>(model.fault_time));
}

TEST_CASE("fifo fast mode cannot reach the overflow for any short sequence") {
  Benchmark b = load_benchmark(bench_path("async_fifo"));
  CHECK_FALSE(b.oracle.fast_mode_reachable);
  CHECK(testsup::fifo_fast_unreachable(16));

  // the artifact agrees: the oracle input is clean under fast simulation
  ReplayResult r = replay_bytes(b.design, b.config, b.oracle.fault_input,
                                SimMode::fast, 24);
  CHECK_FALSE(r.verdict.is_fault());

  // and exhaustively for every write/idle pattern up to length 8
  for (uint32_t pattern = 0; pattern < (1u << 8); ++pattern) {
    std::vector<uint8_t> bits(8);
    for (int i = 0; i < 8; ++i) bits[i] = (pattern >> (7 - i)) & 1;
    ReplayResult rr = replay_bytes(b.design, b.config,
                                   testsup::fifo_bits_to_bytes(bits),
                                   SimMode::fast, 10);
    if (rr.verdict.is_fault()) {
      INFO("pattern ", pattern);
      FAIL("fast mode reached the overflow");
    }
  }
}

TEST_CASE("fifo data bits have no dependency path to the property") {
  // justifies searching over write/idle strings only
  Benchmark b = load_benchmark(bench_path("async_fifo"));
  DependencyGraph g = build_graph(b.design);
  PropertyDistance pd = property_distance(g, AnalysisKind::dcfa, b.design, {});
  CHECK_FALSE(pd.pd[*b.design.find_signal("wr_data")].has_value());
  CHECK(pd.pd[*b.design.find_signal("wr_en")].has_value());
}

TEST_CASE("lock benches stay clean without the key under accurate and fast modes") {
  for (const auto& name : {"lock_case", "lock_micro"}) {
    Benchmark b = load_benchmark(bench_path(name));
    std::vector<uint8_t> junk = {0xA5, 0xA5, 0xC3, 0x96, 0x5A, 0x00, 0x01};
    CHECK_FALSE(testsup::lock_unlocks(junk));
    for (SimMode mode : {SimMode::accurate, SimMode::fast}) {
      ReplayResult r = replay_bytes(b.design, b.config, junk, mode, 10);
      INFO(name);
      CHECK_FALSE(r.verdict.is_fault());
    }
  }
}
