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
#include "vgf/harness.hpp"
#include "vgf/parser.hpp"

using namespace vgf;

namespace {

std::string bench_path(const std::string& name) {
  return std::string(VGF_BENCH_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("bundled lock_case config loads and validates") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  const HarnessConfig& cfg = b.config;
  REQUIRE(cfg.clocks.size() == 1);
  CHECK(cfg.clocks[0].period == 2);
  CHECK(cfg.clocks[0].high_time == 1);
  REQUIRE(cfg.resets.size() == 1);
  CHECK(cfg.resets[0].active_high);
  CHECK(cfg.resets[0].synchronous);
  REQUIRE(cfg.domains.size() == 1);
  CHECK(cfg.domains[0].total_width == 8);
  REQUIRE(cfg.tracked.size() == 1);
  CHECK(cfg.tracked[0].signal == *b.design.find_signal("state"));
  REQUIRE(cfg.properties.size() == 1);
  CHECK(b.design.assertions[cfg.properties[0]].name == "unlocked");
}

TEST_CASE("config with an unknown tracked signal is rejected") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  std::string text = R"(
    clock.main.signal = clk
    clock.main.period = 2
    reset.main.signal = rst
    domain.d.clock = main
    domain.d.inputs = din
    track.phantom = 1
  )";
  CHECK_THROWS_AS(load_config(text, b.design), UnknownSignal);
}

TEST_CASE("an empty tracked set is allowed (blackbox degradation)") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  std::string text = R"(
    clock.main.signal = clk
    clock.main.period = 2
    reset.main.signal = rst
    domain.d.clock = main
    domain.d.inputs = din
  )";
  HarnessConfig cfg = load_config(text, b.design);
  CHECK(cfg.tracked.empty());
  CHECK(cfg.properties.size() == 1);  // defaults to all assertions
}

TEST_CASE("differential clock derives the inverted pair") {
  Design d = parse_design(SourceText{R"(
    module diff(input wire clkp, input wire clkn, input wire d, output wire q);
      assign q = d;
      p: assert property (1'b0);
    endmodule)"});
  std::string text = R"(
    clock.main.signal = clkp
    clock.main.period = 10
    clock.main.duty = 3/5
    clock.main.differential = clkn
    domain.d0.clock = main
    domain.d0.inputs = d
  )";
  HarnessConfig cfg = load_config(text, d);
  REQUIRE(cfg.clocks.size() == 2);
  const ClockSpec& inv = cfg.clocks[1];
  CHECK(inv.derived);
  CHECK(inv.signal == *d.find_signal("clkn"));
  CHECK(inv.period == 10);
  CHECK(inv.duty_num == 2);  // 1 - 3/5 = 2/5
  CHECK(inv.duty_den == 5);
  CHECK(inv.phase == 5);     // half a period
  CHECK(inv.high_time == 4);
}

TEST_CASE("differential pair complements outside transition instants") {
  Design d = parse_design(SourceText{R"(
    module diff(input wire clkp, input wire clkn, input wire d, output wire q);
      assign q = d;
      p: assert property (1'b0);
    endmodule)"});
  std::string text = R"(
    clock.main.signal = clkp
    clock.main.period = 10
    clock.main.duty = 3/5
    clock.main.differential = clkn
    domain.d0.clock = main
    domain.d0.inputs = d
  )";
  HarnessConfig cfg = load_config(text, d);
  const ClockSpec& base = cfg.clocks[0];
  const ClockSpec& inv = cfg.clocks[1];
  for (uint64_t t = 1; t < 200; ++t) {
    bool base_transition = base.level(t) != base.level(t - 1);
    bool inv_transition = inv.level(t) != inv.level(t - 1);
    if (base_transition || inv_transition) continue;
    INFO("t = ", t);
    CHECK(inv.level(t) == !base.level(t));
  }
}

TEST_CASE("reset holds for one period of the slowest clock") {
  Design d = parse_design(SourceText{R"(
    module two(input wire cka, input wire ckb, input wire rst, input wire d,
               output wire q);
      reg r = 1'b0;
      always @(posedge cka) begin
        if (rst) r <= 1'b0;
        else r <= d;
      end
      assign q = r;
      p: assert property (1'b0);
    endmodule)"});
  std::string text = R"(
    clock.a.signal = cka
    clock.a.period = 10
    clock.b.signal = ckb
    clock.b.period = 25
    reset.main.signal = rst
    domain.d0.clock = a
    domain.d0.inputs = d
  )";
  HarnessConfig cfg = load_config(text, d);
  Harness h(d, cfg, SimMode::accurate);
  uint64_t before = h.sim().now();
  h.apply_reset();
  CHECK(h.sim().now() - before == 25);
  CHECK(h.sim().read(*d.find_signal("rst")).is_zero());  // deasserted after
}

TEST_CASE("active-low reset drives 0 during hold and 1 after") {
  Design d = parse_design(SourceText{R"(
    module al(input wire clk, input wire rst_n, input wire d, output wire q);
      reg r = 1'b0;
      always @(posedge clk) begin
        if (!rst_n) r <= 1'b0;
        else r <= d;
      end
      assign q = r;
      p: assert property (1'b0);
    endmodule)"});
  std::string text = R"(
    clock.main.signal = clk
    clock.main.period = 4
    reset.main.signal = rst_n
    reset.main.active = low
    domain.d0.clock = main
    domain.d0.inputs = d
  )";
  HarnessConfig cfg = load_config(text, d);
  Harness h(d, cfg, SimMode::accurate);
  h.apply_reset();
  CHECK(h.sim().read(*d.find_signal("rst_n")).to_u64() == 1);
}

TEST_CASE("lock_case returns to its declared init after reset") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  Harness h(b.design, b.config, SimMode::accurate);
  // dirty the state first
  h.apply_reset();
  h.run_testcase(b.oracle.fault_input, 8);
  SignalId state = *b.design.find_signal("state");
  CHECK(h.sim().read(state).to_u64() != 0);
  h.apply_reset();
  CHECK(h.sim().read(state) == b.design.signals[state].init);
}

TEST_CASE("reset idempotence on design state") {
  Benchmark b = load_benchmark(bench_path("async_fifo"));
  Harness h(b.design, b.config, SimMode::accurate);
  h.apply_reset();
  h.run_testcase(b.oracle.fault_input, 4);
  h.apply_reset();
  std::vector<BitVec> once;
  for (const auto& s : b.design.signals)
    if (s.kind != SignalKind::input) once.push_back(h.sim().read(s.id));
  h.apply_reset();
  size_t i = 0;
  for (const auto& s : b.design.signals)
    if (s.kind != SignalKind::input) CHECK(h.sim().read(s.id) == once[i++]);
}

TEST_CASE("init overrides place registers in a custom starting state") {
  Benchmark b = load_benchmark(bench_path("counter_trojan"));
  std::ifstream in(bench_path("counter_trojan") + "/harness.cfg");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  text += "\ninit.counter = 0xE\n";
  HarnessConfig cfg = load_config(text, b.design);
  CoverageMap map;
  Harness h(b.design, cfg, SimMode::accurate, &map);
  h.apply_reset();
  CHECK(h.sim().read(*b.design.find_signal("counter")).to_u64() == 0xE);
  // one edge from 14 -> 15: immediate fault
  RunVerdict v = h.run_testcase(std::vector<uint8_t>{0}, 2);
  CHECK(v.is_fault());
}

TEST_CASE("input cursor consumes MSB-first with zero padding") {
  std::vector<uint8_t> bytes = {0xAB, 0xC0};  // 1010 1011 1100 0000
  InputCursor cur(bytes);
  CHECK(cur.take(4).to_u64() == 0xA);
  CHECK(cur.take(6).to_u64() == 0x2F);  // 1011 11
  CHECK_FALSE(cur.exhausted());
  // 6 bits of data remain (000000) then padding
  CHECK(cur.take(14).to_u64() == 0);  // 6 data zeros + 8 pad zeros
  CHECK(cur.exhausted());
  CHECK(cur.bits_consumed() == 24);
}

TEST_CASE("a 14-bit domain with 6 data bits left gets zero padding") {
  // mirrors the padding rule: 6 data bits + 8 zero bits
  std::vector<uint8_t> six_bits = {0xFC};  // 111111 00
  InputCursor cur(six_bits);
  cur.take(6);
  BitVec v = cur.take(14);
  CHECK(v.to_u64() == 0);  // remaining 2 data bits are 0, then padding
  CHECK(cur.bits_consumed() == 20);
}

TEST_CASE("empty buffers drive all zeros") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  Harness h(b.design, b.config, SimMode::accurate);
  h.apply_reset();
  RunVerdict v = h.run_testcase({}, 4);
  CHECK_FALSE(v.is_fault());
  CHECK(h.sim().read(*b.design.find_signal("din")).is_zero());
}

TEST_CASE("two same-clock domains slice one round in config order") {
  Design d = parse_design(SourceText{R"(
    module pair(input wire clk, input wire [7:0] a, input wire [7:0] b,
                output wire [7:0] q);
      assign q = a ^ b;
      p: assert property (1'b0);
    endmodule)"});
  std::string text = R"(
    clock.main.signal = clk
    clock.main.period = 4
    domain.first.clock = main
    domain.first.inputs = a
    domain.second.clock = main
    domain.second.inputs = b
  )";
  HarnessConfig cfg = load_config(text, d);
  Harness h(d, cfg, SimMode::accurate);
  std::vector<uint8_t> buf = {0xAB, 0xCD};
  InputCursor cur(buf);
  h.run_round(cur);
  CHECK(h.sim().read(*d.find_signal("a")).to_u64() == 0xAB);
  CHECK(h.sim().read(*d.find_signal("b")).to_u64() == 0xCD);
  CHECK(cur.bits_consumed() == 16);
}

TEST_CASE("scheduler conservation: bits consumed per round ignore content") {
  Benchmark b = load_benchmark(bench_path("async_fifo"));
  Harness h(b.design, b.config, SimMode::accurate);
  h.apply_reset();
  std::vector<uint8_t> loud(64, 0xFF);
  InputCursor cur_loud(loud);
  h.run_round(cur_loud);
  uint64_t consumed_loud = cur_loud.bits_consumed();

  Harness h2(b.design, b.config, SimMode::accurate);
  h2.apply_reset();
  std::vector<uint8_t> quiet(64, 0x00);
  InputCursor cur_quiet(quiet);
  h2.run_round(cur_quiet);
  CHECK(cur_quiet.bits_consumed() == consumed_loud);
  CHECK(consumed_loud % 8 == 0);
  CHECK(consumed_loud > 0);
}

TEST_CASE("lock_case faults on its key and stays clean on zeros") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  CoverageMap map;
  Harness h(b.design, b.config, SimMode::accurate, &map);
  h.apply_reset();
  RunVerdict fault = h.run_testcase(b.oracle.fault_input, 8);
  REQUIRE(fault.is_fault());
  CHECK(fault.property == "unlocked");
  CHECK(fault.events_observed >= 4);

  h.apply_reset();
  std::vector<uint8_t> zeros(16, 0);
  RunVerdict clean = h.run_testcase(zeros, 100);
  CHECK_FALSE(clean.is_fault());
}

TEST_CASE("counter trojan faults on any input after 15 cycles") {
  Benchmark b = load_benchmark(bench_path("counter_trojan"));
  for (uint8_t fill : {0x00, 0xFF, 0x5A}) {
    CoverageMap map;
    Harness h(b.design, b.config, SimMode::accurate, &map);
    h.apply_reset();
    std::vector<uint8_t> input(4, fill);
    RunVerdict v = h.run_testcase(input, 20);
    REQUIRE(v.is_fault());
    CHECK(v.property == "tj_active");
  }
}

TEST_CASE("verdicts are a pure function of design, config, input, cycles") {
  Benchmark b = load_benchmark(bench_path("seq_trojan"));
  auto run = [&](std::span<const uint8_t> input) {
    CoverageMap map;
    Harness h(b.design, b.config, SimMode::accurate, &map);
    h.apply_reset();
    RunVerdict v = h.run_testcase(input, 8);
    return std::tuple{v.is_fault(), v.fault_time, v.sim_cycles, v.events_observed};
  };
  std::vector<uint8_t> input = {0x12, 0x9E, 0xD6, 0x00};
  CHECK(run(input) == run(input));
  // and a second harness over dirty state agrees after reset
  CoverageMap map;
  Harness h(b.design, b.config, SimMode::accurate, &map);
  h.apply_reset();
  h.run_testcase(std::vector<uint8_t>{0xFF, 0xFF}, 8);
  h.apply_reset();
  RunVerdict v = h.run_testcase(input, 8);
  CHECK(std::tuple{v.is_fault(), v.fault_time, v.sim_cycles, v.events_observed} ==
        run(input));
}

TEST_CASE("clockless designs accept inputs paced by the reference") {
  Design d = parse_design(SourceText{R"(
    module comb_only(input wire [3:0] a, input wire [3:0] b, output wire [3:0] y);
      assign y = a + b;
      over: assert property (y == 4'd15);
    endmodule)"});
  std::string text = R"(
    domain.d0.inputs = a, b
    pll.reference_period = 3
  )";
  HarnessConfig cfg = load_config(text, d);
  CHECK(cfg.slowest_period() == 3);
  CoverageMap map;
  Harness h(d, cfg, SimMode::accurate, &map);
  h.apply_reset();
  std::vector<uint8_t> input = {0x87};  // a=8, b=7 -> y=15
  RunVerdict v = h.run_testcase(input, 2);
  CHECK(v.is_fault());
}

TEST_CASE("replay reproduces campaign verdicts and traces byte-for-byte") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  ReplayResult r1 = replay_bytes(b.design, b.config, b.oracle.fault_input,
                                 SimMode::accurate, b.oracle.max_cycles);
  CHECK(r1.verdict.is_fault());
  CHECK(r1.verdict.property == b.oracle.property);
  CHECK_FALSE(r1.trace.empty());

  ReplayResult r2 = replay_bytes(b.design, b.config, b.oracle.fault_input,
                                 SimMode::accurate, b.oracle.max_cycles);
  CHECK(r1.trace == r2.trace);
  CHECK(r1.verdict.fault_time == r2.verdict.fault_time);
}

TEST_CASE("replaying an empty file is clean on the lock") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  std::string path = "empty_input_test.bin";
  std::ofstream(path, std::ios::binary).close();
  ReplayResult r = replay(b.design, b.config, path, SimMode::accurate, 8);
  CHECK_FALSE(r.verdict.is_fault());
  std::remove(path.c_str());
}

TEST_CASE("replaying a missing file raises IoError") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  CHECK_THROWS_AS(replay(b.design, b.config, "no/such/file.bin", SimMode::accurate, 8),
                  IoError);
}

TEST_CASE("asynchronous resets take effect without a clock edge") {
  Design d = parse_design(SourceText{R"(
    module ar(input wire clk, input wire rst, input wire d, output wire q);
      reg r = 1'b0;
      always @(posedge clk or posedge rst) begin
        if (rst) r <= 1'b0;
        else r <= d;
      end
      assign q = r;
      p: assert property (1'b0);
    endmodule)"});
  std::string text = R"(
    clock.main.signal = clk
    clock.main.period = 4
    reset.main.signal = rst
    reset.main.style = async
    domain.d0.clock = main
    domain.d0.inputs = d
  )";
  HarnessConfig cfg = load_config(text, d);
  Harness h(d, cfg, SimMode::accurate);
  // set the register through normal operation
  h.apply_reset();
  std::vector<uint8_t> ones = {0xFF};
  h.run_testcase(ones, 2);
  CHECK(h.sim().read(*d.find_signal("r")).to_u64() == 1);
  // async reset clears it immediately at assertion
  h.sim().poke(*d.find_signal("rst"), BitVec(1, 1));
  h.sim().clock_edge(*d.find_signal("rst"), EdgeKind::rising);
  CHECK(h.sim().read(*d.find_signal("r")).to_u64() == 0);
}

TEST_CASE("clock-stable signal asserts after the configured delay") {
  Design d = parse_design(SourceText{R"(
    module st(input wire clk, input wire pll_ok, input wire d, output wire q);
      reg r = 1'b0;
      always @(posedge clk) begin
        if (pll_ok) r <= d;
      end
      assign q = r;
      p: assert property (1'b0);
    endmodule)"});
  std::string text = R"(
    clock.main.signal = clk
    clock.main.period = 4
    clock.main.stable_signal = pll_ok
    clock.main.stable_after = 6
    domain.d0.clock = main
    domain.d0.inputs = d
  )";
  HarnessConfig cfg = load_config(text, d);
  Harness h(d, cfg, SimMode::accurate);
  SignalId pll_ok = *d.find_signal("pll_ok");
  CHECK(h.sim().read(pll_ok).is_zero());
  std::vector<uint8_t> input = {0xFF, 0xFF, 0xFF};
  InputCursor cur(input);
  h.run_round(cur);  // 4 timesteps: still before 6
  CHECK(h.sim().read(pll_ok).is_zero());
  h.run_round(cur);  // through t=8: stable asserted
  CHECK(h.sim().read(pll_ok).to_u64() == 1);
}
