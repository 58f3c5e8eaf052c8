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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "support/oracles.hpp"
#include "vgf/bench.hpp"
#include "vgf/forkserver.hpp"
#include "vgf/fuzzer.hpp"

using namespace vgf;

namespace {

std::string bench_path(const std::string& name) {
  return std::string(VGF_BENCH_DIR) + "/" + name;
}

CoverageMap delta_with(std::initializer_list<std::pair<uint32_t, uint32_t>> entries) {
  CoverageMap map;
  for (auto [idx, weight] : entries) map.record(idx, weight);
  return map;
}

Testcase tc_of(size_t len, uint64_t t) {
  Testcase tc;
  tc.bytes.assign(len, 0);
  tc.exec_time = t;
  return tc;
}

}  // namespace

TEST_CASE("afl_default score is length times exec time") {
  CoverageMap empty;
  CHECK(score(FitnessKind::afl_default, tc_of(10, 2), empty) == 20.0);
  CHECK(score(FitnessKind::afl_default, tc_of(0, 100), empty) == 0.0);
}

TEST_CASE("bucket statistics over the {4,16} delta map") {
  CoverageMap map = delta_with({{100, 4}, {200, 16}});
  Testcase tc = tc_of(1, 1);
  CHECK(score(FitnessKind::geo_mean, tc, map) == doctest::Approx(8.0));
  CHECK(score(FitnessKind::arith_mean, tc, map) == doctest::Approx(10.0));
  CHECK(score(FitnessKind::bucket_count, tc, map) == 2.0);
  CHECK(score(FitnessKind::bucket_total, tc, map) == 20.0);
}

TEST_CASE("empty delta maps score zero on every bucket statistic") {
  CoverageMap empty;
  Testcase tc = tc_of(5, 5);
  CHECK(score(FitnessKind::geo_mean, tc, empty) == 0.0);
  CHECK(score(FitnessKind::arith_mean, tc, empty) == 0.0);
  CHECK(score(FitnessKind::bucket_count, tc, empty) == 0.0);
  CHECK(score(FitnessKind::bucket_total, tc, empty) == 0.0);
}

TEST_CASE("fitness closed forms match an independent recomputation") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 100; ++round) {
    CoverageMap map;
    std::vector<uint8_t> values;
    uint32_t n = 1 + rng() % 256;
    for (uint32_t i = 0; i < n; ++i) {
      uint32_t idx = rng() % kMapSize;
      if (map.bucket(idx) != 0) continue;
      uint8_t val = 1 + rng() % 255;
      map.record(idx, val);
      values.push_back(val);
    }
    testsup::FitnessRef ref = testsup::recompute_fitness(values);
    Testcase tc = tc_of(3, 7);
    double geo = score(FitnessKind::geo_mean, tc, map);
    CHECK(std::abs(geo - ref.geo) <=
          std::max(std::abs(ref.geo) * 1e-12, 1e-12));
    CHECK(score(FitnessKind::arith_mean, tc, map) == doctest::Approx(ref.arith));
    CHECK(score(FitnessKind::bucket_count, tc, map) == ref.count);
    CHECK(score(FitnessKind::bucket_total, tc, map) == ref.total);
  }
}

TEST_CASE("champions install on unseen buckets") {
  Queue q;
  CoverageMap map = delta_with({{42, 1}});
  Testcase tc = tc_of(4, 10);
  update_champions(q, tc, map, FitnessKind::afl_default, 40.0);
  REQUIRE(q.champions.count(42) == 1);
  CHECK(q.champions[42].score == 40.0);
}

TEST_CASE("afl_default replaces on smaller score") {
  Queue q;
  CoverageMap map = delta_with({{7, 1}});
  update_champions(q, tc_of(10, 2), map, FitnessKind::afl_default, 20.0);
  auto replaced = update_champions(q, tc_of(6, 2), map, FitnessKind::afl_default, 12.0);
  CHECK(replaced == std::vector<uint32_t>{7});
  CHECK(q.champions[7].score == 12.0);
  // larger challenger keeps the incumbent
  replaced = update_champions(q, tc_of(30, 2), map, FitnessKind::afl_default, 60.0);
  CHECK(replaced.empty());
  CHECK(q.champions[7].score == 12.0);
}

TEST_CASE("maximizing variants keep the highest and ties keep the incumbent") {
  for (auto fit : {FitnessKind::geo_mean, FitnessKind::arith_mean,
                   FitnessKind::bucket_count, FitnessKind::bucket_total}) {
    Queue q;
    CoverageMap map = delta_with({{9, 3}});
    Testcase first = tc_of(1, 1);
    first.bytes = {1};
    update_champions(q, first, map, fit, 3.0);
    // tie: incumbent stays
    Testcase tie = tc_of(1, 1);
    tie.bytes = {2};
    CHECK(update_champions(q, tie, map, fit, 3.0).empty());
    CHECK(q.champions[9].bytes == std::vector<uint8_t>{1});
    // strictly better: replaced
    Testcase better = tc_of(1, 1);
    better.bytes = {3};
    CHECK(update_champions(q, better, map, fit, 5.0).size() == 1);
    CHECK(q.champions[9].bytes == std::vector<uint8_t>{3});
    // afl_default bias restated: the minimizing default prefers the smaller
    // score where every maximizing variant prefers the larger
    Queue q2;
    update_champions(q2, first, map, FitnessKind::afl_default, 3.0);
    CHECK(update_champions(q2, better, map, FitnessKind::afl_default, 5.0).empty());
  }
}

TEST_CASE("havoc is deterministic for a fixed rng state") {
  MutatorConfig cfg;
  cfg.max_len = 64;
  std::vector<uint8_t> parent = {0x00};
  std::vector<std::vector<uint8_t>> queue = {parent};
  Rng rng1(123), rng2(123);
  for (int i = 0; i < 100; ++i)
    CHECK(havoc(cfg, parent, queue, rng1) == havoc(cfg, parent, queue, rng2));
}

TEST_CASE("splice degrades to havoc-only with a single queue entry") {
  MutatorConfig cfg;
  std::vector<uint8_t> parent = {1, 2, 3, 4};
  std::vector<std::vector<uint8_t>> queue = {parent};
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    auto child = havoc(cfg, parent, queue, rng);  // must not crash or hang
    CHECK(child.size() <= cfg.max_len);
  }
}

TEST_CASE("havoc children never exceed the configured maximum length") {
  MutatorConfig cfg;
  cfg.max_len = 4096;
  std::vector<uint8_t> parent(64, 0xAA);
  std::vector<std::vector<uint8_t>> queue = {parent, std::vector<uint8_t>(100, 0x55)};
  Rng rng(99);
  size_t longest = 0;
  for (int i = 0; i < 10000; ++i) {
    auto child = havoc(cfg, parent, queue, rng);
    longest = std::max(longest, child.size());
    CHECK(child.size() <= 4096);
  }
  CHECK(longest > 64);  // growth does happen, it is just bounded
}

TEST_CASE("deterministic stage child counts are exact and linear") {
  CHECK(deterministic_child_count(1) == 100);
  CHECK(deterministic_child_count(8) == 1778);
  CHECK(deterministic_child_count(32) == 8066);
  // linear for len >= 4: constant first difference
  uint64_t d = deterministic_child_count(5) - deterministic_child_count(4);
  for (size_t len = 5; len <= 40; ++len)
    CHECK(deterministic_child_count(len) - deterministic_child_count(len - 1) == d);
  // the emitted stream length matches the closed form
  for (size_t len : {1, 2, 3, 4, 8, 32}) {
    std::vector<uint8_t> parent(len, 0x00);
    uint64_t emitted = 0;
    for_each_deterministic_child(parent, [&](std::span<const uint8_t>) {
      ++emitted;
      return true;
    });
    CHECK(emitted == deterministic_child_count(len));
  }
}

TEST_CASE("deterministic stage starts with the eight walking bit flips") {
  std::vector<uint8_t> parent = {0x00};
  std::vector<std::vector<uint8_t>> children;
  for_each_deterministic_child(parent, [&](std::span<const uint8_t> c) {
    children.emplace_back(c.begin(), c.end());
    return children.size() < 8;
  });
  REQUIRE(children.size() == 8);
  for (int b = 0; b < 8; ++b) {
    REQUIRE(children[b].size() == 1);
    CHECK(children[b][0] == (0x80 >> b));
  }
}

TEST_CASE("trim removes padding while the delta set is preserved") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  CoverageMap map;
  Harness h(b.design, b.config, SimMode::accurate, &map);

  std::vector<uint8_t> padded = b.oracle.fault_input;
  padded.resize(32, 0x00);  // trailing zeros beyond the fault point

  auto run_delta = [&](std::span<const uint8_t> input) {
    map.begin_run();
    h.apply_reset();
    h.run_testcase(input, 12);
    return map.delta_set();
  };
  std::vector<uint32_t> want = run_delta(padded);

  auto trimmed = trim_testcase(
      padded, [&](std::span<const uint8_t> cand) { return run_delta(cand) == want; });
  CHECK(trimmed.size() < padded.size());
  CHECK(trimmed.size() >= 4);
  CHECK(run_delta(trimmed) == want);
  // the trimmed input still faults
  h.apply_reset();
  CHECK(h.run_testcase(trimmed, 12).is_fault());
}

TEST_CASE("minimal inputs pass through trim unchanged") {
  std::vector<uint8_t> tiny = {0x42};
  auto out = trim_testcase(tiny, [](std::span<const uint8_t>) { return true; });
  CHECK(out == tiny);
}

TEST_CASE("lock_case campaign with CFA-selected signals finds the fault") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  CampaignOptions opts;
  opts.analysis = AnalysisKind::cfa;
  opts.tau = TauLevel::max8;
  opts.seed = 1;
  opts.exec_budget = 1000000;
  opts.max_cycles = 8;
  opts.max_len = 8;
  CampaignResult r = run_campaign(b.design, b.config, opts);
  REQUIRE(r.report.first_fault().has_value());
  CHECK(r.report.first_fault_execs.count("unlocked") == 1);
  REQUIRE_FALSE(r.crashes.empty());
  CHECK(r.crashes[0].property == "unlocked");

  // the crash artifact replays to the same fault
  ReplayResult replayed = replay_bytes(b.design, b.config, r.crashes[0].input,
                                       SimMode::accurate, opts.max_cycles);
  CHECK(replayed.verdict.is_fault());
  CHECK(replayed.verdict.property == "unlocked");
}

TEST_CASE("campaigns are reproducible from the seed") {
  Benchmark b = load_benchmark(bench_path("seq_trojan"));
  CampaignOptions opts;
  opts.analysis = AnalysisKind::dfa;
  opts.tau = TauLevel::max8;
  opts.seed = 33;
  opts.exec_budget = 30000;
  opts.max_cycles = 8;
  opts.max_len = 8;
  CampaignResult r1 = run_campaign(b.design, b.config, opts);
  CampaignResult r2 = run_campaign(b.design, b.config, opts);
  CHECK(r1.report.to_json() == r2.report.to_json());
  REQUIRE(r1.crashes.size() == r2.crashes.size());
  for (size_t i = 0; i < r1.crashes.size(); ++i)
    CHECK(r1.crashes[i].input == r2.crashes[i].input);
}

TEST_CASE("blackbox ablation still runs but never populates the map") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  HarnessConfig blind = b.config;
  blind.tracked.clear();
  CampaignOptions opts;
  opts.seed = 5;
  opts.exec_budget = 5000;
  opts.max_cycles = 8;
  opts.max_len = 8;
  CampaignResult r = run_campaign(b.design, blind, opts);
  CHECK(r.report.execs_total == 5000);
  CHECK(r.report.buckets_populated == 0);
  CHECK(r.report.queue_entries == 1);  // only the seed survives
  CHECK(r.report.champions == 0);
}

TEST_CASE("single worker equals the one-worker contract of multi-worker mode") {
  Benchmark b = load_benchmark(bench_path("counter_trojan"));
  CampaignOptions one;
  one.seed = 9;
  one.exec_budget = 400;
  one.max_cycles = 20;
  one.workers = 1;
  CampaignResult a = run_campaign(b.design, b.config, one);
  CampaignResult c = run_campaign(b.design, b.config, one);
  CHECK(a.report.to_json() == c.report.to_json());

  CampaignOptions two = one;
  two.workers = 2;
  CampaignResult d2 = run_campaign(b.design, b.config, two);
  CHECK(d2.report.execs_total == 400);
  CHECK(d2.report.first_fault().has_value());
}

TEST_CASE("forkserver requests reuse one simulator across many resets") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  CoverageMap map;
  Harness h(b.design, b.config, SimMode::accurate, &map);
  uint32_t faults = 0;
  for (int i = 0; i < 1000; ++i) {
    std::span<const uint8_t> input =
        (i % 3 == 0) ? std::span<const uint8_t>(b.oracle.fault_input)
                     : std::span<const uint8_t>();
    uint32_t status = serve_request(h, input, 8);
    if (i % 3 == 0) {
      CHECK(status == (kStatusFaultBase | 0));
      ++faults;
    } else {
      CHECK(status == kStatusClean);
    }
  }
  CHECK(faults == 334);
}

TEST_CASE("pipe protocol answers framed requests and rejects short frames") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  CoverageMap map;
  Harness h(b.design, b.config, SimMode::accurate, &map);

  int to_server[2], from_server[2];
  REQUIRE(::pipe(to_server) == 0);
  REQUIRE(::pipe(from_server) == 0);

  std::thread client([&] {
    auto send = [&](std::span<const uint8_t> payload) {
      uint32_t len = static_cast<uint32_t>(payload.size());
      uint8_t hdr[4] = {static_cast<uint8_t>(len), static_cast<uint8_t>(len >> 8),
                        static_cast<uint8_t>(len >> 16), static_cast<uint8_t>(len >> 24)};
      (void)!::write(to_server[1], hdr, 4);
      (void)!::write(to_server[1], payload.data(), payload.size());
      uint8_t resp[4];
      (void)!::read(from_server[0], resp, 4);
      return static_cast<uint32_t>(resp[0]) | (resp[1] << 8);
    };
    CHECK(send(b.oracle.fault_input) == (kStatusFaultBase | 0));
    std::vector<uint8_t> zeros(4, 0);
    CHECK(send(zeros) == kStatusClean);
    ::close(to_server[1]);
  });

  uint64_t served = serve_pipe(h, to_server[0], from_server[1], 8);
  client.join();
  CHECK(served == 2);
  ::close(to_server[0]);
  ::close(from_server[0]);
  ::close(from_server[1]);

  // malformed 3-byte frame
  int bad[2], sink[2];
  REQUIRE(::pipe(bad) == 0);
  REQUIRE(::pipe(sink) == 0);
  uint8_t three[3] = {9, 9, 9};
  (void)!::write(bad[1], three, 3);
  ::close(bad[1]);
  CHECK_THROWS_AS(serve_pipe(h, bad[0], sink[1], 8), ProtocolError);
  ::close(bad[0]);
  ::close(sink[0]);
  ::close(sink[1]);
}

TEST_CASE("stats stream appends one record per queue update") {
  Benchmark b = load_benchmark(bench_path("lock_case"));
  CampaignOptions opts;
  opts.analysis = AnalysisKind::cfa;
  opts.tau = TauLevel::min;
  opts.seed = 3;
  opts.exec_budget = 60000;
  opts.max_cycles = 8;
  opts.max_len = 8;
  opts.stats_path = "stats_test.jsonl";
  CampaignResult r = run_campaign(b.design, b.config, opts);
  std::ifstream in(opts.stats_path);
  REQUIRE(in.good());
  std::string line;
  uint32_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(line.find("\"execs\"") != std::string::npos);
    CHECK(line.find("\"buckets_populated\"") != std::string::npos);
    CHECK(line.find("\"faults\"") != std::string::npos);
  }
  CHECK(lines == r.report.queue_entries - 1);  // initial seed writes no record
  std::remove(opts.stats_path.c_str());
}

TEST_CASE("crash artifacts land on disk when a directory is configured") {
  Benchmark b = load_benchmark(bench_path("counter_trojan"));
  std::string dir = "crashes_test_dir";
  std::filesystem::remove_all(dir);
  CampaignOptions opts;
  opts.seed = 2;
  opts.exec_budget = 50;
  opts.max_cycles = 20;
  opts.crashes_dir = dir;
  CampaignResult r = run_campaign(b.design, b.config, opts);
  REQUIRE_FALSE(r.crashes.empty());
  CHECK(std::filesystem::exists(dir + "/0.bin"));
  ReplayResult rr = replay(b.design, b.config, dir + "/0.bin", SimMode::accurate, 20);
  CHECK(rr.verdict.is_fault());
  std::filesystem::remove_all(dir);
}
