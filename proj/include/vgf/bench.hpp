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

#include <string>
#include <vector>

#include "vgf/config.hpp"
#include "vgf/design.hpp"

namespace vgf {

/// Ground truth for one bundled benchmark, established by a brute-force
/// search procedure (documented per benchmark under bench/<name>/README.md
/// and re-derived by the test suite's independent models).
struct BenchOracle {
  std::vector<uint8_t> fault_input;  // replays to a fault in accurate mode
  std::string property;              // the assertion it trips
  uint32_t max_cycles = 16;          // rounds the replay needs
  bool fast_mode_reachable = false;  // whether fast mode can trip it at all
  std::string search;                // how the input was established
};

struct Benchmark {
  std::string name;
  std::string dir;
  std::string design_path;
  std::string config_path;
  Design design;
  HarnessConfig config;
  BenchOracle oracle;
  uint32_t readme_assertions = 0;  // "assertions:" line from README.md
};

/// Loads bench/<name>/{design.vgf.v, harness.cfg, oracle.json, README.md}
/// for every bundled benchmark, in a fixed order.
std::vector<Benchmark> bundled_benchmarks(const std::string& bench_root);

Benchmark load_benchmark(const std::string& dir);

const std::vector<std::string>& bundled_benchmark_names();

}  // namespace vgf
