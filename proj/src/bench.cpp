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

#include "vgf/bench.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vgf/parser.hpp"

namespace vgf {

namespace {

std::vector<uint8_t> parse_hex_bytes(const std::string& hex) {
  std::vector<uint8_t> out;
  uint8_t cur = 0;
  int nibbles = 0;
  for (char c : hex) {
    if (c == ' ' || c == '_') continue;
    uint8_t d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = 10 + c - 'a';
    else if (c >= 'A' && c <= 'F') d = 10 + c - 'A';
    else throw IoError("oracle.json: bad hex byte string");
    cur = static_cast<uint8_t>((cur << 4) | d);
    if (++nibbles == 2) {
      out.push_back(cur);
      cur = 0;
      nibbles = 0;
    }
  }
  if (nibbles) throw IoError("oracle.json: odd hex digit count");
  return out;
}

}  // namespace

const std::vector<std::string>& bundled_benchmark_names() {
  static const std::vector<std::string> names = {
      "lock_case", "lock_micro", "counter_trojan", "seq_trojan", "async_fifo"};
  return names;
}

Benchmark load_benchmark(const std::string& dir) {
  Benchmark b;
  b.dir = dir;
  auto slash = dir.find_last_of('/');
  b.name = slash == std::string::npos ? dir : dir.substr(slash + 1);
  b.design_path = dir + "/design.vgf.v";
  b.config_path = dir + "/harness.cfg";
  b.design = parse_design_file(b.design_path);
  b.config = load_config_file(b.config_path, b.design);

  {
    std::ifstream in(dir + "/oracle.json");
    if (!in) throw IoError("missing oracle.json in " + dir);
    nlohmann::json j = nlohmann::json::parse(in);
    b.oracle.fault_input = parse_hex_bytes(j.at("fault_input_hex").get<std::string>());
    b.oracle.property = j.at("property").get<std::string>();
    b.oracle.max_cycles = j.at("max_cycles").get<uint32_t>();
    b.oracle.fast_mode_reachable = j.at("fast_mode_reachable").get<bool>();
    b.oracle.search = j.value("search", "");
  }

  {
    std::ifstream in(dir + "/README.md");
    if (!in) throw IoError("missing README.md in " + dir);
    std::string line;
    while (std::getline(in, line)) {
      const std::string tag = "assertions:";
      auto pos = line.find(tag);
      if (pos != std::string::npos) {
        b.readme_assertions =
            static_cast<uint32_t>(std::stoul(line.substr(pos + tag.size())));
        break;
      }
    }
  }
  return b;
}

std::vector<Benchmark> bundled_benchmarks(const std::string& bench_root) {
  std::vector<Benchmark> out;
  for (const std::string& name : bundled_benchmark_names())
    out.push_back(load_benchmark(bench_root + "/" + name));
  return out;
}

}  // namespace vgf
