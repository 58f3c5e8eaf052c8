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

#include "vgf/fuzzer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace vgf {

const char* fitness_name(FitnessKind f) {
  switch (f) {
    case FitnessKind::afl_default: return "default";
    case FitnessKind::geo_mean: return "geo";
    case FitnessKind::arith_mean: return "arith";
    case FitnessKind::bucket_count: return "count";
    case FitnessKind::bucket_total: return "total";
  }
  return "?";
}

bool fitness_maximizes(FitnessKind f) { return f != FitnessKind::afl_default; }

double score(FitnessKind fit, const Testcase& tc, const CoverageMap& run_delta) {
  if (fit == FitnessKind::afl_default)
    return static_cast<double>(tc.len()) * static_cast<double>(tc.exec_time);

  uint64_t n = 0;
  uint64_t total = 0;
  long double log_sum = 0.0L;
  for (uint32_t idx : run_delta.touched()) {
    uint8_t a = run_delta.bucket(idx);
    if (a == 0) continue;
    ++n;
    total += a;
    log_sum += std::log(static_cast<long double>(a));
  }
  if (n == 0) return 0.0;
  switch (fit) {
    case FitnessKind::geo_mean:
      return static_cast<double>(std::exp(log_sum / static_cast<long double>(n)));
    case FitnessKind::arith_mean:
      return static_cast<double>(total) / static_cast<double>(n);
    case FitnessKind::bucket_count:
      return static_cast<double>(n);
    case FitnessKind::bucket_total:
      return static_cast<double>(total);
    default:
      return 0.0;
  }
}

std::vector<uint32_t> update_champions(Queue& q, const Testcase& tc,
                                       const CoverageMap& run_delta,
                                       FitnessKind fit, double tc_score) {
  std::vector<uint32_t> replaced;
  std::vector<uint32_t> buckets = run_delta.delta_set();
  bool maximize = fitness_maximizes(fit);
  for (uint32_t b : buckets) {
    auto it = q.champions.find(b);
    if (it == q.champions.end()) {
      q.champions.emplace(b, Champion{tc.bytes, tc_score});
      continue;
    }
    bool better = maximize ? tc_score > it->second.score : tc_score < it->second.score;
    if (better) {
      it->second = Champion{tc.bytes, tc_score};
      replaced.push_back(b);
    }
  }
  return replaced;
}

std::string options_echo_string(const CampaignOptions& opts) {
  std::ostringstream ss;
  ss << "fitness=" << fitness_name(opts.fitness);
  ss << " analysis=" << (opts.analysis ? analysis_name(*opts.analysis) : "config");
  ss << " tau=" << tau_name(opts.tau);
  ss << " mode=" << (opts.mode == SimMode::accurate ? "accurate" : "fast");
  ss << " trim=" << (opts.trimming ? "on" : "off");
  ss << " det=" << (opts.deterministic ? "on" : "off");
  ss << " max_cycles=" << opts.max_cycles;
  ss << " max_len=" << opts.max_len;
  ss << " execs=" << opts.exec_budget;
  ss << " workers=" << opts.workers;
  if (opts.compression_override) {
    ss << " compression="
       << (*opts.compression_override == CompressionKind::compress_values
               ? "compress_values"
               : "vectorize_values");
  }
  return ss.str();
}

std::optional<uint64_t> CampaignReport::first_fault() const {
  std::optional<uint64_t> best;
  for (const auto& [name, execs] : first_fault_execs)
    if (!best || execs < *best) best = execs;
  return best;
}

std::string CampaignReport::to_json() const {
  std::ostringstream ss;
  ss << "{\n";
  ss << "  \"seed\": " << seed << ",\n";
  ss << "  \"execs_total\": " << execs_total << ",\n";
  ss << "  \"faults_total\": " << faults_total << ",\n";
  ss << "  \"buckets_populated\": " << buckets_populated << ",\n";
  ss << "  \"queue_entries\": " << queue_entries << ",\n";
  ss << "  \"champions\": " << champions << ",\n";
  ss << "  \"selected_signals\": " << selected_signals << ",\n";
  ss << "  \"options\": \"" << options_echo << "\",\n";
  ss << "  \"first_fault_execs\": {";
  bool first = true;
  for (const auto& [name, execs] : first_fault_execs) {
    if (!first) ss << ", ";
    first = false;
    ss << "\"" << name << "\": " << execs;
  }
  ss << "},\n";
  ss << "  \"populated_over_time\": [";
  first = true;
  for (const auto& [execs, buckets] : populated_over_time) {
    if (!first) ss << ", ";
    first = false;
    ss << "[" << execs << ", " << buckets << "]";
  }
  ss << "]\n}\n";
  return ss.str();
}

namespace {

uint64_t mix_seed(uint64_t seed, uint32_t worker) {
  // splitmix64 step over (seed, worker)
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (worker + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4568bULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Worker {
  const Design& design;
  const HarnessConfig& cfg;
  const CampaignOptions& opts;
  uint64_t budget;
  uint32_t worker_id;

  CoverageMap map;
  std::unique_ptr<Harness> harness;
  Queue queue;
  Rng rng;
  MutatorConfig mcfg;

  uint64_t execs = 0;
  CampaignReport report;
  std::vector<CrashArtifact> crashes;
  std::ofstream stats;

  // per-entry scheduling state
  std::vector<uint8_t> entry_bonus;      // discovered something last pass
  std::vector<uint8_t> entry_trimmed;
  std::vector<uint8_t> entry_det_done;
  std::vector<std::vector<uint8_t>> queue_bytes;  // for splicing

  Worker(const Design& d, const HarnessConfig& c, const CampaignOptions& o,
         uint64_t budget_, uint32_t id)
      : design(d), cfg(c), opts(o), budget(budget_), worker_id(id) {
    harness = std::make_unique<Harness>(d, c, o.mode, &map);
    rng.seed(mix_seed(o.seed, id));
    mcfg.max_len = o.max_len;
    if (!o.stats_path.empty()) {
      std::string path = o.stats_path;
      if (o.workers > 1) path += "." + std::to_string(id);
      stats.open(path);
    }
  }

  bool budget_left() const { return execs < budget; }

  struct ExecOutcome {
    RunVerdict verdict;
    bool new_coverage = false;
    double tc_score = 0;
    uint64_t cycles = 0;
  };

  ExecOutcome execute(const std::vector<uint8_t>& bytes, bool update_queue) {
    map.begin_run();
    harness->apply_reset();
    RunVerdict v = harness->run_testcase(bytes, opts.max_cycles);
    ++execs;

    Testcase tc;
    tc.bytes = bytes;
    tc.exec_time = v.sim_cycles;

    ExecOutcome out;
    out.verdict = v;
    out.cycles = v.sim_cycles;
    out.new_coverage = map.newly_virgin() > 0;
    out.tc_score = score(opts.fitness, tc, map);
    update_champions(queue, tc, map, opts.fitness, out.tc_score);

    if (v.is_fault()) {
      ++report.faults_total;
      if (!report.first_fault_execs.count(v.property)) {
        report.first_fault_execs[v.property] = execs;
        crashes.push_back({v.property, bytes, execs});
      }
    }

    if (out.new_coverage && update_queue) {
      Testcase entry = tc;
      entry.discovered_buckets = map.delta_set();
      queue.entries.push_back(std::move(entry));
      queue_bytes.push_back(bytes);
      entry_bonus.push_back(1);
      entry_trimmed.push_back(0);
      entry_det_done.push_back(0);
      if (stats.is_open()) {
        stats << "{\"execs\": " << execs
              << ", \"buckets_populated\": " << map.virgin_count()
              << ", \"faults\": " << report.faults_total << "}\n";
      }
    }

    if (execs % 256 == 0)
      report.populated_over_time.push_back({execs, map.virgin_count()});
    return out;
  }

  void trim_entry(size_t qi) {
    Testcase& entry = queue.entries[qi];
    // the preserved delta set is the one the entry discovered
    std::vector<uint32_t> want = entry.discovered_buckets;
    auto still_good = [&](std::span<const uint8_t> candidate) -> bool {
      if (!budget_left()) return false;
      std::vector<uint8_t> bytes(candidate.begin(), candidate.end());
      map.begin_run();
      harness->apply_reset();
      harness->run_testcase(bytes, opts.max_cycles);
      ++execs;
      return map.delta_set() == want;
    };
    std::vector<uint8_t> trimmed = trim_testcase(entry.bytes, still_good);
    entry.bytes = std::move(trimmed);
    queue_bytes[qi] = entry.bytes;
  }

  void run() {
    report.seed = opts.seed;
    report.options_echo = options_echo_string(opts);
    report.selected_signals = static_cast<uint32_t>(cfg.tracked.size());

    // initial seed testcase
    std::vector<uint8_t> seed_input(4, 0);
    {
      Testcase entry;
      entry.bytes = seed_input;
      queue.entries.push_back(entry);
      queue_bytes.push_back(seed_input);
      entry_bonus.push_back(0);
      entry_trimmed.push_back(1);  // nothing to preserve yet
      entry_det_done.push_back(0);
      if (budget_left()) execute(seed_input, false);
    }

    while (budget_left()) {
      size_t count = queue.entries.size();
      std::vector<uint8_t> discovered_this_pass(count, 0);
      for (size_t qi = 0; qi < count && budget_left(); ++qi) {
        bool found_new = false;

        if (opts.trimming && !entry_trimmed[qi]) {
          trim_entry(qi);
          entry_trimmed[qi] = 1;
        }

        if (opts.deterministic && !entry_det_done[qi]) {
          for_each_deterministic_child(
              queue.entries[qi].bytes, [&](std::span<const uint8_t> child) {
                if (!budget_left()) return false;
                std::vector<uint8_t> bytes(child.begin(), child.end());
                if (execute(bytes, true).new_coverage) found_new = true;
                return budget_left();
              });
          entry_det_done[qi] = 1;
        }

        uint32_t energy = 16 * (entry_bonus[qi] ? 2 : 1);
        for (uint32_t e = 0; e < energy && budget_left(); ++e) {
          std::vector<uint8_t> child =
              havoc(mcfg, queue.entries[qi].bytes, queue_bytes, rng);
          if (execute(child, true).new_coverage) found_new = true;
        }
        discovered_this_pass[qi] = found_new ? 1 : 0;
      }
      for (size_t qi = 0; qi < count; ++qi) entry_bonus[qi] = discovered_this_pass[qi];
    }

    report.execs_total = execs;
    report.buckets_populated = map.virgin_count();
    report.queue_entries = static_cast<uint32_t>(queue.entries.size());
    report.champions = static_cast<uint32_t>(queue.champions.size());
  }
};

}  // namespace

CampaignResult run_campaign(const Design& d, const HarnessConfig& cfg,
                            const CampaignOptions& opts) {
  HarnessConfig effective = cfg;
  if (opts.compression_override) effective.compression = *opts.compression_override;
  if (opts.analysis) {
    Selection sel = analyze(d, *opts.analysis, opts.tau, effective.properties);
    effective.tracked.clear();
    for (const SelectedSignal& s : sel.picks)
      effective.tracked.push_back({s.signal, s.weight});
  }

  std::vector<std::unique_ptr<Worker>> workers;
  uint32_t n = std::max<uint32_t>(1, opts.workers);
  uint64_t base = opts.exec_budget / n;
  for (uint32_t w = 0; w < n; ++w) {
    uint64_t budget = base + (w == 0 ? opts.exec_budget % n : 0);
    workers.push_back(std::make_unique<Worker>(d, effective, opts, budget, w));
  }
  for (auto& w : workers) w->run();

  CampaignResult result;
  result.report = workers[0]->report;
  result.crashes = std::move(workers[0]->crashes);
  for (uint32_t w = 1; w < n; ++w) {
    Worker& other = *workers[w];
    result.report.execs_total += other.execs;
    result.report.faults_total += other.report.faults_total;
    for (const auto& [name, execs] : other.report.first_fault_execs) {
      auto it = result.report.first_fault_execs.find(name);
      if (it == result.report.first_fault_execs.end() || execs < it->second)
        result.report.first_fault_execs[name] = execs;
    }
    workers[0]->map.merge(other.map);
    result.report.queue_entries += other.report.queue_entries;
    result.report.champions += other.report.champions;
    for (auto& c : other.crashes) {
      bool seen = false;
      for (const auto& mine : result.crashes)
        if (mine.property == c.property) seen = true;
      if (!seen) result.crashes.push_back(std::move(c));
    }
  }
  result.report.buckets_populated = workers[0]->map.virgin_count();

  if (!opts.crashes_dir.empty() && !result.crashes.empty()) {
    std::filesystem::create_directories(opts.crashes_dir);
    for (size_t i = 0; i < result.crashes.size(); ++i) {
      std::string path = opts.crashes_dir + "/" + std::to_string(i) + ".bin";
      std::ofstream out(path, std::ios::binary);
      out.write(reinterpret_cast<const char*>(result.crashes[i].input.data()),
                result.crashes[i].input.size());
    }
  }
  return result;
}

}  // namespace vgf
