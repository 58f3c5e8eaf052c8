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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vgf/coverage.hpp"
#include "vgf/depgraph.hpp"
#include "vgf/harness.hpp"
#include "vgf/mutator.hpp"

namespace vgf {

enum class FitnessKind : uint8_t {
  afl_default,   // |input| * exec_time; smaller replaces
  geo_mean,      // nth root of the product of populated bucket values; larger wins
  arith_mean,    // average of populated bucket values; larger wins
  bucket_count,  // number of populated buckets; larger wins
  bucket_total,  // sum of populated bucket values; larger wins
};

const char* fitness_name(FitnessKind f);
bool fitness_maximizes(FitnessKind f);

struct Testcase {
  std::vector<uint8_t> bytes;
  uint64_t exec_time = 0;  // simulator cycles consumed by its run
  std::vector<uint32_t> discovered_buckets;

  size_t len() const { return bytes.size(); }
};

/// Score of a just-executed testcase against its run-delta map.
double score(FitnessKind fit, const Testcase& tc, const CoverageMap& run_delta);

struct Champion {
  std::vector<uint8_t> bytes;
  double score = 0;
};

struct Queue {
  std::vector<Testcase> entries;
  std::map<uint32_t, Champion> champions;  // bucket -> best holder
};

/// Installs the testcase for unseen run-delta buckets; replaces holders only
/// when strictly better per the fitness direction. Ties keep the incumbent.
/// Returns the buckets whose holder changed hands.
std::vector<uint32_t> update_champions(Queue& q, const Testcase& tc,
                                       const CoverageMap& run_delta,
                                       FitnessKind fit, double tc_score);

struct CampaignOptions {
  FitnessKind fitness = FitnessKind::bucket_total;
  std::optional<AnalysisKind> analysis;  // when set, replaces the config track set
  TauLevel tau = TauLevel::max8;
  SimMode mode = SimMode::accurate;
  bool trimming = false;
  bool deterministic = false;
  uint64_t seed = 1;
  uint64_t exec_budget = 100000;
  uint32_t max_cycles = 16;
  size_t max_len = 4096;
  uint32_t workers = 1;
  std::optional<CompressionKind> compression_override;
  std::string crashes_dir;  // empty: artifacts kept in memory only
  std::string stats_path;   // empty: no stats stream
};

struct CampaignReport {
  uint64_t seed = 0;
  uint64_t execs_total = 0;
  // property name -> exec index of the first fault
  std::map<std::string, uint64_t> first_fault_execs;
  uint64_t faults_total = 0;
  uint32_t buckets_populated = 0;  // campaign virgin count at the end
  // sampled every 256 execs: (execs, virgin buckets)
  std::vector<std::pair<uint64_t, uint32_t>> populated_over_time;
  uint32_t queue_entries = 0;
  uint32_t champions = 0;
  uint32_t selected_signals = 0;  // tracked set size actually used
  std::string options_echo;

  std::string to_json() const;
  /// Exec count of the earliest fault, or nullopt when the campaign was clean.
  std::optional<uint64_t> first_fault() const;
};

/// Crash artifact: the raw input plus the verdict it reproduces.
struct CrashArtifact {
  std::string property;
  std::vector<uint8_t> input;
  uint64_t exec_index = 0;
};

struct CampaignResult {
  CampaignReport report;
  std::vector<CrashArtifact> crashes;
};

CampaignResult run_campaign(const Design& d, const HarnessConfig& cfg,
                            const CampaignOptions& opts);

std::string options_echo_string(const CampaignOptions& opts);

}  // namespace vgf
