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
#include <optional>
#include <span>
#include <vector>

#include "vgf/design.hpp"
#include "vgf/errors.hpp"

namespace vgf {

enum class AnalysisKind : uint8_t { dfa, cfa, dcfa };
enum class TauLevel : uint8_t { max, max2, max4, max8, min };

const char* analysis_name(AnalysisKind a);
const char* tau_name(TauLevel t);

/// Directed dependency edges over signals. dfa: src read in the right-hand
/// side of an assignment to dst. cfa: src read in an if/case condition
/// dominating an assignment to dst, or in a ROM index expression feeding it.
struct DependencyGraph {
  uint32_t signal_count = 0;
  std::vector<std::vector<SignalId>> dfa_in;   // per dst, ascending, unique
  std::vector<std::vector<SignalId>> cfa_in;
  std::vector<std::vector<SignalId>> dfa_out;  // per src
  std::vector<std::vector<SignalId>> cfa_out;

  bool has_in_edge(SignalId s, AnalysisKind k) const;
};

DependencyGraph build_graph(const Design& d);

/// Minimum hop count from each signal to a property-referenced signal,
/// following the configured edges backward. Empty optional = unreachable.
struct PropertyDistance {
  std::vector<std::optional<uint32_t>> pd;
};

PropertyDistance property_distance(const DependencyGraph& g, AnalysisKind cfg,
                                   const Design& d,
                                   std::span<const uint32_t> property_indices);

/// Signals eligible for tracking: reachable, not a design input, and carrying
/// at least one in-edge under the configured edge set (a signal with no
/// in-cone under the chosen flow relation cannot respond to mutation through
/// it). Ascending SignalId.
std::vector<SignalId> candidate_signals(const Design& d, const DependencyGraph& g,
                                        AnalysisKind cfg, const PropertyDistance& pd);

struct Threshold {
  TauLevel level = TauLevel::max;
  uint32_t resolved = 0;
};

/// Resolves a tau level against the candidate PD extremes. The divided
/// levels interpolate from min upward: min + ceil((max-min)/2^k).
/// Throws NoReachableSignals on an empty pd set.
Threshold resolve_threshold(std::span<const uint32_t> pds, TauLevel level);

struct SelectedSignal {
  SignalId signal;
  uint32_t pd;
  uint32_t weight;  // (tau.resolved - pd) + 1
};

std::vector<SelectedSignal> select_signals(std::span<const SignalId> candidates,
                                           const PropertyDistance& pd,
                                           const Threshold& tau);

/// One-call pipeline: graph, distances, candidates, threshold, selection.
/// An empty property span arms every assertion in the design.
struct Selection {
  AnalysisKind analysis;
  std::optional<Threshold> tau;   // nullopt when no candidate is reachable
  std::vector<SelectedSignal> picks;
  PropertyDistance pd;            // full map, for reporting
  std::vector<SignalId> candidates;
};

Selection analyze(const Design& d, AnalysisKind cfg, TauLevel level,
                  std::span<const uint32_t> property_indices = {});

}  // namespace vgf
