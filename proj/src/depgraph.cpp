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

#include "vgf/depgraph.hpp"

#include <algorithm>
#include <deque>

namespace vgf {

const char* analysis_name(AnalysisKind a) {
  switch (a) {
    case AnalysisKind::dfa: return "dfa";
    case AnalysisKind::cfa: return "cfa";
    case AnalysisKind::dcfa: return "dcfa";
  }
  return "?";
}

const char* tau_name(TauLevel t) {
  switch (t) {
    case TauLevel::max: return "max";
    case TauLevel::max2: return "max/2";
    case TauLevel::max4: return "max/4";
    case TauLevel::max8: return "max/8";
    case TauLevel::min: return "min";
  }
  return "?";
}

bool DependencyGraph::has_in_edge(SignalId s, AnalysisKind k) const {
  switch (k) {
    case AnalysisKind::dfa: return !dfa_in[s].empty();
    case AnalysisKind::cfa: return !cfa_in[s].empty();
    case AnalysisKind::dcfa: return !dfa_in[s].empty() || !cfa_in[s].empty();
  }
  return false;
}

namespace {

struct EdgeAccum {
  std::vector<std::vector<SignalId>> dfa_in, cfa_in;

  explicit EdgeAccum(size_t n) : dfa_in(n), cfa_in(n) {}

  void dfa(SignalId src, SignalId dst) { dfa_in[dst].push_back(src); }
  void cfa(SignalId src, SignalId dst) { cfa_in[dst].push_back(src); }
};

void walk_stmt(const Stmt& s, std::vector<SignalId>& cond_stack, EdgeAccum& acc) {
  switch (s.kind) {
    case StmtKind::assign: {
      std::vector<SignalId> reads, idx_reads;
      s.rhs.collect_reads(reads);
      s.rhs.collect_rom_index_reads(idx_reads);
      // ROM index reads select behavior rather than flow data; they are
      // control edges, and do not double as data edges.
      for (SignalId r : idx_reads) {
        auto it = std::find(reads.begin(), reads.end(), r);
        if (it != reads.end()) reads.erase(it);
      }
      for (SignalId r : reads) acc.dfa(r, s.target);
      for (SignalId r : idx_reads) acc.cfa(r, s.target);
      for (SignalId c : cond_stack) acc.cfa(c, s.target);
      break;
    }
    case StmtKind::if_stmt: {
      std::vector<SignalId> cond_reads;
      s.cond.collect_reads(cond_reads);
      size_t mark = cond_stack.size();
      cond_stack.insert(cond_stack.end(), cond_reads.begin(), cond_reads.end());
      for (const Stmt& t : s.then_body) walk_stmt(t, cond_stack, acc);
      for (const Stmt& t : s.else_body) walk_stmt(t, cond_stack, acc);
      cond_stack.resize(mark);
      break;
    }
    case StmtKind::case_stmt: {
      std::vector<SignalId> sel_reads;
      s.selector.collect_reads(sel_reads);
      size_t mark = cond_stack.size();
      cond_stack.insert(cond_stack.end(), sel_reads.begin(), sel_reads.end());
      for (const auto& item : s.items)
        for (const Stmt& t : item.body) walk_stmt(t, cond_stack, acc);
      for (const Stmt& t : s.default_body) walk_stmt(t, cond_stack, acc);
      cond_stack.resize(mark);
      break;
    }
    case StmtKind::block:
      for (const Stmt& t : s.body) walk_stmt(t, cond_stack, acc);
      break;
  }
}

void dedupe(std::vector<SignalId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

DependencyGraph build_graph(const Design& d) {
  EdgeAccum acc(d.signals.size());
  std::vector<SignalId> cond_stack;
  for (const Process& p : d.processes) {
    cond_stack.clear();
    for (const Stmt& s : p.body) walk_stmt(s, cond_stack, acc);
  }

  DependencyGraph g;
  g.signal_count = static_cast<uint32_t>(d.signals.size());
  g.dfa_in = std::move(acc.dfa_in);
  g.cfa_in = std::move(acc.cfa_in);
  g.dfa_out.resize(g.signal_count);
  g.cfa_out.resize(g.signal_count);
  for (SignalId dst = 0; dst < g.signal_count; ++dst) {
    dedupe(g.dfa_in[dst]);
    dedupe(g.cfa_in[dst]);
    for (SignalId src : g.dfa_in[dst]) g.dfa_out[src].push_back(dst);
    for (SignalId src : g.cfa_in[dst]) g.cfa_out[src].push_back(dst);
  }
  for (SignalId src = 0; src < g.signal_count; ++src) {
    dedupe(g.dfa_out[src]);
    dedupe(g.cfa_out[src]);
  }
  return g;
}

PropertyDistance property_distance(const DependencyGraph& g, AnalysisKind cfg,
                                   const Design& d,
                                   std::span<const uint32_t> property_indices) {
  PropertyDistance out;
  out.pd.assign(g.signal_count, std::nullopt);

  std::deque<SignalId> frontier;
  auto seed = [&](const Expr& e) {
    std::vector<SignalId> reads;
    e.collect_reads(reads);
    for (SignalId s : reads) {
      if (!out.pd[s]) {
        out.pd[s] = 0;
        frontier.push_back(s);
      }
    }
  };
  if (property_indices.empty()) {
    for (const AssertionDecl& a : d.assertions) seed(a.expr);
  } else {
    for (uint32_t i : property_indices) seed(d.assertions.at(i).expr);
  }

  while (!frontier.empty()) {
    SignalId s = frontier.front();
    frontier.pop_front();
    uint32_t next_pd = *out.pd[s] + 1;
    auto relax = [&](const std::vector<SignalId>& in) {
      for (SignalId src : in) {
        if (!out.pd[src]) {
          out.pd[src] = next_pd;
          frontier.push_back(src);
        }
      }
    };
    if (cfg == AnalysisKind::dfa || cfg == AnalysisKind::dcfa) relax(g.dfa_in[s]);
    if (cfg == AnalysisKind::cfa || cfg == AnalysisKind::dcfa) relax(g.cfa_in[s]);
  }
  return out;
}

std::vector<SignalId> candidate_signals(const Design& d, const DependencyGraph& g,
                                        AnalysisKind cfg, const PropertyDistance& pd) {
  std::vector<SignalId> out;
  for (SignalId s = 0; s < g.signal_count; ++s) {
    if (!pd.pd[s]) continue;
    if (d.signals[s].kind == SignalKind::input) continue;
    if (!g.has_in_edge(s, cfg)) continue;
    out.push_back(s);
  }
  return out;
}

Threshold resolve_threshold(std::span<const uint32_t> pds, TauLevel level) {
  if (pds.empty())
    throw NoReachableSignals("threshold: no reachable candidate signals");
  uint32_t mn = pds[0], mx = pds[0];
  for (uint32_t v : pds) {
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  uint32_t span = mx - mn;
  auto ceil_div = [](uint32_t a, uint32_t b) { return (a + b - 1) / b; };
  Threshold t;
  t.level = level;
  switch (level) {
    case TauLevel::max: t.resolved = mx; break;
    case TauLevel::max2: t.resolved = mn + ceil_div(span, 2); break;
    case TauLevel::max4: t.resolved = mn + ceil_div(span, 4); break;
    case TauLevel::max8: t.resolved = mn + ceil_div(span, 8); break;
    case TauLevel::min: t.resolved = mn; break;
  }
  return t;
}

std::vector<SelectedSignal> select_signals(std::span<const SignalId> candidates,
                                           const PropertyDistance& pd,
                                           const Threshold& tau) {
  std::vector<SelectedSignal> out;
  for (SignalId s : candidates) {
    uint32_t dist = *pd.pd[s];
    if (dist > tau.resolved) continue;
    out.push_back({s, dist, (tau.resolved - dist) + 1});
  }
  return out;
}

Selection analyze(const Design& d, AnalysisKind cfg, TauLevel level,
                  std::span<const uint32_t> property_indices) {
  DependencyGraph g = build_graph(d);
  Selection sel;
  sel.analysis = cfg;
  sel.pd = property_distance(g, cfg, d, property_indices);
  sel.candidates = candidate_signals(d, g, cfg, sel.pd);
  std::vector<uint32_t> pds;
  for (SignalId s : sel.candidates) pds.push_back(*sel.pd.pd[s]);
  if (!pds.empty()) {
    sel.tau = resolve_threshold(pds, level);
    sel.picks = select_signals(sel.candidates, sel.pd, *sel.tau);
  }
  return sel;
}

}  // namespace vgf
