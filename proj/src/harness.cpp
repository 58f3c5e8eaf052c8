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

#include "vgf/harness.hpp"

#include <cstdio>
#include <fstream>

namespace vgf {

Harness::Harness(const Design& d, const HarnessConfig& cfg, SimMode mode,
                 CoverageMap* map)
    : design_(&d), cfg_(cfg), map_(map) {
  sim_ = std::make_unique<Simulator>(
      d, mode, [this](const ChangeEvent& ev) { on_change(ev); });

  weight_of_.assign(d.signals.size(), 1);
  tracked_slot_.assign(d.signals.size(), 0);
  std::vector<SignalId> tracked_ids;
  for (const TrackedEntry& t : cfg_.tracked) {
    tracked_ids.push_back(t.signal);
    weight_of_[t.signal] = t.weight;
    TrackedSignal meta;
    meta.code = t.signal + 1;  // nonzero unique identification code
    meta.width = d.signals[t.signal].width;
    meta.weight = t.weight;
    tracked_slot_[t.signal] = static_cast<uint32_t>(tracked_meta_.size() + 1);
    tracked_meta_.push_back(meta);
  }
  sim_->set_tracked(tracked_ids);

  for (uint32_t idx : cfg_.properties)
    property_exprs_.push_back(sim_->compile(d.assertions.at(idx).expr));

  // Park harness-driven pins at their t=0 levels.
  clock_level_.resize(cfg_.clocks.size());
  stable_level_.assign(cfg_.clocks.size(), 0);
  for (size_t i = 0; i < cfg_.clocks.size(); ++i) {
    clock_level_[i] = cfg_.clocks[i].level(0) ? 1 : 0;
    sim_->poke(cfg_.clocks[i].signal, BitVec(1, clock_level_[i]));
    if (cfg_.clocks[i].stable_signal)
      sim_->poke(*cfg_.clocks[i].stable_signal, BitVec(1, 0));
  }
  sim_->settle();
  suppress_ = false;
}

void Harness::on_change(const ChangeEvent& ev) {
  if (suppress_) return;
  ++events_observed_;
  if (trace_) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%llu.%u ", (unsigned long long)ev.time, ev.delta);
    trace_->push_back(buf + design_->signals[ev.signal].name + " " +
                      ev.prev.to_hex() + "->" + ev.next.to_hex());
  }
  if (!map_) return;
  uint16_t index;
  if (cfg_.compression == CompressionKind::compress_values) {
    const TrackedSignal& meta = tracked_meta_[tracked_slot_[ev.signal] - 1];
    index = compress_values(meta, ev.prev, ev.next, cfg_.prev_shift);
  } else {
    vec_buf_.clear();
    for (size_t i = 0; i < tracked_meta_.size(); ++i)
      vec_buf_.push_back({tracked_meta_[i], sim_->read(cfg_.tracked[i].signal)});
    index = vectorize_values(vec_buf_);
  }
  map_->record(index, cfg_.use_weights ? weight_of_[ev.signal] : 1);
}

void Harness::check_properties() {
  if (suppress_ || faulted()) return;
  for (size_t i = 0; i < property_exprs_.size(); ++i) {
    if (sim_->eval(property_exprs_[i]).truthy()) {
      fault_index_ = static_cast<int32_t>(i);
      fault_time_ = sim_->now();
      return;
    }
  }
}

void Harness::zero_data_inputs() {
  for (const InputDomain& dom : cfg_.domains)
    for (SignalId s : dom.inputs)
      sim_->poke(s, BitVec::zeros(design_->signals[s].width));
  sim_->settle();
}

void Harness::apply_reset() {
  suppress_ = true;
  fault_index_ = -1;
  events_observed_ = 0;
  sim_cycles_ = 0;

  zero_data_inputs();
  for (const ResetSpec& r : cfg_.resets) {
    sim_->poke(r.signal, BitVec(1, r.active_high ? 1 : 0));
    if (!r.synchronous && sim_->is_clock(r.signal)) {
      sim_->clock_edge(r.signal, r.active_high ? EdgeKind::rising : EdgeKind::falling);
    } else {
      sim_->settle();
    }
  }

  if (sim_->mode() == SimMode::fast) {
    // One collapsed cycle with the resets held.
    sim_->fast_eval({});
    ++sim_cycles_;
  } else {
    uint32_t hold = cfg_.slowest_period();
    for (uint32_t i = 0; i < hold; ++i) step_one_timestep(nullptr);
  }

  for (const auto& [sig, val] : cfg_.init_overrides) sim_->deposit(sig, val);
  if (!cfg_.init_overrides.empty()) sim_->settle();

  for (const ResetSpec& r : cfg_.resets)
    sim_->poke(r.signal, BitVec(1, r.active_high ? 0 : 1));
  sim_->settle();
  suppress_ = false;
}

void Harness::drive_domain(const InputDomain& dom, InputCursor& cursor) {
  for (SignalId s : dom.inputs) {
    BitVec v = cursor.take(design_->signals[s].width);
    sim_->poke(s, v);
  }
}

void Harness::step_one_timestep(InputCursor* cursor) {
  sim_->advance_time(1);
  ++sim_cycles_;
  check_properties();
  if (faulted()) return;

  uint64_t now = sim_->now();
  for (size_t k = 0; k < cfg_.clocks.size(); ++k) {
    const ClockSpec& c = cfg_.clocks[k];
    uint8_t lvl = c.level(now) ? 1 : 0;
    if (lvl == clock_level_[k]) continue;
    clock_level_[k] = lvl;
    EdgeKind edge = lvl ? EdgeKind::rising : EdgeKind::falling;

    if (cursor) {
      bool drove = false;
      for (const InputDomain& dom : cfg_.domains) {
        if (dom.clock_index && *dom.clock_index == k && dom.drive_edge == edge) {
          drive_domain(dom, *cursor);
          drove = true;
        }
      }
      if (drove) {
        sim_->settle();  // inputs become pre-edge values, sampled at this edge
        check_properties();
        if (faulted()) return;
      }
    }

    sim_->poke(c.signal, BitVec(1, lvl));
    if (sim_->is_clock(c.signal))
      sim_->clock_edge(c.signal, edge);
    else
      sim_->settle();
    check_properties();
    if (faulted()) return;
  }

  for (size_t k = 0; k < cfg_.clocks.size(); ++k) {
    const ClockSpec& c = cfg_.clocks[k];
    if (!c.stable_signal) continue;
    uint8_t lvl = now >= c.stable_after ? 1 : 0;
    if (lvl == stable_level_[k]) continue;
    stable_level_[k] = lvl;
    sim_->poke(*c.stable_signal, BitVec(1, lvl));
    sim_->settle();
    check_properties();
    if (faulted()) return;
  }

  if (cursor) {
    bool drove = false;
    for (const InputDomain& dom : cfg_.domains) {
      if (!dom.clock_index) {
        drive_domain(dom, *cursor);
        drove = true;
      }
    }
    if (drove) {
      sim_->settle();
      check_properties();
    }
  }
}

void Harness::run_round(InputCursor& cursor) {
  if (sim_->mode() == SimMode::fast) {
    fast_round(cursor);
    return;
  }
  uint32_t len = round_length();
  for (uint32_t i = 0; i < len && !faulted(); ++i) step_one_timestep(&cursor);
}

void Harness::fast_round(InputCursor& cursor) {
  // All clocks collapse onto one eval: every domain accepts input each round.
  input_buf_.clear();
  for (const InputDomain& dom : cfg_.domains)
    for (SignalId s : dom.inputs)
      input_buf_.push_back({s, cursor.take(design_->signals[s].width)});
  sim_->fast_eval(input_buf_);
  ++sim_cycles_;
  check_properties();
}

RunVerdict Harness::run_testcase(std::span<const uint8_t> input, uint32_t max_cycles) {
  fault_index_ = -1;
  InputCursor cursor(input);
  uint64_t rounds = 0;
  for (;;) {
    run_round(cursor);
    ++rounds;
    RunVerdict v;
    v.events_observed = events_observed_;
    v.sim_cycles = sim_cycles_;
    if (faulted()) {
      v.outcome = RunVerdict::Outcome::fault;
      v.property_index = cfg_.properties[fault_index_];
      v.property = design_->assertions[v.property_index].name;
      v.fault_time = fault_time_;
      return v;
    }
    if (cursor.exhausted() && rounds >= max_cycles) return v;
  }
}

ReplayResult replay_bytes(const Design& d, const HarnessConfig& cfg,
                          std::span<const uint8_t> input, SimMode mode,
                          uint32_t max_cycles) {
  ReplayResult r;
  CoverageMap map;
  Harness h(d, cfg, mode, &map);
  h.set_trace(&r.trace);
  h.apply_reset();
  r.verdict = h.run_testcase(input, max_cycles);
  return r;
}

ReplayResult replay(const Design& d, const HarnessConfig& cfg,
                    const std::string& input_path, SimMode mode,
                    uint32_t max_cycles) {
  std::ifstream in(input_path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + input_path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return replay_bytes(d, cfg, bytes, mode, max_cycles);
}

}  // namespace vgf
