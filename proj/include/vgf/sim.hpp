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

#include <functional>
#include <span>
#include <vector>

#include "vgf/design.hpp"
#include "vgf/errors.hpp"

namespace vgf {

enum class SimMode : uint8_t { accurate, fast };

struct ChangeEvent {
  SignalId signal = 0;
  BitVec prev;
  BitVec next;
  uint64_t time = 0;
  uint32_t delta = 0;
};

using ChangeSink = std::function<void(const ChangeEvent&)>;

/// One interpreter instruction; the opcode meaning is simulator-internal.
struct SimInstr {
  uint8_t op = 0;
  uint32_t a = 0;
  uint32_t b = 0;
  uint32_t w = 0;
  BitVec imm;
};

/// Compiled form of an expression, evaluatable against the current state.
struct CompiledExpr {
  std::vector<SimInstr> code;
};

/// Deterministic event-driven simulator for one Design.
///
/// Accurate mode: delta-cycle evaluation; one ChangeEvent per tracked-signal
/// change per delta cycle, SignalId-ascending within a delta. Fast mode:
/// snapshot-diff per fast_eval() with every clock collapsed onto a single
/// rising edge; `#N` delays are ignored.
class Simulator {
 public:
  Simulator(const Design& d, SimMode mode, ChangeSink sink = {});
  ~Simulator();

  Simulator(const Simulator&) = delete;
  Simulator& operator=(const Simulator&) = delete;
  Simulator(Simulator&&) = default;

  SimMode mode() const { return mode_; }
  uint64_t now() const { return time_; }
  const Design& design() const { return *design_; }

  /// Signals whose changes produce ChangeEvents. Ascending order enforced.
  void set_tracked(std::span<const SignalId> tracked);

  void poke(SignalId signal, BitVec value);
  void settle();
  void clock_edge(SignalId clock, EdgeKind edge);
  void advance_time(uint64_t ticks);
  std::vector<ChangeEvent> fast_eval(
      std::span<const std::pair<SignalId, BitVec>> inputs);
  BitVec read(SignalId signal) const;

  /// Direct state override (reset-controller custom init); applied at the
  /// next settle, bypassing the input-only poke rule.
  void deposit(SignalId signal, BitVec value);

  CompiledExpr compile(const Expr& e) const;
  BitVec eval(const CompiledExpr& e) const;
  BitVec eval(const Expr& e) const;

  bool has_pending() const { return !pending_.empty(); }
  size_t pending_count() const { return pending_.size(); }

  /// True when `signal` serves as a trigger for at least one process.
  bool is_clock(SignalId signal) const;

 private:
  struct Unit;

  void settle_internal(std::vector<std::pair<SignalId, BitVec>>& commits,
                       bool force = false);
  void commit_and_emit(std::vector<std::pair<SignalId, BitVec>>& writes,
                       uint32_t delta);
  void run_unit(const Unit& u, std::vector<std::pair<SignalId, BitVec>>& out);
  BitVec eval_unit_single(const Unit& u);
  void eval_delayed_units();
  void take_staged(std::vector<std::pair<SignalId, BitVec>>& out);

  const Design* design_;
  SimMode mode_;
  ChangeSink sink_;
  std::vector<BitVec> vals_;
  uint64_t time_ = 0;
  bool suppress_events_ = false;

  std::vector<Unit> comb_units_;
  std::vector<Unit> seq_units_;
  std::vector<Unit> delayed_units_;

  std::vector<bool> tracked_mask_;
  std::vector<SignalId> tracked_list_;

  std::vector<std::pair<SignalId, BitVec>> staged_;

  struct PendingEvent {
    uint64_t t;
    SignalId sig;
    BitVec val;
  };
  std::vector<PendingEvent> pending_;  // kept sorted by (t, sig)

  // reused scratch
  std::vector<std::pair<SignalId, BitVec>> writes_buf_;
  std::vector<std::pair<SignalId, BitVec>> commits_buf_;
  std::vector<BitVec> snapshot_buf_;
  mutable std::vector<BitVec> stack_scratch_;
  std::vector<BitVec> slots_scratch_;

  static constexpr uint32_t kDeltaLimit = 1000;
};

}  // namespace vgf
