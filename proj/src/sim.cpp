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

#include "vgf/sim.hpp"

#include <algorithm>
#include <map>

namespace vgf {

namespace {

enum class Op : uint8_t {
  push_const,
  push_global,
  push_local,
  rom_read,
  bit_not,
  log_not,
  negate,
  bit_and,
  bit_or,
  bit_xor,
  add,
  sub,
  shl,
  shr,
  cmp_eq,
  cmp_ne,
  cmp_lt,
  cmp_le,
  cmp_gt,
  cmp_ge,
  log_and,
  log_or,
  concat,
  bit_sel,
  part_sel,
  select3,
  store_local,
  jump,
  jump_if_zero,
  halt,
};

inline Op opcode(const SimInstr& in) { return static_cast<Op>(in.op); }

SimInstr make(Op op, uint32_t a = 0, uint32_t b = 0, uint32_t w = 0, BitVec imm = {}) {
  SimInstr i;
  i.op = static_cast<uint8_t>(op);
  i.a = a;
  i.b = b;
  i.w = w;
  i.imm = imm;
  return i;
}

// Shared pure-expression interpreter step. Returns false when the op is not
// an expression op (store/jump/halt), which the unit runner handles itself.
template <typename ReadGlobal, typename ReadLocal, typename RomTable>
inline bool eval_step(const SimInstr& in, BitVec* stack, size_t& sp,
                      ReadGlobal&& global, ReadLocal&& local, RomTable&& roms) {
  switch (opcode(in)) {
    case Op::push_const:
      stack[sp++] = in.imm;
      return true;
    case Op::push_global:
      stack[sp++] = global(in.a);
      return true;
    case Op::push_local:
      stack[sp++] = local(in.a);
      return true;
    case Op::rom_read: {
      const Rom& rom = roms(in.a);
      uint64_t idx = stack[sp - 1].to_u64();
      stack[sp - 1] = (stack[sp - 1].hi == 0 && idx < rom.data.size())
                          ? rom.data[idx]
                          : BitVec::zeros(rom.width);
      return true;
    }
    case Op::bit_not:
      stack[sp - 1] = bv_not(stack[sp - 1].resized(in.w), in.w);
      return true;
    case Op::log_not:
      stack[sp - 1] = BitVec(1, stack[sp - 1].is_zero() ? 1 : 0);
      return true;
    case Op::negate:
      stack[sp - 1] = bv_neg(stack[sp - 1].resized(in.w), in.w);
      return true;
    case Op::bit_and:
    case Op::bit_or:
    case Op::bit_xor:
    case Op::add:
    case Op::sub: {
      BitVec b = stack[--sp].resized(in.w);
      BitVec a = stack[sp - 1].resized(in.w);
      switch (opcode(in)) {
        case Op::bit_and: stack[sp - 1] = bv_and(a, b, in.w); break;
        case Op::bit_or: stack[sp - 1] = bv_or(a, b, in.w); break;
        case Op::bit_xor: stack[sp - 1] = bv_xor(a, b, in.w); break;
        case Op::add: stack[sp - 1] = bv_add(a, b, in.w); break;
        default: stack[sp - 1] = bv_sub(a, b, in.w); break;
      }
      return true;
    }
    case Op::shl:
      stack[sp - 1] = stack[sp - 1].resized(in.w).shl(in.a);
      return true;
    case Op::shr:
      stack[sp - 1] = stack[sp - 1].resized(in.w).shr(in.a);
      return true;
    case Op::cmp_eq:
    case Op::cmp_ne:
    case Op::cmp_lt:
    case Op::cmp_le:
    case Op::cmp_gt:
    case Op::cmp_ge: {
      BitVec b = stack[--sp].resized(in.w);
      BitVec a = stack[sp - 1].resized(in.w);
      int c = a.cmp(b);
      bool r = false;
      switch (opcode(in)) {
        case Op::cmp_eq: r = c == 0; break;
        case Op::cmp_ne: r = c != 0; break;
        case Op::cmp_lt: r = c < 0; break;
        case Op::cmp_le: r = c <= 0; break;
        case Op::cmp_gt: r = c > 0; break;
        default: r = c >= 0; break;
      }
      stack[sp - 1] = BitVec(1, r ? 1 : 0);
      return true;
    }
    case Op::log_and: {
      BitVec b = stack[--sp];
      stack[sp - 1] = BitVec(1, (!stack[sp - 1].is_zero() && !b.is_zero()) ? 1 : 0);
      return true;
    }
    case Op::log_or: {
      BitVec b = stack[--sp];
      stack[sp - 1] = BitVec(1, (!stack[sp - 1].is_zero() || !b.is_zero()) ? 1 : 0);
      return true;
    }
    case Op::concat: {
      BitVec b = stack[--sp];
      BitVec a = stack[sp - 1];
      a.width = in.w - in.b;
      a.mask();
      b.width = in.b;
      b.mask();
      stack[sp - 1] = bv_concat(a, b);
      return true;
    }
    case Op::bit_sel:
      stack[sp - 1] = BitVec(1, stack[sp - 1].bit(in.a) ? 1 : 0);
      return true;
    case Op::part_sel:
      stack[sp - 1] = bv_slice(stack[sp - 1], in.a, in.b);
      return true;
    case Op::select3: {
      BitVec e = stack[--sp];
      BitVec t = stack[--sp];
      BitVec c = stack[--sp];
      stack[sp++] = (c.truthy() ? t : e).resized(in.w);
      return true;
    }
    default:
      return false;
  }
}

class UnitCompiler {
 public:
  UnitCompiler(const Design& d, std::vector<SimInstr>& code,
               const std::map<SignalId, uint32_t>* slot_of, bool local_reads)
      : design_(d), code_(code), slot_of_(slot_of), local_reads_(local_reads) {}

  void expr(const Expr& e) {
    switch (e.kind) {
      case ExprKind::constant:
        emit(make(Op::push_const, 0, 0, e.width, e.imm));
        break;
      case ExprKind::signal_ref: {
        if (local_reads_ && slot_of_) {
          auto it = slot_of_->find(e.sig);
          if (it != slot_of_->end()) {
            emit(make(Op::push_local, it->second, 0, e.width));
            break;
          }
        }
        emit(make(Op::push_global, e.sig, 0, e.width));
        break;
      }
      case ExprKind::rom_read:
        expr(e.kids[0]);
        emit(make(Op::rom_read, e.rom, 0, e.width));
        break;
      case ExprKind::bit_sel:
        expr(e.kids[0]);
        emit(make(Op::bit_sel, e.a, 0, 1));
        break;
      case ExprKind::part_sel:
        expr(e.kids[0]);
        emit(make(Op::part_sel, e.a, e.b, e.width));
        break;
      case ExprKind::log_not:
        expr(e.kids[0]);
        emit(make(Op::log_not, 0, 0, 1));
        break;
      case ExprKind::bit_not:
        expr(e.kids[0]);
        emit(make(Op::bit_not, 0, 0, e.width));
        break;
      case ExprKind::negate:
        expr(e.kids[0]);
        emit(make(Op::negate, 0, 0, e.width));
        break;
      case ExprKind::shl:
      case ExprKind::shr:
        expr(e.kids[0]);
        emit(make(e.kind == ExprKind::shl ? Op::shl : Op::shr, e.a, 0, e.width));
        break;
      case ExprKind::bit_and:
      case ExprKind::bit_or:
      case ExprKind::bit_xor:
      case ExprKind::add:
      case ExprKind::sub: {
        expr(e.kids[0]);
        expr(e.kids[1]);
        Op op = e.kind == ExprKind::bit_and   ? Op::bit_and
                : e.kind == ExprKind::bit_or  ? Op::bit_or
                : e.kind == ExprKind::bit_xor ? Op::bit_xor
                : e.kind == ExprKind::add     ? Op::add
                                              : Op::sub;
        emit(make(op, 0, 0, e.width));
        break;
      }
      case ExprKind::eq:
      case ExprKind::ne:
      case ExprKind::lt:
      case ExprKind::le:
      case ExprKind::gt:
      case ExprKind::ge: {
        expr(e.kids[0]);
        expr(e.kids[1]);
        uint32_t cw = std::max(e.kids[0].width, e.kids[1].width);
        Op op = e.kind == ExprKind::eq   ? Op::cmp_eq
                : e.kind == ExprKind::ne ? Op::cmp_ne
                : e.kind == ExprKind::lt ? Op::cmp_lt
                : e.kind == ExprKind::le ? Op::cmp_le
                : e.kind == ExprKind::gt ? Op::cmp_gt
                                         : Op::cmp_ge;
        emit(make(op, 0, 0, cw));
        break;
      }
      case ExprKind::log_and:
      case ExprKind::log_or:
        expr(e.kids[0]);
        expr(e.kids[1]);
        emit(make(e.kind == ExprKind::log_and ? Op::log_and : Op::log_or, 0, 0, 1));
        break;
      case ExprKind::concat:
        expr(e.kids[0]);
        expr(e.kids[1]);
        emit(make(Op::concat, 0, e.kids[1].width, e.width));
        break;
      case ExprKind::ternary:
        expr(e.kids[0]);
        expr(e.kids[1]);
        expr(e.kids[2]);
        emit(make(Op::select3, 0, 0, e.width));
        break;
    }
  }

  void stmt(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::assign: {
        expr(s.rhs);
        uint32_t slot = slot_of_->at(s.target);
        emit(make(Op::store_local, slot, 0, design_.signals[s.target].width));
        break;
      }
      case StmtKind::if_stmt: {
        expr(s.cond);
        size_t jz = emit(make(Op::jump_if_zero));
        for (const Stmt& t : s.then_body) stmt(t);
        if (s.else_body.empty()) {
          patch(jz, here());
        } else {
          size_t jend = emit(make(Op::jump));
          patch(jz, here());
          for (const Stmt& t : s.else_body) stmt(t);
          patch(jend, here());
        }
        break;
      }
      case StmtKind::case_stmt: {
        std::vector<size_t> ends;
        for (const auto& item : s.items) {
          expr(s.selector);
          uint32_t cw = std::max(s.selector.width, item.match.width);
          emit(make(Op::push_const, 0, 0, item.match.width, item.match));
          emit(make(Op::cmp_eq, 0, 0, cw));
          size_t jz = emit(make(Op::jump_if_zero));
          for (const Stmt& t : item.body) stmt(t);
          ends.push_back(emit(make(Op::jump)));
          patch(jz, here());
        }
        for (const Stmt& t : s.default_body) stmt(t);
        for (size_t j : ends) patch(j, here());
        break;
      }
      case StmtKind::block:
        for (const Stmt& t : s.body) stmt(t);
        break;
    }
  }

  size_t emit(SimInstr i) {
    code_.push_back(std::move(i));
    return code_.size() - 1;
  }
  uint32_t here() const { return static_cast<uint32_t>(code_.size()); }
  void patch(size_t at, uint32_t target) { code_[at].a = target; }

 private:
  const Design& design_;
  std::vector<SimInstr>& code_;
  const std::map<SignalId, uint32_t>* slot_of_;
  bool local_reads_;
};

// Expression nesting bounds the operand stack; programs are emitted so every
// jump lands at a statement boundary where the stack is empty, so a linear
// scan gives the true maximum depth.
int max_stack_depth(const std::vector<SimInstr>& code) {
  int depth = 0, max_depth = 0;
  for (const SimInstr& in : code) {
    switch (opcode(in)) {
      case Op::push_const:
      case Op::push_global:
      case Op::push_local:
        ++depth;
        break;
      case Op::bit_and:
      case Op::bit_or:
      case Op::bit_xor:
      case Op::add:
      case Op::sub:
      case Op::cmp_eq:
      case Op::cmp_ne:
      case Op::cmp_lt:
      case Op::cmp_le:
      case Op::cmp_gt:
      case Op::cmp_ge:
      case Op::log_and:
      case Op::log_or:
      case Op::concat:
      case Op::store_local:
      case Op::jump_if_zero:
        --depth;
        break;
      case Op::select3:
        depth -= 2;
        break;
      default:
        break;
    }
    max_depth = std::max(max_depth, depth);
  }
  return max_depth;
}

}  // namespace

struct Simulator::Unit {
  std::vector<SimInstr> code;
  struct Slot {
    SignalId sig;
    uint32_t width;
  };
  std::vector<Slot> slots;
  bool seq = false;
  std::vector<Trigger> triggers;
  uint32_t delay = 0;
  BitVec last_scheduled;  // delayed units only
};

Simulator::Simulator(const Design& d, SimMode mode, ChangeSink sink)
    : design_(&d), mode_(mode), sink_(std::move(sink)) {
  vals_.resize(d.signals.size());
  for (const SignalDecl& s : d.signals)
    vals_[s.id] = s.kind == SignalKind::reg ? s.init : BitVec::zeros(s.width);
  tracked_mask_.assign(d.signals.size(), false);

  for (const Process& p : d.processes) {
    Unit u;
    u.seq = p.kind == ProcessKind::sequential;
    u.triggers = p.triggers;
    u.delay = p.delay;
    std::map<SignalId, uint32_t> slot_of;
    for (SignalId t : p.targets()) {
      uint32_t idx = static_cast<uint32_t>(u.slots.size());
      u.slots.push_back({t, d.signals[t].width});
      slot_of[t] = idx;
    }
    // Combinational processes see their own blocking writes; sequential
    // processes always read pre-edge globals.
    UnitCompiler c(d, u.code, &slot_of, /*local_reads=*/!u.seq);
    for (const Stmt& s : p.body) c.stmt(s);
    c.emit(make(Op::halt));
    if (max_stack_depth(u.code) > 63)
      throw SemanticError(SemanticErrorKind::other,
                          "expression nesting too deep to simulate");

    bool delayed = !u.seq && u.delay > 0 && mode_ == SimMode::accurate;
    if (u.seq)
      seq_units_.push_back(std::move(u));
    else if (delayed)
      delayed_units_.push_back(std::move(u));
    else
      comb_units_.push_back(std::move(u));
  }

  for (Unit& u : delayed_units_) u.last_scheduled = vals_[u.slots[0].sig];

  stack_scratch_.resize(64);
  size_t max_slots = 0;
  for (const Unit& u : comb_units_) max_slots = std::max(max_slots, u.slots.size());
  for (const Unit& u : seq_units_) max_slots = std::max(max_slots, u.slots.size());
  for (const Unit& u : delayed_units_) max_slots = std::max(max_slots, u.slots.size());
  slots_scratch_.resize(max_slots);

  // Settle wires to the combinational fixpoint; no events for initialization.
  suppress_events_ = true;
  commits_buf_.clear();
  settle_internal(commits_buf_, /*force=*/true);
  // Re-anchor delayed assigns to the settled state so construction alone
  // schedules nothing.
  for (Unit& u : delayed_units_) u.last_scheduled = eval_unit_single(u);
  pending_.clear();
  suppress_events_ = false;
}

Simulator::~Simulator() = default;

void Simulator::set_tracked(std::span<const SignalId> tracked) {
  tracked_mask_.assign(design_->signals.size(), false);
  tracked_list_.assign(tracked.begin(), tracked.end());
  std::sort(tracked_list_.begin(), tracked_list_.end());
  tracked_list_.erase(std::unique(tracked_list_.begin(), tracked_list_.end()),
                      tracked_list_.end());
  for (SignalId s : tracked_list_) {
    if (s >= design_->signals.size()) throw UnknownSignal("tracked signal out of range");
    tracked_mask_[s] = true;
  }
}

void Simulator::poke(SignalId signal, BitVec value) {
  if (signal >= design_->signals.size()) throw UnknownSignal("poke: no such signal");
  const SignalDecl& d = design_->signals[signal];
  if (d.kind != SignalKind::input)
    throw NotAnInput("poke: '" + d.name + "' is not an input");
  if (value.width != d.width)
    throw WidthMismatch("poke: width " + std::to_string(value.width) +
                        " does not match '" + d.name + "' (" +
                        std::to_string(d.width) + ")");
  deposit(signal, value);
}

void Simulator::deposit(SignalId signal, BitVec value) {
  if (signal >= design_->signals.size()) throw UnknownSignal("deposit: no such signal");
  value = value.resized(design_->signals[signal].width);
  for (auto& [sig, val] : staged_) {
    if (sig == signal) {
      val = value;
      return;
    }
  }
  staged_.push_back({signal, value});
}

void Simulator::take_staged(std::vector<std::pair<SignalId, BitVec>>& out) {
  out.insert(out.end(), staged_.begin(), staged_.end());
  staged_.clear();
}

void Simulator::settle() {
  commits_buf_.clear();
  take_staged(commits_buf_);
  settle_internal(commits_buf_);
}

void Simulator::clock_edge(SignalId clock, EdgeKind edge) {
  if (clock >= design_->signals.size()) throw UnknownClock("clock_edge: no such signal");
  if (!is_clock(clock))
    throw UnknownClock("clock_edge: '" + design_->signals[clock].name +
                       "' does not trigger any process");
  // The edge implies the trigger signal sits at its new level already, so a
  // staged poke of the trigger itself commits before sampling. Everything
  // else stays at its pre-edge value.
  bool trigger_changed = false;
  for (auto it = staged_.begin(); it != staged_.end(); ++it) {
    if (it->first != clock) continue;
    BitVec prev = vals_[clock];
    vals_[clock] = it->second;
    staged_.erase(it);
    if (prev != vals_[clock]) {
      trigger_changed = true;
      if (sink_ && !suppress_events_ && tracked_mask_[clock])
        sink_(ChangeEvent{clock, prev, vals_[clock], time_, 0});
    }
    break;
  }
  commits_buf_.clear();
  // Sample pre-edge values, then commit every nonblocking update at once.
  for (Unit& u : seq_units_) {
    bool hit = false;
    for (const Trigger& t : u.triggers)
      if (t.signal == clock && t.edge == edge) hit = true;
    if (hit) run_unit(u, commits_buf_);
  }
  take_staged(commits_buf_);
  settle_internal(commits_buf_, /*force=*/trigger_changed);
}

void Simulator::advance_time(uint64_t ticks) {
  for (uint64_t i = 0; i < ticks; ++i) {
    ++time_;
    commits_buf_.clear();
    size_t keep = 0;
    for (size_t j = 0; j < pending_.size(); ++j) {
      if (pending_[j].t <= time_)
        commits_buf_.push_back({pending_[j].sig, pending_[j].val});
      else
        pending_[keep++] = pending_[j];
    }
    pending_.resize(keep);
    take_staged(commits_buf_);
    settle_internal(commits_buf_);
  }
}

std::vector<ChangeEvent> Simulator::fast_eval(
    std::span<const std::pair<SignalId, BitVec>> inputs) {
  if (mode_ != SimMode::fast)
    throw ModeMismatch("fast_eval requires a fast-mode simulator");
  snapshot_buf_.clear();
  for (SignalId s : tracked_list_) snapshot_buf_.push_back(vals_[s]);

  bool saved = suppress_events_;
  suppress_events_ = true;
  for (const auto& [sig, val] : inputs) {
    const SignalDecl& d = design_->signals.at(sig);
    if (d.kind != SignalKind::input)
      throw NotAnInput("fast_eval: '" + d.name + "' is not an input");
    if (val.width != d.width) throw WidthMismatch("fast_eval: input width mismatch");
    deposit(sig, val);
  }
  settle();
  // Every clock ticks once, together: fire all rising-edge processes.
  commits_buf_.clear();
  for (Unit& u : seq_units_)
    if (!u.triggers.empty() && u.triggers[0].edge == EdgeKind::rising)
      run_unit(u, commits_buf_);
  settle_internal(commits_buf_);
  suppress_events_ = saved;

  ++time_;
  std::vector<ChangeEvent> out;
  for (size_t i = 0; i < tracked_list_.size(); ++i) {
    SignalId sig = tracked_list_[i];
    if (vals_[sig] != snapshot_buf_[i]) {
      ChangeEvent ev{sig, snapshot_buf_[i], vals_[sig], time_, 0};
      out.push_back(ev);
      if (sink_ && !suppress_events_) sink_(ev);
    }
  }
  return out;
}

BitVec Simulator::read(SignalId signal) const {
  if (signal >= design_->signals.size()) throw UnknownSignal("read: no such signal");
  return vals_[signal];
}

bool Simulator::is_clock(SignalId signal) const {
  for (const Unit& u : seq_units_)
    for (const Trigger& t : u.triggers)
      if (t.signal == signal) return true;
  return false;
}

void Simulator::commit_and_emit(std::vector<std::pair<SignalId, BitVec>>& writes,
                                uint32_t delta) {
  std::sort(writes.begin(), writes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // The whole delta commits before any event fires, so a change callback
  // observes every signal at its post-delta value.
  size_t n = 0;
  for (auto& [sig, val] : writes) {
    BitVec prev = vals_[sig];
    if (prev == val) continue;
    vals_[sig] = val;
    writes[n++] = {sig, prev};
  }
  writes.resize(n);
  if (!sink_ || suppress_events_) return;
  for (size_t i = 0; i < n; ++i) {
    SignalId sig = writes[i].first;
    if (tracked_mask_[sig])
      sink_(ChangeEvent{sig, writes[i].second, vals_[sig], time_, delta});
  }
}

void Simulator::settle_internal(std::vector<std::pair<SignalId, BitVec>>& commits,
                                bool force) {
  commit_and_emit(commits, 0);
  // The state is kept at the combinational fixpoint between calls, so a
  // settle that commits nothing has nothing to propagate.
  if (commits.empty() && !force) return;
  for (uint32_t delta = 1;; ++delta) {
    if (delta > kDeltaLimit)
      throw CombinationalLoop("no combinational fixpoint after " +
                              std::to_string(kDeltaLimit) + " delta cycles");
    writes_buf_.clear();
    for (Unit& u : comb_units_) run_unit(u, writes_buf_);
    if (writes_buf_.empty()) break;
    commit_and_emit(writes_buf_, delta);
    if (writes_buf_.empty()) break;  // all writes were value-preserving
  }
  eval_delayed_units();
}

// Delayed units are single-assignment programs; returns the computed value
// whether or not it differs from the target's current value.
BitVec Simulator::eval_unit_single(const Unit& u) {
  BitVec slot = vals_[u.slots[0].sig];
  BitVec* stack = stack_scratch_.data();
  size_t sp = 0;
  auto global = [&](uint32_t a) { return vals_[a]; };
  auto local = [&](uint32_t) { return slot; };
  auto roms = [&](uint32_t a) -> const Rom& { return design_->roms[a]; };
  const SimInstr* code = u.code.data();
  for (size_t pc = 0;;) {
    const SimInstr& in = code[pc];
    if (eval_step(in, stack, sp, global, local, roms)) {
      ++pc;
      continue;
    }
    switch (opcode(in)) {
      case Op::store_local:
        slot = stack[--sp].resized(in.w);
        ++pc;
        break;
      case Op::jump:
        pc = in.a;
        break;
      case Op::jump_if_zero:
        pc = stack[--sp].is_zero() ? in.a : pc + 1;
        break;
      default:
        return slot;
    }
  }
}

void Simulator::eval_delayed_units() {
  for (Unit& u : delayed_units_) {
    BitVec v = eval_unit_single(u);
    if (v == u.last_scheduled) continue;
    u.last_scheduled = v;
    SignalId target = u.slots[0].sig;
    uint64_t due = time_ + u.delay;
    bool replaced = false;
    for (PendingEvent& p : pending_) {
      if (p.t == due && p.sig == target) {
        p.val = v;
        replaced = true;
        break;
      }
    }
    if (!replaced) {
      pending_.push_back({due, target, v});
      std::sort(pending_.begin(), pending_.end(), [](const auto& a, const auto& b) {
        return a.t != b.t ? a.t < b.t : a.sig < b.sig;
      });
    }
  }
}

void Simulator::run_unit(const Unit& u, std::vector<std::pair<SignalId, BitVec>>& out) {
  BitVec* slots = slots_scratch_.data();
  BitVec* stack = stack_scratch_.data();
  for (size_t i = 0; i < u.slots.size(); ++i) slots[i] = vals_[u.slots[i].sig];

  size_t sp = 0;
  const SimInstr* code = u.code.data();
  auto global = [&](uint32_t a) { return vals_[a]; };
  auto local = [&](uint32_t a) { return slots[a]; };
  auto roms = [&](uint32_t a) -> const Rom& { return design_->roms[a]; };
  for (size_t pc = 0;;) {
    const SimInstr& in = code[pc];
    if (eval_step(in, stack, sp, global, local, roms)) {
      ++pc;
      continue;
    }
    switch (opcode(in)) {
      case Op::store_local:
        slots[in.a] = stack[--sp].resized(in.w);
        ++pc;
        break;
      case Op::jump:
        pc = in.a;
        break;
      case Op::jump_if_zero:
        pc = stack[--sp].is_zero() ? in.a : pc + 1;
        break;
      default:  // halt
        for (size_t i = 0; i < u.slots.size(); ++i)
          if (slots[i] != vals_[u.slots[i].sig])
            out.push_back({u.slots[i].sig, slots[i]});
        return;
    }
  }
}

CompiledExpr Simulator::compile(const Expr& e) const {
  CompiledExpr ce;
  UnitCompiler c(*design_, ce.code, nullptr, false);
  c.expr(e);
  c.emit(make(Op::halt));
  if (max_stack_depth(ce.code) > 63)
    throw SemanticError(SemanticErrorKind::other,
                        "expression nesting too deep to evaluate");
  return ce;
}

BitVec Simulator::eval(const CompiledExpr& ce) const {
  BitVec* stack = stack_scratch_.data();
  size_t sp = 0;
  auto global = [&](uint32_t a) { return vals_[a]; };
  auto local = [&](uint32_t) { return BitVec(); };
  auto roms = [&](uint32_t a) -> const Rom& { return design_->roms[a]; };
  for (const SimInstr& in : ce.code) {
    if (!eval_step(in, stack, sp, global, local, roms))
      break;  // halt
  }
  return sp ? stack[sp - 1] : BitVec();
}

BitVec Simulator::eval(const Expr& e) const { return eval(compile(e)); }

}  // namespace vgf
