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
#include <string>
#include <vector>

#include "vgf/bitvec.hpp"

namespace vgf {

using SignalId = uint32_t;

enum class SignalKind : uint8_t { input, output, reg, wire };

const char* signal_kind_name(SignalKind k);

struct SignalDecl {
  SignalId id = 0;
  std::string name;  // hierarchical, e.g. "lock_case.state"
  uint32_t width = 1;
  SignalKind kind = SignalKind::wire;
  BitVec init;  // registers only; zeros otherwise
};

struct Rom {
  std::string name;
  uint32_t width = 1;
  std::vector<BitVec> data;
};

enum class ExprKind : uint8_t {
  constant,
  signal_ref,
  rom_read,   // kids[0] = index expression
  bit_sel,    // kids[0][a]
  part_sel,   // kids[0][a:b]
  log_not,    // !x
  bit_not,    // ~x
  negate,     // -x
  bit_and,
  bit_or,
  bit_xor,
  add,
  sub,
  shl,   // kids[0] << constant b
  shr,   // kids[0] >> constant b
  eq,
  ne,
  lt,
  le,
  gt,
  ge,
  log_and,
  log_or,
  concat,  // kids[0] = msb part, kids[1] = lsb part
  ternary, // kids[0] ? kids[1] : kids[2]
};

struct Expr {
  ExprKind kind = ExprKind::constant;
  uint32_t width = 1;  // result width
  BitVec imm;          // constant
  SignalId sig = 0;    // signal_ref
  uint32_t rom = 0;    // rom_read
  uint32_t a = 0, b = 0;  // bit/part select bounds, shift amounts
  std::vector<Expr> kids;

  /// Signals read anywhere in this expression.
  void collect_reads(std::vector<SignalId>& out) const;
  /// Signals read inside ROM index subexpressions only.
  void collect_rom_index_reads(std::vector<SignalId>& out) const;
};

enum class StmtKind : uint8_t { assign, if_stmt, case_stmt, block };

struct Stmt {
  StmtKind kind = StmtKind::assign;

  // assign
  SignalId target = 0;
  bool nonblocking = false;
  Expr rhs;

  // if_stmt
  Expr cond;
  std::vector<Stmt> then_body;
  std::vector<Stmt> else_body;

  // case_stmt
  Expr selector;
  struct CaseItem {
    BitVec match;
    std::vector<Stmt> body;
  };
  std::vector<CaseItem> items;
  std::vector<Stmt> default_body;

  // block
  std::vector<Stmt> body;
};

enum class EdgeKind : uint8_t { rising, falling };

struct Trigger {
  SignalId signal = 0;
  EdgeKind edge = EdgeKind::rising;
};

enum class ProcessKind : uint8_t { combinational, sequential };

struct Process {
  ProcessKind kind = ProcessKind::combinational;
  std::vector<Trigger> triggers;  // sequential only; first entry is the clock
  uint32_t delay = 0;             // #N continuous assigns; 0 = immediate
  std::vector<Stmt> body;

  /// Signals assigned anywhere in the body.
  std::vector<SignalId> targets() const;
};

struct AssertionDecl {
  std::string name;
  Expr expr;  // 1-bit; the harness reports a fault when it evaluates true
};

struct Design {
  std::string name;
  std::vector<SignalDecl> signals;
  std::vector<Rom> roms;
  std::vector<Process> processes;
  std::vector<AssertionDecl> assertions;

  const SignalDecl& signal(SignalId id) const { return signals[id]; }
  /// Resolves "mod.sig" or a bare "sig" suffix; nullopt when absent/ambiguous.
  std::optional<SignalId> find_signal(const std::string& name) const;
  std::optional<uint32_t> find_assertion(const std::string& name) const;
};

struct SignalListing {
  SignalId id;
  std::string name;
  uint32_t width;
  SignalKind kind;
};

/// Stable, declaration-ordered listing.
std::vector<SignalListing> list_signals(const Design& d);

}  // namespace vgf
