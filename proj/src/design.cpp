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

#include "vgf/design.hpp"

#include <algorithm>

namespace vgf {

const char* signal_kind_name(SignalKind k) {
  switch (k) {
    case SignalKind::input: return "input";
    case SignalKind::output: return "output";
    case SignalKind::reg: return "register";
    case SignalKind::wire: return "wire";
  }
  return "?";
}

std::string BitVec::to_hex() const {
  static const char* digits = "0123456789abcdef";
  uint32_t nibbles = (width + 3) / 4;
  std::string s(nibbles, '0');
  for (uint32_t i = 0; i < nibbles; ++i) {
    uint32_t pos = (nibbles - 1 - i) * 4;
    uint64_t word = pos < 64 ? (lo >> pos) : (hi >> (pos - 64));
    if (pos < 64 && pos + 4 > 64) word |= hi << (64 - pos);
    s[i] = digits[word & 0xF];
  }
  return s;
}

void Expr::collect_reads(std::vector<SignalId>& out) const {
  if (kind == ExprKind::signal_ref) out.push_back(sig);
  for (const Expr& k : kids) k.collect_reads(out);
}

void Expr::collect_rom_index_reads(std::vector<SignalId>& out) const {
  if (kind == ExprKind::rom_read) {
    kids[0].collect_reads(out);
    return;
  }
  for (const Expr& k : kids) k.collect_rom_index_reads(out);
}

static void collect_stmt_targets(const Stmt& s, std::vector<SignalId>& out) {
  switch (s.kind) {
    case StmtKind::assign:
      out.push_back(s.target);
      break;
    case StmtKind::if_stmt:
      for (const Stmt& t : s.then_body) collect_stmt_targets(t, out);
      for (const Stmt& t : s.else_body) collect_stmt_targets(t, out);
      break;
    case StmtKind::case_stmt:
      for (const auto& item : s.items)
        for (const Stmt& t : item.body) collect_stmt_targets(t, out);
      for (const Stmt& t : s.default_body) collect_stmt_targets(t, out);
      break;
    case StmtKind::block:
      for (const Stmt& t : s.body) collect_stmt_targets(t, out);
      break;
  }
}

std::vector<SignalId> Process::targets() const {
  std::vector<SignalId> out;
  for (const Stmt& s : body) collect_stmt_targets(s, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<SignalId> Design::find_signal(const std::string& n) const {
  std::optional<SignalId> match;
  for (const SignalDecl& s : signals) {
    if (s.name == n) return s.id;
    // bare-name match against the suffix after the last '.'
    auto dot = s.name.rfind('.');
    if (dot != std::string::npos && s.name.compare(dot + 1, std::string::npos, n) == 0) {
      if (match) return std::nullopt;  // ambiguous
      match = s.id;
    }
  }
  return match;
}

std::optional<uint32_t> Design::find_assertion(const std::string& n) const {
  for (uint32_t i = 0; i < assertions.size(); ++i)
    if (assertions[i].name == n) return i;
  return std::nullopt;
}

std::vector<SignalListing> list_signals(const Design& d) {
  std::vector<SignalListing> out;
  out.reserve(d.signals.size());
  for (const SignalDecl& s : d.signals)
    out.push_back({s.id, s.name, s.width, s.kind});
  return out;
}

}  // namespace vgf
