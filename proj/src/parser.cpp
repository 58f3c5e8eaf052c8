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

#include "vgf/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace vgf {
namespace {

enum class Tok : uint8_t { ident, number, sized, punct, eof };

struct Token {
  Tok kind = Tok::eof;
  std::string text;       // ident / punct spelling
  uint64_t value = 0;     // number
  BitVec sized_value;     // sized literal
  int line = 0, col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(tok_.line, tok_.col, msg);
  }

  bool saw_code() const { return saw_code_; }

 private:
  void advance() {
    skip_ws();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.kind = Tok::eof;
      return;
    }
    saw_code_ = true;
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        bump();
      tok_.kind = Tok::ident;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      uint64_t dec = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        dec = dec * 10 + (s_[pos_] - '0');
        bump();
      }
      if (pos_ < s_.size() && s_[pos_] == '\'') {
        bump();
        lex_sized(static_cast<uint32_t>(dec));
        return;
      }
      tok_.kind = Tok::number;
      tok_.value = dec;
      return;
    }
    // multi-char punctuation
    static const char* two[] = {"<=", ">=", "==", "!=", "&&", "||", "<<", ">>"};
    if (pos_ + 1 < s_.size()) {
      std::string pair = s_.substr(pos_, 2);
      for (const char* p : two) {
        if (pair == p) {
          tok_.kind = Tok::punct;
          tok_.text = pair;
          bump();
          bump();
          return;
        }
      }
    }
    tok_.kind = Tok::punct;
    tok_.text = std::string(1, c);
    bump();
  }

  void lex_sized(uint32_t width) {
    if (width == 0 || width > BitVec::kMaxWidth)
      throw SyntaxError(line_, col_, "literal width out of range (1..128)");
    if (pos_ >= s_.size()) throw SyntaxError(line_, col_, "truncated sized literal");
    char base = s_[pos_];
    bump();
    BitVec v = BitVec::zeros(width);
    bool any = false;
    auto push = [&](uint32_t digit, uint32_t bits) {
      v = v.shl(bits);
      v = bv_or(v, BitVec(width, digit), width);
      any = true;
    };
    while (pos_ < s_.size()) {
      char d = s_[pos_];
      if (d == '_') {
        bump();
        continue;
      }
      if (base == 'h' || base == 'H') {
        if (!std::isxdigit(static_cast<unsigned char>(d))) break;
        uint32_t dig = std::isdigit(static_cast<unsigned char>(d))
                           ? d - '0'
                           : 10 + (std::tolower(d) - 'a');
        push(dig, 4);
      } else if (base == 'b' || base == 'B') {
        if (d != '0' && d != '1') break;
        push(d - '0', 1);
      } else if (base == 'd' || base == 'D') {
        if (!std::isdigit(static_cast<unsigned char>(d))) break;
        // decimal: multiply-accumulate
        BitVec ten(width, 10);
        BitVec acc = BitVec::zeros(width);
        // v = v*10 + d, via shifts: v*10 = v*8 + v*2
        acc = bv_add(v.shl(3), v.shl(1), width);
        v = bv_add(acc, BitVec(width, uint64_t(d - '0')), width);
        any = true;
        (void)ten;
      } else {
        throw SyntaxError(line_, col_, std::string("unknown literal base '") + base + "'");
      }
      bump();
    }
    if (!any) throw SyntaxError(line_, col_, "sized literal has no digits");
    tok_.kind = Tok::sized;
    tok_.sized_value = v;
  }

  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else if (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '/') {
        while (pos_ < s_.size() && s_[pos_] != '\n') bump();
      } else if (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '*') {
        bump();
        bump();
        while (pos_ + 1 < s_.size() && !(s_[pos_] == '*' && s_[pos_ + 1] == '/')) bump();
        if (pos_ + 1 >= s_.size())
          throw SyntaxError(line_, col_, "unterminated block comment");
        bump();
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
  bool saw_code_ = false;
};

struct PendingAssertion {
  std::string name;
  Expr expr;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Design run() {
    if (lex_.peek().kind == Tok::eof)
      throw SyntaxError(1, 1, "empty source (no module after comment stripping)");
    expect_kw("module");
    design_.name = expect_ident("module name");
    expect_punct("(");
    parse_port(true);
    while (accept_punct(",")) parse_port(false);
    expect_punct(")");
    expect_punct(";");
    while (!peek_kw("endmodule")) parse_item();
    expect_kw("endmodule");
    check_semantics();
    return std::move(design_);
  }

 private:
  // ---------- token helpers ----------
  bool peek_kw(const std::string& kw) const {
    return lex_.peek().kind == Tok::ident && lex_.peek().text == kw;
  }
  bool accept_kw(const std::string& kw) {
    if (!peek_kw(kw)) return false;
    lex_.take();
    return true;
  }
  void expect_kw(const std::string& kw) {
    if (!accept_kw(kw)) lex_.fail("expected '" + kw + "'");
  }
  bool peek_punct(const std::string& p) const {
    return lex_.peek().kind == Tok::punct && lex_.peek().text == p;
  }
  bool accept_punct(const std::string& p) {
    if (!peek_punct(p)) return false;
    lex_.take();
    return true;
  }
  void expect_punct(const std::string& p) {
    if (!accept_punct(p)) lex_.fail("expected '" + p + "'");
  }
  std::string expect_ident(const std::string& what) {
    if (lex_.peek().kind != Tok::ident) lex_.fail("expected " + what);
    return lex_.take().text;
  }
  uint64_t expect_number(const std::string& what) {
    if (lex_.peek().kind != Tok::number) lex_.fail("expected " + what);
    return lex_.take().value;
  }

  // ---------- declarations ----------
  uint32_t parse_range_width() {
    // "[msb:lsb]" with lsb == 0
    if (!accept_punct("[")) return 1;
    uint64_t msb = expect_number("range msb");
    expect_punct(":");
    uint64_t lsb = expect_number("range lsb");
    expect_punct("]");
    if (lsb != 0) lex_.fail("ranges must be [msb:0]");
    if (msb >= BitVec::kMaxWidth) lex_.fail("signal width exceeds 128 bits");
    return static_cast<uint32_t>(msb) + 1;
  }

  void declare(const std::string& bare, uint32_t width, SignalKind kind, BitVec init) {
    if (names_.count(bare))
      throw SemanticError(SemanticErrorKind::other,
                          "signal '" + bare + "' declared twice");
    SignalDecl d;
    d.id = static_cast<SignalId>(design_.signals.size());
    d.name = design_.name + "." + bare;
    d.width = width;
    d.kind = kind;
    init.width = width;
    init.mask();
    d.init = init;
    names_[bare] = d.id;
    design_.signals.push_back(std::move(d));
  }

  void parse_port(bool) {
    bool is_input;
    if (accept_kw("input"))
      is_input = true;
    else if (accept_kw("output"))
      is_input = false;
    else {
      lex_.fail("expected 'input' or 'output'");
      return;
    }
    expect_kw("wire");
    uint32_t width = parse_range_width();
    std::string name = expect_ident("port name");
    declare(name, width, is_input ? SignalKind::input : SignalKind::output,
            BitVec::zeros(width));
  }

  void parse_item() {
    if (accept_kw("reg")) {
      uint32_t width = parse_range_width();
      std::string name = expect_ident("register name");
      BitVec init = BitVec::zeros(width);
      if (accept_punct("=")) {
        init = expect_literal();
        if (init.width != width)
          throw SemanticError(SemanticErrorKind::width_mismatch,
                              "init width of '" + name + "' does not match declaration");
      }
      expect_punct(";");
      declare(name, width, SignalKind::reg, init);
      return;
    }
    if (accept_kw("wire")) {
      uint32_t width = parse_range_width();
      std::string name = expect_ident("wire name");
      expect_punct(";");
      declare(name, width, SignalKind::wire, BitVec::zeros(width));
      return;
    }
    if (accept_kw("rom")) {
      parse_rom();
      return;
    }
    if (accept_kw("assign")) {
      parse_assign();
      return;
    }
    if (accept_kw("always_comb")) {
      Process p;
      p.kind = ProcessKind::combinational;
      p.body.push_back(parse_stmt());
      design_.processes.push_back(std::move(p));
      return;
    }
    if (accept_kw("always")) {
      parse_always_at();
      return;
    }
    if (lex_.peek().kind == Tok::ident) {
      // "label : assert property ( expr ) ;"
      std::string label = lex_.take().text;
      expect_punct(":");
      expect_kw("assert");
      expect_kw("property");
      expect_punct("(");
      Expr e = parse_expr();
      expect_punct(")");
      expect_punct(";");
      if (e.width != 1)
        throw SemanticError(SemanticErrorKind::other,
                            "assertion '" + label + "' does not type-check to 1 bit");
      design_.assertions.push_back({label, std::move(e)});
      return;
    }
    lex_.fail("expected a module item");
  }

  void parse_rom() {
    uint32_t width = parse_range_width();
    std::string name = expect_ident("rom name");
    expect_punct("[");
    uint64_t first = expect_number("rom range");
    expect_punct(":");
    uint64_t last = expect_number("rom range");
    expect_punct("]");
    if (first != 0 || last == 0) lex_.fail("rom ranges must be [0:N-1]");
    uint64_t size = last + 1;
    expect_punct("=");
    expect_punct("{");
    Rom rom;
    rom.name = name;
    rom.width = width;
    rom.data.push_back(expect_literal_width(width, name));
    while (accept_punct(",")) rom.data.push_back(expect_literal_width(width, name));
    expect_punct("}");
    expect_punct(";");
    if (rom.data.size() != size)
      throw SemanticError(SemanticErrorKind::other,
                          "rom '" + name + "' entry count does not match its range");
    if (roms_.count(name) || names_.count(name))
      throw SemanticError(SemanticErrorKind::other, "'" + name + "' declared twice");
    roms_[name] = static_cast<uint32_t>(design_.roms.size());
    design_.roms.push_back(std::move(rom));
  }

  BitVec expect_literal() {
    if (lex_.peek().kind == Tok::sized) return lex_.take().sized_value;
    if (lex_.peek().kind == Tok::number) {
      uint64_t v = lex_.take().value;
      return BitVec(32, v);
    }
    lex_.fail("expected a literal");
  }

  BitVec expect_literal_width(uint32_t width, const std::string& ctx) {
    BitVec v = expect_literal();
    if (v.width != width)
      throw SemanticError(SemanticErrorKind::width_mismatch,
                          "literal width mismatch in '" + ctx + "'");
    return v;
  }

  void parse_assign() {
    Process p;
    p.kind = ProcessKind::combinational;
    if (accept_punct("#")) {
      p.delay = static_cast<uint32_t>(expect_number("delay"));
    }
    std::string target = expect_ident("assign target");
    expect_punct("=");
    Stmt s;
    s.kind = StmtKind::assign;
    s.target = resolve(target);
    s.nonblocking = false;
    s.rhs = parse_expr();
    expect_punct(";");
    p.body.push_back(std::move(s));
    design_.processes.push_back(std::move(p));
  }

  void parse_always_at() {
    expect_punct("@");
    expect_punct("(");
    Process p;
    if (accept_punct("*")) {
      p.kind = ProcessKind::combinational;
    } else {
      p.kind = ProcessKind::sequential;
      do {
        Trigger t;
        if (accept_kw("posedge"))
          t.edge = EdgeKind::rising;
        else if (accept_kw("negedge"))
          t.edge = EdgeKind::falling;
        else
          lex_.fail("expected 'posedge' or 'negedge'");
        t.signal = resolve(expect_ident("trigger signal"));
        p.triggers.push_back(t);
      } while (accept_kw("or"));
    }
    expect_punct(")");
    p.body.push_back(parse_stmt());
    design_.processes.push_back(std::move(p));
  }

  // ---------- statements ----------
  Stmt parse_stmt() {
    if (accept_kw("begin")) {
      Stmt s;
      s.kind = StmtKind::block;
      while (!accept_kw("end")) s.body.push_back(parse_stmt());
      return s;
    }
    if (accept_kw("if")) {
      Stmt s;
      s.kind = StmtKind::if_stmt;
      expect_punct("(");
      s.cond = parse_expr();
      expect_punct(")");
      s.then_body.push_back(parse_stmt());
      if (accept_kw("else")) s.else_body.push_back(parse_stmt());
      return s;
    }
    if (accept_kw("case")) {
      Stmt s;
      s.kind = StmtKind::case_stmt;
      expect_punct("(");
      s.selector = parse_expr();
      expect_punct(")");
      while (!accept_kw("endcase")) {
        if (accept_kw("default")) {
          expect_punct(":");
          s.default_body.push_back(parse_stmt());
        } else {
          Stmt::CaseItem item;
          item.match = expect_literal();
          expect_punct(":");
          item.body.push_back(parse_stmt());
          s.items.push_back(std::move(item));
        }
      }
      return s;
    }
    // assignment
    std::string target = expect_ident("assignment target");
    Stmt s;
    s.kind = StmtKind::assign;
    s.target = resolve(target);
    if (accept_punct("<="))
      s.nonblocking = true;
    else if (accept_punct("="))
      s.nonblocking = false;
    else
      lex_.fail("expected '=' or '<='");
    s.rhs = parse_expr();
    expect_punct(";");
    return s;
  }

  // ---------- expressions ----------
  SignalId resolve(const std::string& bare) {
    auto it = names_.find(bare);
    if (it == names_.end())
      throw SemanticError(SemanticErrorKind::undeclared_signal,
                          "undeclared signal '" + bare + "'");
    return it->second;
  }

  Expr parse_expr() { return parse_ternary(); }

  Expr parse_ternary() {
    Expr c = parse_log_or();
    if (!accept_punct("?")) return c;
    Expr t = parse_expr();
    expect_punct(":");
    Expr e = parse_ternary();
    Expr r;
    r.kind = ExprKind::ternary;
    r.width = std::max(t.width, e.width);
    r.kids = {std::move(c), std::move(t), std::move(e)};
    return r;
  }

  Expr binary(ExprKind k, Expr lhs, Expr rhs) {
    Expr r;
    r.kind = k;
    switch (k) {
      case ExprKind::eq:
      case ExprKind::ne:
      case ExprKind::lt:
      case ExprKind::le:
      case ExprKind::gt:
      case ExprKind::ge:
      case ExprKind::log_and:
      case ExprKind::log_or:
        r.width = 1;
        break;
      case ExprKind::concat:
        r.width = lhs.width + rhs.width;
        break;
      default:
        r.width = std::max(lhs.width, rhs.width);
        break;
    }
    if (r.width > BitVec::kMaxWidth)
      throw SemanticError(SemanticErrorKind::width_mismatch,
                          "expression wider than 128 bits");
    r.kids = {std::move(lhs), std::move(rhs)};
    return r;
  }

  Expr parse_log_or() {
    Expr e = parse_log_and();
    while (accept_punct("||")) e = binary(ExprKind::log_or, std::move(e), parse_log_and());
    return e;
  }
  Expr parse_log_and() {
    Expr e = parse_bit_or();
    while (accept_punct("&&")) e = binary(ExprKind::log_and, std::move(e), parse_bit_or());
    return e;
  }
  Expr parse_bit_or() {
    Expr e = parse_bit_xor();
    while (peek_punct("|")) {
      lex_.take();
      e = binary(ExprKind::bit_or, std::move(e), parse_bit_xor());
    }
    return e;
  }
  Expr parse_bit_xor() {
    Expr e = parse_bit_and();
    while (accept_punct("^")) e = binary(ExprKind::bit_xor, std::move(e), parse_bit_and());
    return e;
  }
  Expr parse_bit_and() {
    Expr e = parse_equality();
    while (peek_punct("&")) {
      lex_.take();
      e = binary(ExprKind::bit_and, std::move(e), parse_equality());
    }
    return e;
  }
  Expr parse_equality() {
    Expr e = parse_relational();
    for (;;) {
      if (accept_punct("=="))
        e = binary(ExprKind::eq, std::move(e), parse_relational());
      else if (accept_punct("!="))
        e = binary(ExprKind::ne, std::move(e), parse_relational());
      else
        return e;
    }
  }
  Expr parse_relational() {
    Expr e = parse_shift();
    for (;;) {
      if (accept_punct("<="))
        e = binary(ExprKind::le, std::move(e), parse_shift());
      else if (accept_punct(">="))
        e = binary(ExprKind::ge, std::move(e), parse_shift());
      else if (accept_punct("<"))
        e = binary(ExprKind::lt, std::move(e), parse_shift());
      else if (accept_punct(">"))
        e = binary(ExprKind::gt, std::move(e), parse_shift());
      else
        return e;
    }
  }
  Expr parse_shift() {
    Expr e = parse_additive();
    for (;;) {
      ExprKind k;
      if (accept_punct("<<"))
        k = ExprKind::shl;
      else if (accept_punct(">>"))
        k = ExprKind::shr;
      else
        return e;
      uint64_t amount = expect_number("shift amount");
      Expr r;
      r.kind = k;
      r.width = e.width;
      r.a = static_cast<uint32_t>(amount);
      r.kids = {std::move(e)};
      e = std::move(r);
    }
  }
  Expr parse_additive() {
    Expr e = parse_unary();
    for (;;) {
      if (accept_punct("+"))
        e = binary(ExprKind::add, std::move(e), parse_unary());
      else if (accept_punct("-"))
        e = binary(ExprKind::sub, std::move(e), parse_unary());
      else
        return e;
    }
  }
  Expr parse_unary() {
    if (accept_punct("~")) {
      Expr k = parse_unary();
      Expr r;
      r.kind = ExprKind::bit_not;
      r.width = k.width;
      r.kids = {std::move(k)};
      return r;
    }
    if (accept_punct("!")) {
      Expr k = parse_unary();
      Expr r;
      r.kind = ExprKind::log_not;
      r.width = 1;
      r.kids = {std::move(k)};
      return r;
    }
    if (accept_punct("-")) {
      Expr k = parse_unary();
      Expr r;
      r.kind = ExprKind::negate;
      r.width = k.width;
      r.kids = {std::move(k)};
      return r;
    }
    return parse_primary();
  }

  Expr parse_primary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::sized || t.kind == Tok::number) {
      Expr e;
      e.kind = ExprKind::constant;
      e.imm = expect_literal();
      e.width = e.imm.width;
      return e;
    }
    if (accept_punct("(")) {
      Expr e = parse_expr();
      expect_punct(")");
      return e;
    }
    if (accept_punct("{")) {
      Expr e = parse_expr();
      while (accept_punct(",")) e = binary(ExprKind::concat, std::move(e), parse_expr());
      expect_punct("}");
      return e;
    }
    if (t.kind == Tok::ident) {
      std::string name = lex_.take().text;
      auto rom_it = roms_.find(name);
      if (rom_it != roms_.end()) {
        expect_punct("[");
        Expr idx = parse_expr();
        expect_punct("]");
        Expr e;
        e.kind = ExprKind::rom_read;
        e.rom = rom_it->second;
        e.width = design_.roms[e.rom].width;
        e.kids = {std::move(idx)};
        return e;
      }
      Expr e;
      e.kind = ExprKind::signal_ref;
      e.sig = resolve(name);
      e.width = design_.signals[e.sig].width;
      if (accept_punct("[")) {
        uint64_t first = expect_number("bit index");
        if (accept_punct(":")) {
          uint64_t last = expect_number("part-select lsb");
          expect_punct("]");
          if (first < last || first >= e.width)
            throw SemanticError(SemanticErrorKind::width_mismatch,
                                "part select out of range on '" + name + "'");
          Expr r;
          r.kind = ExprKind::part_sel;
          r.a = static_cast<uint32_t>(first);
          r.b = static_cast<uint32_t>(last);
          r.width = static_cast<uint32_t>(first - last) + 1;
          r.kids = {std::move(e)};
          return r;
        }
        expect_punct("]");
        if (first >= e.width)
          throw SemanticError(SemanticErrorKind::width_mismatch,
                              "bit select out of range on '" + name + "'");
        Expr r;
        r.kind = ExprKind::bit_sel;
        r.a = static_cast<uint32_t>(first);
        r.width = 1;
        r.kids = {std::move(e)};
        return r;
      }
      return e;
    }
    lex_.fail("expected an expression");
  }

  // ---------- semantic checks ----------
  enum class DriverKind { none, comb, seq };

  void check_stmt_styles(const Stmt& s, bool seq, const std::string& where) {
    switch (s.kind) {
      case StmtKind::assign: {
        if (seq && !s.nonblocking)
          throw SemanticError(SemanticErrorKind::other,
                              "blocking assignment in sequential process (" + where + ")");
        if (!seq && s.nonblocking)
          throw SemanticError(SemanticErrorKind::other,
                              "nonblocking assignment in combinational process (" + where + ")");
        const SignalDecl& d = design_.signals[s.target];
        if (d.kind == SignalKind::input)
          throw SemanticError(SemanticErrorKind::other,
                              "input '" + d.name + "' cannot be assigned");
        if (seq && d.kind != SignalKind::reg)
          throw SemanticError(SemanticErrorKind::other,
                              "sequential assignment to non-register '" + d.name + "'");
        break;
      }
      case StmtKind::if_stmt:
        for (const Stmt& t : s.then_body) check_stmt_styles(t, seq, where);
        for (const Stmt& t : s.else_body) check_stmt_styles(t, seq, where);
        break;
      case StmtKind::case_stmt:
        for (const auto& it : s.items)
          for (const Stmt& t : it.body) check_stmt_styles(t, seq, where);
        for (const Stmt& t : s.default_body) check_stmt_styles(t, seq, where);
        break;
      case StmtKind::block:
        for (const Stmt& t : s.body) check_stmt_styles(t, seq, where);
        break;
    }
  }

  void check_semantics() {
    std::vector<DriverKind> driver(design_.signals.size(), DriverKind::none);
    for (const Process& p : design_.processes) {
      bool seq = p.kind == ProcessKind::sequential;
      for (const Stmt& s : p.body) check_stmt_styles(s, seq, design_.name);
      for (SignalId t : p.targets()) {
        DriverKind mine = seq ? DriverKind::seq : DriverKind::comb;
        if (driver[t] == DriverKind::none) {
          driver[t] = mine;
        } else if (driver[t] == DriverKind::seq && mine == DriverKind::seq) {
          throw SemanticError(SemanticErrorKind::multiple_drivers,
                              "'" + design_.signals[t].name +
                                  "' driven by two sequential processes");
        } else {
          throw SemanticError(SemanticErrorKind::multiple_drivers,
                              "'" + design_.signals[t].name + "' has multiple drivers");
        }
      }
      if (seq) {
        if (p.triggers.empty())
          throw SemanticError(SemanticErrorKind::other, "sequential process without clock");
        for (const Trigger& t : p.triggers)
          if (design_.signals[t.signal].kind != SignalKind::input)
            throw SemanticError(SemanticErrorKind::other,
                                "process trigger '" + design_.signals[t.signal].name +
                                    "' is not an input");
      }
      if (p.delay > 0 && (p.body.size() != 1 || p.body[0].kind != StmtKind::assign))
        throw SemanticError(SemanticErrorKind::other, "delay on a non-assign process");
    }
  }

  Lexer lex_;
  Design design_;
  std::map<std::string, SignalId> names_;
  std::map<std::string, uint32_t> roms_;
};

}  // namespace

Design parse_design(const SourceText& src) {
  Parser p(src.text);
  return p.run();
}

Design parse_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open design file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_design(SourceText{ss.str(), path});
}

}  // namespace vgf
