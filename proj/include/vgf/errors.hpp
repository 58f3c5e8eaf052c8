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
#include <stdexcept>
#include <string>

namespace vgf {

struct SyntaxError : std::runtime_error {
  int line;
  int column;
  SyntaxError(int line_, int col_, const std::string& msg)
      : std::runtime_error("syntax error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        column(col_) {}
};

enum class SemanticErrorKind : uint8_t {
  multiple_drivers,
  undeclared_signal,
  width_mismatch,
  other,
};

struct SemanticError : std::runtime_error {
  SemanticErrorKind kind;
  SemanticError(SemanticErrorKind k, const std::string& msg)
      : std::runtime_error("semantic error: " + msg), kind(k) {}
};

struct NotAnInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WidthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownSignal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownClock : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CombinationalLoop : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ModeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoReachableSignals : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vgf
