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

#include <string>

#include "vgf/design.hpp"
#include "vgf/errors.hpp"

namespace vgf {

struct SourceText {
  std::string text;
  std::string origin = "<literal>";
};

/// Parses and elaborates one module written in the subset documented in
/// docs/hdl-subset.md. Deterministic; throws SyntaxError / SemanticError.
Design parse_design(const SourceText& src);

Design parse_design_file(const std::string& path);

}  // namespace vgf
