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

#include <cstddef>
#include <cstdint>

namespace vgf {

/// Unkeyed BLAKE2b (RFC 7693), one-shot, digest length 1..64 bytes.
/// The in-tree implementation exists because the system crypto libraries do
/// not expose sub-16-byte digests, and the coverage compression needs a
/// 2-byte one.
void blake2b(uint8_t* out, size_t outlen, const uint8_t* in, size_t inlen);

/// Truncated convenience form: 2-byte digest as a little-endian index.
uint16_t blake2b16(const uint8_t* in, size_t inlen);

}  // namespace vgf
