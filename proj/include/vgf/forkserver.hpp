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
#include <span>

#include "vgf/harness.hpp"

namespace vgf {

inline constexpr uint32_t kStatusClean = 0;
inline constexpr uint32_t kStatusFaultBase = 0xF0;  // 0xF0 | property index

/// One emulated spawn request: the simulator stays resident, the request
/// triggers a design reset, runs the payload, and returns the status word
/// (0 = clean, 0xF0 | armed-property index = fake crash).
uint32_t serve_request(Harness& h, std::span<const uint8_t> input,
                       uint32_t max_cycles);

/// Serves length-framed requests (4-byte little-endian length + payload)
/// from read_fd, answering each with a 4-byte little-endian status on
/// write_fd, until EOF at a frame boundary. Returns the request count.
/// A short frame raises ProtocolError.
uint64_t serve_pipe(Harness& h, int read_fd, int write_fd, uint32_t max_cycles);

}  // namespace vgf
