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

#include "vgf/forkserver.hpp"

#include <unistd.h>

#include <vector>

namespace vgf {

uint32_t serve_request(Harness& h, std::span<const uint8_t> input,
                       uint32_t max_cycles) {
  h.apply_reset();
  RunVerdict v = h.run_testcase(input, max_cycles);
  if (!v.is_fault()) return kStatusClean;
  uint32_t prop = 0;
  for (uint32_t i = 0; i < h.config().properties.size(); ++i)
    if (h.config().properties[i] == v.property_index) prop = i;
  return kStatusFaultBase | (prop & 0x0F);
}

namespace {

// 0 = clean EOF before any byte, 1 = full read, throws on a short frame
int read_exact(int fd, uint8_t* buf, size_t n) {
  size_t got = 0;
  while (got < n) {
    ssize_t r = ::read(fd, buf + got, n - got);
    if (r < 0) throw ProtocolError("pipe read failed");
    if (r == 0) {
      if (got == 0) return 0;
      throw ProtocolError("truncated frame (" + std::to_string(got) + " of " +
                          std::to_string(n) + " bytes)");
    }
    got += static_cast<size_t>(r);
  }
  return 1;
}

void write_exact(int fd, const uint8_t* buf, size_t n) {
  size_t sent = 0;
  while (sent < n) {
    ssize_t r = ::write(fd, buf + sent, n - sent);
    if (r <= 0) throw ProtocolError("pipe write failed");
    sent += static_cast<size_t>(r);
  }
}

}  // namespace

uint64_t serve_pipe(Harness& h, int read_fd, int write_fd, uint32_t max_cycles) {
  uint64_t served = 0;
  for (;;) {
    uint8_t hdr[4];
    if (read_exact(read_fd, hdr, 4) == 0) return served;
    uint32_t len = hdr[0] | (hdr[1] << 8) | (hdr[2] << 16) |
                   (static_cast<uint32_t>(hdr[3]) << 24);
    std::vector<uint8_t> payload(len);
    if (len > 0 && read_exact(read_fd, payload.data(), len) == 0)
      throw ProtocolError("EOF inside payload");
    uint32_t status = serve_request(h, payload, max_cycles);
    uint8_t resp[4] = {static_cast<uint8_t>(status), static_cast<uint8_t>(status >> 8),
                       static_cast<uint8_t>(status >> 16),
                       static_cast<uint8_t>(status >> 24)};
    write_exact(write_fd, resp, 4);
    ++served;
  }
}

}  // namespace vgf
