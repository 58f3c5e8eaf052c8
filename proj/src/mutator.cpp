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

#include "vgf/mutator.hpp"

#include <algorithm>
#include <cstring>

namespace vgf {

namespace {

const int8_t kInteresting8[] = {-128, -1, 0, 1, 16, 32, 64, 100, 127};
const int16_t kInteresting16[] = {-32768, -129, 128,  255,  256,
                                  512,    1000, 1024, 4096, 32767};
const int32_t kInteresting32[] = {INT32_MIN, -100663046, -32769,     32768,
                                  65535,     65536,      100663045, INT32_MAX};

uint64_t rand_below(Rng& rng, uint64_t bound) { return bound ? rng() % bound : 0; }

void put16(std::vector<uint8_t>& v, size_t pos, uint16_t x) {
  v[pos] = static_cast<uint8_t>(x);
  v[pos + 1] = static_cast<uint8_t>(x >> 8);
}
uint16_t get16(const std::vector<uint8_t>& v, size_t pos) {
  return static_cast<uint16_t>(v[pos] | (v[pos + 1] << 8));
}
void put32(std::vector<uint8_t>& v, size_t pos, uint32_t x) {
  for (int i = 0; i < 4; ++i) v[pos + i] = static_cast<uint8_t>(x >> (8 * i));
}
uint32_t get32(const std::vector<uint8_t>& v, size_t pos) {
  uint32_t x = 0;
  for (int i = 0; i < 4; ++i) x |= static_cast<uint32_t>(v[pos + i]) << (8 * i);
  return x;
}

}  // namespace

std::vector<uint8_t> havoc(const MutatorConfig& cfg,
                           std::span<const uint8_t> parent,
                           std::span<const std::vector<uint8_t>> queue,
                           Rng& rng) {
  std::vector<uint8_t> out(parent.begin(), parent.end());
  // 1..64 stacked operations, power-of-two stacking
  uint32_t ops = 1u << rand_below(rng, 7);
  for (uint32_t i = 0; i < ops; ++i) {
    uint32_t op = static_cast<uint32_t>(rand_below(rng, 12));
    switch (op) {
      case 0: {  // flip one bit
        if (out.empty()) break;
        size_t bit = rand_below(rng, out.size() * 8);
        out[bit / 8] ^= uint8_t{1} << (bit % 8);
        break;
      }
      case 1: {  // flip one byte
        if (out.empty()) break;
        out[rand_below(rng, out.size())] ^= 0xFF;
        break;
      }
      case 2: {  // interesting 8-bit
        if (out.empty()) break;
        out[rand_below(rng, out.size())] =
            static_cast<uint8_t>(kInteresting8[rand_below(rng, 9)]);
        break;
      }
      case 3: {  // interesting 16-bit
        if (out.size() < 2) break;
        put16(out, rand_below(rng, out.size() - 1),
              static_cast<uint16_t>(kInteresting16[rand_below(rng, 10)]));
        break;
      }
      case 4: {  // arith 8-bit
        if (out.empty()) break;
        size_t pos = rand_below(rng, out.size());
        uint8_t delta = 1 + static_cast<uint8_t>(rand_below(rng, 35));
        out[pos] = rand_below(rng, 2) ? out[pos] + delta : out[pos] - delta;
        break;
      }
      case 5: {  // arith 16-bit
        if (out.size() < 2) break;
        size_t pos = rand_below(rng, out.size() - 1);
        uint16_t delta = 1 + static_cast<uint16_t>(rand_below(rng, 35));
        put16(out, pos,
              rand_below(rng, 2) ? get16(out, pos) + delta : get16(out, pos) - delta);
        break;
      }
      case 6: {  // arith 32-bit
        if (out.size() < 4) break;
        size_t pos = rand_below(rng, out.size() - 3);
        uint32_t delta = 1 + static_cast<uint32_t>(rand_below(rng, 35));
        put32(out, pos,
              rand_below(rng, 2) ? get32(out, pos) + delta : get32(out, pos) - delta);
        break;
      }
      case 7: {  // random byte
        if (out.empty()) break;
        out[rand_below(rng, out.size())] = static_cast<uint8_t>(rand_below(rng, 256));
        break;
      }
      case 8: {  // delete block
        if (out.size() < 2) break;
        size_t len = 1 + rand_below(rng, out.size() / 2);
        size_t pos = rand_below(rng, out.size() - len + 1);
        out.erase(out.begin() + pos, out.begin() + pos + len);
        break;
      }
      case 9: {  // duplicate or insert constant block
        if (out.empty() || out.size() >= cfg.max_len) break;
        size_t len = 1 + rand_below(rng, std::min<size_t>(16, out.size()));
        len = std::min(len, cfg.max_len - out.size());
        size_t src = rand_below(rng, out.size() - len + 1);
        size_t dst = rand_below(rng, out.size() + 1);
        std::vector<uint8_t> block;
        if (rand_below(rng, 4) == 0) {
          block.assign(len, static_cast<uint8_t>(rand_below(rng, 256)));
        } else {
          block.assign(out.begin() + src, out.begin() + src + len);
        }
        out.insert(out.begin() + dst, block.begin(), block.end());
        break;
      }
      case 10: {  // overwrite block from another position
        if (out.size() < 2) break;
        size_t len = 1 + rand_below(rng, out.size() / 2);
        size_t src = rand_below(rng, out.size() - len + 1);
        size_t dst = rand_below(rng, out.size() - len + 1);
        if (src != dst) std::memmove(&out[dst], &out[src], len);
        break;
      }
      case 11: {  // splice with another queue entry
        if (queue.size() < 2) break;  // degrades to havoc-only
        const std::vector<uint8_t>& other = queue[rand_below(rng, queue.size())];
        if (other.empty() || out.empty()) break;
        size_t keep = rand_below(rng, out.size() + 1);
        size_t from = rand_below(rng, other.size());
        out.resize(keep);
        out.insert(out.end(), other.begin() + from, other.end());
        if (out.size() > cfg.max_len) out.resize(cfg.max_len);
        break;
      }
    }
  }
  if (out.size() > cfg.max_len) out.resize(cfg.max_len);
  return out;
}

uint64_t deterministic_child_count(size_t len) {
  if (len == 0) return 0;
  uint64_t bits = len * 8;
  uint64_t count = 0;
  count += bits;                       // walking 1-bit flips
  count += bits - 1;                   // walking 2-bit flips
  count += bits - 3;                   // walking 4-bit flips
  count += len;                        // walking byte flips
  count += len * 70;                   // arith8 +-1..35
  if (len >= 2) count += (len - 1) * 70;   // arith16
  if (len >= 4) count += (len - 3) * 70;   // arith32
  count += len * 9;                        // interesting8
  if (len >= 2) count += (len - 1) * 10;   // interesting16
  if (len >= 4) count += (len - 3) * 8;    // interesting32
  return count;
}

void for_each_deterministic_child(
    std::span<const uint8_t> parent,
    const std::function<bool(std::span<const uint8_t>)>& visit) {
  size_t len = parent.size();
  if (len == 0) return;
  std::vector<uint8_t> buf(parent.begin(), parent.end());
  auto emit = [&]() -> bool {
    bool cont = visit(buf);
    buf.assign(parent.begin(), parent.end());
    return cont;
  };

  size_t bits = len * 8;
  auto flip = [&](size_t bit) { buf[bit / 8] ^= uint8_t{1} << (7 - bit % 8); };

  for (size_t b = 0; b < bits; ++b) {
    flip(b);
    if (!emit()) return;
  }
  for (size_t b = 0; b + 1 < bits; ++b) {
    flip(b);
    flip(b + 1);
    if (!emit()) return;
  }
  for (size_t b = 0; b + 3 < bits; ++b) {
    for (size_t k = 0; k < 4; ++k) flip(b + k);
    if (!emit()) return;
  }
  for (size_t i = 0; i < len; ++i) {
    buf[i] ^= 0xFF;
    if (!emit()) return;
  }
  for (size_t i = 0; i < len; ++i) {
    for (int d = 1; d <= 35; ++d) {
      buf[i] = static_cast<uint8_t>(parent[i] + d);
      if (!emit()) return;
      buf[i] = static_cast<uint8_t>(parent[i] - d);
      if (!emit()) return;
    }
  }
  if (len >= 2) {
    for (size_t i = 0; i + 1 < len; ++i) {
      uint16_t orig = get16(buf, i);
      for (int d = 1; d <= 35; ++d) {
        put16(buf, i, orig + d);
        if (!emit()) return;
        put16(buf, i, orig - d);
        if (!emit()) return;
      }
    }
  }
  if (len >= 4) {
    for (size_t i = 0; i + 3 < len; ++i) {
      uint32_t orig = get32(buf, i);
      for (int d = 1; d <= 35; ++d) {
        put32(buf, i, orig + d);
        if (!emit()) return;
        put32(buf, i, orig - d);
        if (!emit()) return;
      }
    }
  }
  for (size_t i = 0; i < len; ++i) {
    for (int8_t v : kInteresting8) {
      buf[i] = static_cast<uint8_t>(v);
      if (!emit()) return;
    }
  }
  if (len >= 2) {
    for (size_t i = 0; i + 1 < len; ++i) {
      for (int16_t v : kInteresting16) {
        put16(buf, i, static_cast<uint16_t>(v));
        if (!emit()) return;
      }
    }
  }
  if (len >= 4) {
    for (size_t i = 0; i + 3 < len; ++i) {
      for (int32_t v : kInteresting32) {
        put32(buf, i, static_cast<uint32_t>(v));
        if (!emit()) return;
      }
    }
  }
}

std::vector<uint8_t> trim_testcase(
    std::span<const uint8_t> input,
    const std::function<bool(std::span<const uint8_t>)>& still_good) {
  std::vector<uint8_t> cur(input.begin(), input.end());
  if (cur.size() <= 4) return cur;

  size_t block = 4;
  while (block * 2 <= cur.size() / 2) block *= 2;

  for (; block >= 4; block /= 2) {
    size_t pos = 0;
    while (pos < cur.size() && cur.size() > block) {
      size_t n = std::min(block, cur.size() - pos);
      std::vector<uint8_t> candidate;
      candidate.reserve(cur.size() - n);
      candidate.insert(candidate.end(), cur.begin(), cur.begin() + pos);
      candidate.insert(candidate.end(), cur.begin() + pos + n, cur.end());
      if (still_good(candidate)) {
        cur = std::move(candidate);
      } else {
        pos += block;
      }
    }
  }
  return cur;
}

}  // namespace vgf
