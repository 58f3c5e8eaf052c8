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

#include "vgf/blake2b.hpp"

#include <cassert>
#include <cstring>

namespace vgf {

namespace {

constexpr uint64_t kIV[8] = {
    0x6a09e667f3bcc908ULL, 0xbb67ae8584caa73bULL, 0x3c6ef372fe94f82bULL,
    0xa54ff53a5f1d36f1ULL, 0x510e527fade682d1ULL, 0x9b05688c2b3e6c1fULL,
    0x1f83d9abfb41bd6bULL, 0x5be0cd19137e2179ULL};

constexpr uint8_t kSigma[12][16] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {14, 10, 4, 8, 9, 15, 13, 6, 1, 12, 0, 2, 11, 7, 5, 3},
    {11, 8, 12, 0, 5, 2, 15, 13, 10, 14, 3, 6, 7, 1, 9, 4},
    {7, 9, 3, 1, 13, 12, 11, 14, 2, 6, 5, 10, 4, 0, 15, 8},
    {9, 0, 5, 7, 2, 4, 10, 15, 14, 1, 11, 12, 6, 8, 3, 13},
    {2, 12, 6, 10, 0, 11, 8, 3, 4, 13, 7, 5, 15, 14, 1, 9},
    {12, 5, 1, 15, 14, 13, 4, 10, 0, 7, 6, 3, 9, 2, 8, 11},
    {13, 11, 7, 14, 12, 1, 3, 9, 5, 0, 15, 4, 8, 6, 2, 10},
    {6, 15, 14, 9, 11, 3, 0, 8, 12, 2, 13, 7, 1, 4, 10, 5},
    {10, 2, 8, 4, 7, 6, 1, 5, 15, 11, 9, 14, 3, 12, 13, 0},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {14, 10, 4, 8, 9, 15, 13, 6, 1, 12, 0, 2, 11, 7, 5, 3}};

inline uint64_t rotr64(uint64_t x, unsigned n) { return (x >> n) | (x << (64 - n)); }

inline uint64_t load64(const uint8_t* p) {
  uint64_t v;
  std::memcpy(&v, p, 8);
  return v;  // little-endian hosts only; this project targets x86-64/aarch64
}

struct State {
  uint64_t h[8];
  uint64_t t = 0;  // message byte counter (inputs here never exceed 2^64)
};

void compress(State& s, const uint8_t block[128], bool last) {
  uint64_t m[16];
  for (int i = 0; i < 16; ++i) m[i] = load64(block + 8 * i);
  uint64_t v[16];
  for (int i = 0; i < 8; ++i) v[i] = s.h[i];
  for (int i = 0; i < 8; ++i) v[8 + i] = kIV[i];
  v[12] ^= s.t;
  if (last) v[14] = ~v[14];

  auto G = [&](int a, int b, int c, int d, uint64_t x, uint64_t y) {
    v[a] = v[a] + v[b] + x;
    v[d] = rotr64(v[d] ^ v[a], 32);
    v[c] = v[c] + v[d];
    v[b] = rotr64(v[b] ^ v[c], 24);
    v[a] = v[a] + v[b] + y;
    v[d] = rotr64(v[d] ^ v[a], 16);
    v[c] = v[c] + v[d];
    v[b] = rotr64(v[b] ^ v[c], 63);
  };

  for (int r = 0; r < 12; ++r) {
    const uint8_t* sg = kSigma[r];
    G(0, 4, 8, 12, m[sg[0]], m[sg[1]]);
    G(1, 5, 9, 13, m[sg[2]], m[sg[3]]);
    G(2, 6, 10, 14, m[sg[4]], m[sg[5]]);
    G(3, 7, 11, 15, m[sg[6]], m[sg[7]]);
    G(0, 5, 10, 15, m[sg[8]], m[sg[9]]);
    G(1, 6, 11, 12, m[sg[10]], m[sg[11]]);
    G(2, 7, 8, 13, m[sg[12]], m[sg[13]]);
    G(3, 4, 9, 14, m[sg[14]], m[sg[15]]);
  }
  for (int i = 0; i < 8; ++i) s.h[i] ^= v[i] ^ v[8 + i];
}

}  // namespace

void blake2b(uint8_t* out, size_t outlen, const uint8_t* in, size_t inlen) {
  assert(outlen >= 1 && outlen <= 64);
  State s;
  for (int i = 0; i < 8; ++i) s.h[i] = kIV[i];
  // parameter block: digest_length | key_length<<8 | fanout<<16 | depth<<24
  s.h[0] ^= 0x01010000ULL ^ static_cast<uint64_t>(outlen);

  uint8_t block[128];
  while (inlen > 128) {
    std::memcpy(block, in, 128);
    s.t += 128;
    compress(s, block, false);
    in += 128;
    inlen -= 128;
  }
  std::memset(block, 0, sizeof(block));
  std::memcpy(block, in, inlen);
  s.t += inlen;
  compress(s, block, true);

  uint8_t full[64];
  std::memcpy(full, s.h, 64);
  std::memcpy(out, full, outlen);
}

uint16_t blake2b16(const uint8_t* in, size_t inlen) {
  uint8_t d[2];
  blake2b(d, 2, in, inlen);
  return static_cast<uint16_t>(d[0] | (d[1] << 8));
}

}  // namespace vgf
