// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMON_CIPHER_HPP_
#define SIMON_CIPHER_HPP_

#include <array>
#include <bit>
#include <cstdint>

namespace simon {

using word16 = std::uint16_t;

/// Number of rounds of Simon 32/64.
inline constexpr int kRounds = 32;

/// Key-schedule constant c = 2^16 - 4.
inline constexpr word16 kKeyConst = 0xFFFC;

/// Period-62 constant sequence z0, packed LSB-first (bit i holds z0[i]):
/// 11111010001001010110000111001101111101000100101011000011100110
inline constexpr std::uint64_t kZ0 = 0x19C3522FB386A45F;
inline constexpr int kZ0Period = 62;

/// 32-bit cipher state as two 16-bit words, x = upper half.
struct Block {
  word16 x = 0;
  word16 y = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

/// 64-bit key as four 16-bit words, k3 = most significant.
struct Key {
  word16 k3 = 0;
  word16 k2 = 0;
  word16 k1 = 0;
  word16 k0 = 0;
  friend bool operator==(const Key&, const Key&) = default;
};

/// The 32 expanded round keys; keys[0] = k0.
struct RoundKeySchedule {
  std::array<word16, kRounds> keys{};
};

constexpr word16 rol16(word16 w, int s) { return std::rotl(w, s); }
constexpr word16 ror16(word16 w, int s) { return std::rotr(w, s); }

/// Feistel round function f(x) = (x<<<1 & x<<<8) ^ x<<<2.
constexpr word16 round_fn(word16 x) {
  return static_cast<word16>((rol16(x, 1) & rol16(x, 8)) ^ rol16(x, 2));
}

/// i-th bit of the z0 sequence (period 62).
constexpr int z_bit(int i) {
  return static_cast<int>((kZ0 >> (i % kZ0Period)) & 1u);
}

/// Next key word of the sliding-window recurrence:
/// given (k_i, k_{i+1}, k_{i+3}) and round index i, returns k_{i+4}.
constexpr word16 next_round_key(word16 ki, word16 ki1, word16 ki3, int i) {
  const word16 tmp = static_cast<word16>(ror16(ki3, 3) ^ ki1);
  return static_cast<word16>(kKeyConst ^ z_bit(i) ^ ki ^ tmp ^ ror16(tmp, 1));
}

/// One encryption round: (x, y) -> (y ^ f(x) ^ k, x).
constexpr Block encrypt_round(Block s, word16 k) {
  return {static_cast<word16>(s.y ^ round_fn(s.x) ^ k), s.x};
}

/// Inverse round: recovers the pre-round state of encrypt_round.
constexpr Block decrypt_round(Block s, word16 k) {
  return {s.y, static_cast<word16>(s.x ^ round_fn(s.y) ^ k)};
}

RoundKeySchedule expand_key(const Key& key);
Block encrypt_block(Block pt, const Key& key);
Block decrypt_block(Block ct, const Key& key);

}  // namespace simon

#endif  // SIMON_CIPHER_HPP_
