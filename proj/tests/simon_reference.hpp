// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef TESTS_SIMON_REFERENCE_HPP_
#define TESTS_SIMON_REFERENCE_HPP_

#include <cstdint>

#include "simon/cipher.hpp"

// Second, deliberately different-shaped Simon 32/64 implementation used
// only as a cross-check: table-free rotates, the constant sequence kept as
// text, and the key recurrence written in its complemented form.
namespace simonref {

inline constexpr const char kZ0Bits[] =
    "11111010001001010110000111001101111101000100101011000011100110";

inline std::uint16_t ror(std::uint16_t v, int r) {
  return static_cast<std::uint16_t>((v >> r) | (v << (16 - r)));
}

inline simon::Block encrypt(simon::Block pt, const simon::Key& key) {
  std::uint16_t ks[32] = {key.k0, key.k1, key.k2, key.k3};
  for (int i = 4; i < 32; ++i) {
    std::uint16_t tmp = static_cast<std::uint16_t>(ror(ks[i - 1], 3) ^ ks[i - 3]);
    tmp = static_cast<std::uint16_t>(tmp ^ ror(tmp, 1));
    ks[i] = static_cast<std::uint16_t>(
        ~ks[i - 4] ^ tmp ^ (kZ0Bits[(i - 4) % 62] - '0') ^ 3u);
  }
  std::uint16_t x = pt.x, y = pt.y;
  for (int r = 0; r < 32; ++r) {
    const std::uint16_t f = static_cast<std::uint16_t>(
        (ror(x, 15) & ror(x, 8)) ^ ror(x, 14));
    const std::uint16_t nx = static_cast<std::uint16_t>(y ^ f ^ ks[r]);
    y = x;
    x = nx;
  }
  return {x, y};
}

}  // namespace simonref

#endif  // TESTS_SIMON_REFERENCE_HPP_
