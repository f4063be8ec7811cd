// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "simon/cipher.hpp"

namespace simon {

RoundKeySchedule expand_key(const Key& key) {
  RoundKeySchedule ks;
  ks.keys[0] = key.k0;
  ks.keys[1] = key.k1;
  ks.keys[2] = key.k2;
  ks.keys[3] = key.k3;
  for (int i = 0; i + 4 < kRounds; ++i) {
    ks.keys[i + 4] =
        next_round_key(ks.keys[i], ks.keys[i + 1], ks.keys[i + 3], i);
  }
  return ks;
}

Block encrypt_block(Block pt, const Key& key) {
  const RoundKeySchedule ks = expand_key(key);
  Block s = pt;
  for (word16 k : ks.keys) s = encrypt_round(s, k);
  return s;
}

Block decrypt_block(Block ct, const Key& key) {
  const RoundKeySchedule ks = expand_key(key);
  Block s = ct;
  for (int i = kRounds - 1; i >= 0; --i) s = decrypt_round(s, ks.keys[i]);
  return s;
}

}  // namespace simon
