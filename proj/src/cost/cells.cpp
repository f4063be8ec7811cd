// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "cost/cells.hpp"

namespace cost {

CellModel cell_model(uarch::SeqCell cell) {
  switch (cell) {
    case uarch::SeqCell::FlipFlop:
      return {cell, 1.0, 1.0, 0.5};
    case uarch::SeqCell::PulsedLatch1b:
      // clock pin 0.6 x the FF's 0.5 absolute = 0.30 of a 0.80 total
      return {cell, 0.75, 0.80, 0.375};
    case uarch::SeqCell::MultiBitLatch8b:
      // shared driver: clock pin 0.6 x the 1-b latch's 0.30 = 0.18, net
      // per-cycle energy unchanged at 0.80 (2X driver sizing offset)
      return {cell, 0.75, 0.80, 0.225};
  }
  return {};
}

}  // namespace cost
