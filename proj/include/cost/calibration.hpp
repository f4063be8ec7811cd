// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef COST_CALIBRATION_HPP_
#define COST_CALIBRATION_HPP_

#include <array>
#include <string>

#include "cost/cells.hpp"
#include "cost/voltage.hpp"

namespace cost {

/// Everything tunable in the cost model, loadable from a JSON file so a
/// different technology or cell library can be swapped in without a
/// rebuild. The shipped data/calibration/default.json mirrors the
/// defaults here.
struct Calibration {
  std::array<CellModel, 3> cells;  // FlipFlop, PulsedLatch1b, MultiBitLatch8b
  GeTable ge;
  double um2_per_ge = 0.575;
  double seq_area_fraction = 0.50;
  double seq_energy_fraction = 0.65;
  double baseline_clocked_bits = 102.0;
  // comb toggles per cycle of the flip-flop bit-parallel engine on the
  // shipped golden vector, the anchor of the combinational energy term
  double baseline_comb_toggles_per_cycle = 53.090909090909093;
  double fifo_ge_per_bit = 9.0;
  double fifo_control_ge = 200.0;
  double borrow_limit_fraction = 0.10;
  VoltageModel voltage;

  Calibration();
  const CellModel& cell(uarch::SeqCell c) const;
};

/// Throws std::runtime_error on malformed files or violated invariants
/// (non-positive parameters, fractions outside (0,1)).
Calibration load_calibration(const std::string& path);
void save_calibration(const Calibration& cal, const std::string& path);

std::string to_json(const Calibration& cal);
Calibration calibration_from_json(const std::string& text);

}  // namespace cost

#endif  // COST_CALIBRATION_HPP_
