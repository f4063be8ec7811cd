// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef COST_ESTIMATE_HPP_
#define COST_ESTIMATE_HPP_

#include <array>

#include "cost/cells.hpp"
#include "uarch/engine.hpp"

namespace cost {

/// Structural description of one engine instance, the area-side input of
/// the estimators.
struct DesignInventory {
  std::array<int, uarch::kNumCellClasses> clocked_bits{};
  int and2 = 0;  // comb gate counts
  int xor2 = 0;
  int mux2 = 0;
  double seq_area_fraction = 0.50;
  double seq_energy_fraction = 0.65;
  double gate_equivalents_total = 0.0;
  double area_um2 = 0.0;
  double technology_F_nm = 40.0;

  int total_clocked_bits() const;
};

/// Gate-level inventory for either engine style, incl. load muxes, tap
/// selectors and counter logic; totals land within a quarter of the
/// published complexity figures.
DesignInventory default_inventory(const uarch::MicroarchConfig& cfg,
                                  const GeTable& ge = {},
                                  double um2_per_ge = 0.575);

struct AreaEstimate {
  double relative = 1.0;  // vs the same netlist built from flip-flops
  double um2 = 0.0;
};

/// relative = seq_fraction x cell area ratio + comb fraction;
/// um2 = GE total x um2-per-GE.
AreaEstimate estimate_area(const DesignInventory& inv,
                           const uarch::MicroarchConfig& cfg,
                           double um2_per_ge = 0.575);

/// Relative per-cycle energy, 1.0 = flip-flop bit-parallel baseline.
/// Sequential term scales with clocked bits x cell energy; combinational
/// term scales with observed comb toggles per cycle. Clocks are never
/// gated, so the sequential term is charged regardless of activity.
double estimate_energy_per_cycle(const uarch::TraceSummary& summary,
                                 const DesignInventory& inv,
                                 const uarch::MicroarchConfig& cfg,
                                 double baseline_clocked_bits = 102.0,
                                 double baseline_comb_toggles_per_cycle =
                                     53.090909090909093);

/// power [uW] / throughput [Mbps] = energy [pJ/b].
struct DesignPower {
  double cycles_per_bit = 1.0;
  double power_uW = 0.0;
  double throughput_Mbps = 0.0;
};
double energy_per_bit(const DesignPower& d);

/// Word-aggregation FIFO between a narrow application interface and the
/// cipher block: double-buffered storage plus fixed control. Zero when
/// the application word already fills a block.
struct FifoCost {
  int storage_bits = 0;
  double gate_equivalents = 0.0;
};
FifoCost fifo_cost(int app_wordlength_bits, int cipher_block_bits,
                   double ge_per_bit = 9.0, double control_ge = 200.0);

}  // namespace cost

#endif  // COST_ESTIMATE_HPP_
