// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "cost/estimate.hpp"

#include <stdexcept>

namespace cost {
namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

double seq_ge_weight(uarch::SeqCell cell, const GeTable& ge) {
  return cell == uarch::SeqCell::FlipFlop ? ge.flip_flop : ge.latch;
}

}  // namespace

int DesignInventory::total_clocked_bits() const {
  int t = 0;
  for (int b : clocked_bits) t += b;
  return t;
}

DesignInventory default_inventory(const uarch::MicroarchConfig& cfg,
                                  const GeTable& ge, double um2_per_ge) {
  DesignInventory inv;
  for (int i = 0; i < uarch::kNumCellClasses; ++i)
    inv.clocked_bits[static_cast<std::size_t>(i)] =
        uarch::clocked_bits(cfg, static_cast<uarch::CellClass>(i));
  if (cfg.style == uarch::Style::BitParallel) {
    // datapath 16 AND + 96 XOR; 5-b counter and done detect; full-width
    // load selects on data and key
    inv.and2 = 16 + 9;
    inv.xor2 = 96 + 5;
    inv.mux2 = 96;
  } else {
    // single-bit datapath plus nine 16:1 register tap selectors, load and
    // shift/hold selects, two counters with wrap and done detects
    inv.and2 = 1 + 25;
    inv.xor2 = 7 + 9;
    inv.mux2 = 9 * 15 + 96 + 64 + 32 + 16 + 16;
  }
  const double seq_w = seq_ge_weight(cfg.seq_cell, ge);
  inv.gate_equivalents_total = inv.total_clocked_bits() * seq_w +
                               inv.and2 * ge.and2 + inv.xor2 * ge.xor2 +
                               inv.mux2 * ge.mux2;
  inv.area_um2 = inv.gate_equivalents_total * um2_per_ge;
  return inv;
}

AreaEstimate estimate_area(const DesignInventory& inv,
                           const uarch::MicroarchConfig& cfg,
                           double um2_per_ge) {
  require(inv.seq_area_fraction > 0.0 && inv.seq_area_fraction < 1.0,
          "seq_area_fraction outside (0,1)");
  require(inv.gate_equivalents_total > 0.0, "gate_equivalents_total must be > 0");
  switch (cfg.seq_cell) {
    case uarch::SeqCell::FlipFlop:
    case uarch::SeqCell::PulsedLatch1b:
    case uarch::SeqCell::MultiBitLatch8b:
      break;
    default:
      throw std::invalid_argument("unknown sequential cell class");
  }
  const double ratio = cell_model(cfg.seq_cell).area_per_bit /
                       cell_model(uarch::SeqCell::FlipFlop).area_per_bit;
  AreaEstimate est;
  est.relative = inv.seq_area_fraction * ratio + (1.0 - inv.seq_area_fraction);
  est.um2 = inv.gate_equivalents_total * um2_per_ge;
  return est;
}

double estimate_energy_per_cycle(const uarch::TraceSummary& summary,
                                 const DesignInventory& inv,
                                 const uarch::MicroarchConfig& cfg,
                                 double baseline_clocked_bits,
                                 double baseline_comb_toggles_per_cycle) {
  if (summary.cycles == 0) throw std::invalid_argument("empty trace");
  require(inv.seq_energy_fraction > 0.0 && inv.seq_energy_fraction < 1.0,
          "seq_energy_fraction outside (0,1)");
  require(baseline_clocked_bits > 0.0, "baseline_clocked_bits must be > 0");
  require(baseline_comb_toggles_per_cycle > 0.0,
          "baseline_comb_toggles_per_cycle must be > 0");
  const double e_cell = cell_model(cfg.seq_cell).energy_per_cycle_per_bit;
  const double seq = summary.total_bits() * e_cell / baseline_clocked_bits;
  const double comb =
      summary.comb_toggles_per_cycle() / baseline_comb_toggles_per_cycle;
  return inv.seq_energy_fraction * seq + (1.0 - inv.seq_energy_fraction) * comb;
}

double energy_per_bit(const DesignPower& d) {
  if (d.throughput_Mbps <= 0.0)
    throw std::invalid_argument("throughput must be > 0");
  if (d.power_uW < 0.0) throw std::invalid_argument("power must be >= 0");
  return d.power_uW / d.throughput_Mbps;  // uW / Mbps = pJ/b
}

FifoCost fifo_cost(int app_wordlength_bits, int cipher_block_bits,
                   double ge_per_bit, double control_ge) {
  require(app_wordlength_bits > 0, "wordlength must be > 0");
  require(cipher_block_bits > 0, "block size must be > 0");
  require(app_wordlength_bits <= cipher_block_bits,
          "wordlength exceeds the cipher block");
  if (app_wordlength_bits == cipher_block_bits) return {0, 0.0};
  FifoCost c;
  c.storage_bits = 2 * cipher_block_bits;  // fill one buffer, drain the other
  c.gate_equivalents = c.storage_bits * ge_per_bit + control_ge;
  return c;
}

}  // namespace cost
