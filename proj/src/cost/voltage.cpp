// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "cost/voltage.hpp"

#include <cmath>
#include <stdexcept>

namespace cost {
namespace {

constexpr double kVth = 0.35;    // alpha-power threshold, volts
constexpr double kVSplit = 0.5;  // regime seam, volts

void check_domain(double v) {
  if (v < kVoltMin - 1e-12 || v > kVoltMax + 1e-12)
    throw std::out_of_range("voltage outside [0.15, 1.0] V");
}

// alpha-power delay, valid above the seam only
double alpha_delay(const DelayFit& f, double v) {
  return v / std::pow(v - kVth, f.alpha);
}

}  // namespace

double relative_cycle_time(const VoltageModel& m, double v) {
  check_domain(v);
  const double at_nom = alpha_delay(m.delay_fit, m.v_nom);
  if (v >= kVSplit) return alpha_delay(m.delay_fit, v) / at_nom;
  const double at_seam = alpha_delay(m.delay_fit, kVSplit) / at_nom;
  return at_seam * std::exp((kVSplit - v) / m.delay_fit.subvt_slope_v);
}

double voltage_energy_curve(const VoltageModel& m, double v) {
  check_domain(v);
  const double s = v / m.v_nom;
  const double dyn = m.e_dyn_nom * s * s;
  const double leak = m.e_dyn_nom * m.leak_ratio_nom * s * relative_cycle_time(m, v);
  return dyn + leak;
}

MinimumEnergyPoint find_minimum_energy_point(const VoltageModel& m) {
  MinimumEnergyPoint best{kVoltMin, voltage_energy_curve(m, kVoltMin)};
  constexpr int kGrid = 17000;  // 50 uV pitch
  for (int i = 1; i <= kGrid; ++i) {
    const double v =
        kVoltMin + (kVoltMax - kVoltMin) * static_cast<double>(i) / kGrid;
    const double e = voltage_energy_curve(m, v);
    if (e < best.energy_pj_per_bit) best = {v, e};
  }
  // golden-section polish around the grid winner
  double lo = std::max(kVoltMin, best.v - 1e-4);
  double hi = std::min(kVoltMax, best.v + 1e-4);
  constexpr double kPhi = 0.6180339887498949;
  for (int it = 0; it < 60; ++it) {
    const double a = hi - kPhi * (hi - lo);
    const double b = lo + kPhi * (hi - lo);
    if (voltage_energy_curve(m, a) < voltage_energy_curve(m, b))
      hi = b;
    else
      lo = a;
  }
  const double v = 0.5 * (lo + hi);
  return {v, voltage_energy_curve(m, v)};
}

}  // namespace cost
