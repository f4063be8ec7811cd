// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef COST_VOLTAGE_HPP_
#define COST_VOLTAGE_HPP_

namespace cost {

inline constexpr double kVoltMin = 0.15;
inline constexpr double kVoltMax = 1.00;

/// Cycle-time coefficients: alpha-power law above 0.5 V, exponential
/// sub-threshold slope below, continuous at the seam.
struct DelayFit {
  double alpha = 1.3;
  double subvt_slope_v = 0.057188794;
};

/// Energy-vs-supply model. Defaults come from scripts/fit_voltage_model.py:
/// slope and leakage ratio are fitted so the curve hits 0.99 pJ/b at the
/// 0.9 V nominal and bottoms out near 0.225 V.
struct VoltageModel {
  double v_nom = 0.9;
  double e_dyn_nom = 0.98954264778835432;  // pJ/b at v_nom, leakage excluded
  double leak_ratio_nom = 4.621854476589797e-04;
  DelayFit delay_fit;
};

/// Cycle time at v relative to v_nom. Domain [0.15, 1.0] V.
double relative_cycle_time(const VoltageModel& m, double v);

/// E(v) = dynamic (quadratic in v) + leakage (linear in v, scaled by the
/// relative cycle time). pJ/b. Domain [0.15, 1.0] V.
double voltage_energy_curve(const VoltageModel& m, double v);

struct MinimumEnergyPoint {
  double v = 0.0;
  double energy_pj_per_bit = 0.0;
};

/// Grid-plus-refine argmin of the energy curve over the model domain.
MinimumEnergyPoint find_minimum_energy_point(const VoltageModel& m);

}  // namespace cost

#endif  // COST_VOLTAGE_HPP_
