// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef COST_TIMING_HPP_
#define COST_TIMING_HPP_

#include <optional>
#include <vector>

namespace cost {

inline constexpr double kDutyMin = 0.10;
inline constexpr double kDutyMax = 0.24;

struct TimingParams {
  double clock_period = 1.0;  // seconds
  double duty_cycle = 0.20;
  std::vector<double> stage_delays;  // per-round critical paths, seconds
  double borrow_limit_fraction = 0.10;
};

struct DutyCheck {
  bool ok = false;
  double max_borrow_used = 0.0;  // fraction of the period
};

/// Pulsed-latch legality: the duty cycle must sit in the supported pulse
/// window, and the running borrow (clamped at zero; a fast stage repays
/// but never banks slack) must stay inside the transparency window
/// duty x period at every stage.
DutyCheck check_duty_cycle(const TimingParams& t);

/// Smallest period that keeps the profile legal when it repeats in steady
/// state, with the per-stage borrow additionally capped at
/// min(duty_cycle, borrow_limit_fraction) x period. Empty result when the
/// duty cycle itself is outside the supported window.
std::optional<double> min_cycle_with_borrowing(const TimingParams& t);

}  // namespace cost

#endif  // COST_TIMING_HPP_
