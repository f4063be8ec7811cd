// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "cost/timing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cost {
namespace {

constexpr double kRelTol = 1e-9;

bool leq(double a, double b) { return a <= b * (1.0 + kRelTol) + 1e-15; }

void validate_delays(const std::vector<double>& delays) {
  if (delays.empty()) throw std::invalid_argument("no stage delays given");
  for (double d : delays)
    if (!(d > 0.0)) throw std::invalid_argument("stage delays must be > 0");
}

}  // namespace

DutyCheck check_duty_cycle(const TimingParams& t) {
  if (!(t.clock_period > 0.0))
    throw std::invalid_argument("clock period must be > 0");
  validate_delays(t.stage_delays);
  DutyCheck r;
  const double window = t.duty_cycle * t.clock_period;
  double borrow = 0.0;
  bool within = true;
  for (double d : t.stage_delays) {
    borrow = std::max(0.0, borrow + d - t.clock_period);
    r.max_borrow_used = std::max(r.max_borrow_used, borrow / t.clock_period);
    if (!leq(borrow, window)) within = false;
  }
  const bool duty_ok =
      leq(kDutyMin, t.duty_cycle) && leq(t.duty_cycle, kDutyMax);
  r.ok = duty_ok && within;
  return r;
}

std::optional<double> min_cycle_with_borrowing(const TimingParams& t) {
  validate_delays(t.stage_delays);
  if (!(leq(kDutyMin, t.duty_cycle) && leq(t.duty_cycle, kDutyMax)))
    return std::nullopt;
  const double cap = std::min(t.duty_cycle, t.borrow_limit_fraction);
  const auto& d = t.stage_delays;
  const auto n = d.size();
  // In steady state the profile repeats, so borrow must not drift upward
  // across a full pass, and every cyclic window of stages must fit its
  // cycle budget plus one transparency window.
  const double mean = std::accumulate(d.begin(), d.end(), 0.0) /
                      static_cast<double>(n);
  double period = mean;
  for (std::size_t start = 0; start < n; ++start) {
    double sum = 0.0;
    for (std::size_t len = 1; len <= n; ++len) {
      sum += d[(start + len - 1) % n];
      period = std::max(period, sum / (static_cast<double>(len) + cap));
    }
  }
  return period;
}

}  // namespace cost
