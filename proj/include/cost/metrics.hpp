// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef COST_METRICS_HPP_
#define COST_METRICS_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cost {

/// One design-survey row. Derived columns are only ever produced by
/// compute_metrics; rows with unknown silicon area keep the per-area
/// columns absent.
struct MetricsRecord {
  std::string name;
  std::string algorithm;
  int datapath_bits = 0;
  int key_bits = 0;
  double technology_F_nm = 0.0;
  std::optional<double> area_um2;
  double voltage = 0.0;
  double energy_pj_per_bit = 0.0;
  double throughput_mbps = 0.0;

  std::optional<double> area_over_f2;         // um2 / um2, dimensionless
  std::optional<double> energy_eff_per_area;  // Gbps / (W x um2)
  std::optional<double> throughput_eff;       // Mbps / um2
};

/// Fills the derived columns from the raw ones. Throws on non-positive
/// raw inputs; absent area is allowed and yields absent per-area columns.
MetricsRecord compute_metrics(const MetricsRecord& raw);

struct SerialParallelRatios {
  double energy_ratio = 1.0;
  double area_ratio = 1.0;
};

/// Headline ratios between a bit-serial and a bit-parallel record.
/// Requires area on both records.
SerialParallelRatios serial_parallel_ratios(const MetricsRecord& serial,
                                            const MetricsRecord& parallel);

/// CSV schema: name,algorithm,datapath_bits,key_bits,F_nm,area_um2,
/// voltage,energy_pj_per_bit,throughput_mbps. Empty cell = absent, only
/// legal for area_um2.
std::vector<MetricsRecord> parse_metrics_csv(std::istream& is);
std::vector<MetricsRecord> load_metrics_csv(const std::string& path);

/// Rounds `computed` to the precision of the displayed reference value and
/// accepts a residual of at most one unit in that last displayed digit.
/// `published` is the displayed string, e.g. "0.99" or "18.69".
bool matches_published(double computed, const std::string& published);

/// Decimal places in a displayed value ("0.43" -> 2, "3" -> 0).
int displayed_decimals(const std::string& published);

}  // namespace cost

#endif  // COST_METRICS_HPP_
