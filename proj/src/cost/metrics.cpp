// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "cost/metrics.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cost {
namespace {

constexpr const char* kHeader =
    "name,algorithm,datapath_bits,key_bits,F_nm,area_um2,voltage,"
    "energy_pj_per_bit,throughput_mbps";

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_num(const std::string& s, int line_no, const char* col) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": bad value for " + col + ": '" + s + "'");
  }
}

}  // namespace

MetricsRecord compute_metrics(const MetricsRecord& raw) {
  require(!raw.name.empty(), "record name is empty");
  require(raw.datapath_bits > 0, raw.name + ": datapath_bits must be > 0");
  require(raw.key_bits > 0, raw.name + ": key_bits must be > 0");
  require(raw.technology_F_nm > 0.0, raw.name + ": F_nm must be > 0");
  require(raw.voltage > 0.0, raw.name + ": voltage must be > 0");
  require(raw.energy_pj_per_bit > 0.0, raw.name + ": energy must be > 0");
  require(raw.throughput_mbps > 0.0, raw.name + ": throughput must be > 0");
  if (raw.area_um2) require(*raw.area_um2 > 0.0, raw.name + ": area must be > 0");

  MetricsRecord r = raw;
  r.area_over_f2.reset();
  r.energy_eff_per_area.reset();
  r.throughput_eff.reset();
  if (r.area_um2) {
    const double f_um = r.technology_F_nm / 1000.0;
    r.area_over_f2 = *r.area_um2 / (f_um * f_um);
    // 1/(pJ/b) = Tbps/W; x1000 to Gbps/W, then per um2
    r.energy_eff_per_area = (1000.0 / r.energy_pj_per_bit) / *r.area_um2;
    r.throughput_eff = r.throughput_mbps / *r.area_um2;
  }
  return r;
}

SerialParallelRatios serial_parallel_ratios(const MetricsRecord& serial,
                                            const MetricsRecord& parallel) {
  require(serial.area_um2.has_value(), serial.name + ": area is absent");
  require(parallel.area_um2.has_value(), parallel.name + ": area is absent");
  require(serial.energy_pj_per_bit > 0.0 && parallel.energy_pj_per_bit > 0.0,
          "energy must be > 0");
  SerialParallelRatios r;
  r.energy_ratio = serial.energy_pj_per_bit / parallel.energy_pj_per_bit;
  r.area_ratio = *serial.area_um2 / *parallel.area_um2;
  return r;
}

std::vector<MetricsRecord> parse_metrics_csv(std::istream& is) {
  std::vector<MetricsRecord> out;
  std::string line;
  int line_no = 0;
  bool seen_header = false;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (!seen_header) {
      if (t != kHeader)
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected header '" + kHeader + "'");
      seen_header = true;
      continue;
    }
    const auto f = split_csv(t);
    if (f.size() != 9)
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 9 fields, got " +
                               std::to_string(f.size()));
    MetricsRecord r;
    r.name = f[0];
    r.algorithm = f[1];
    r.datapath_bits = static_cast<int>(parse_num(f[2], line_no, "datapath_bits"));
    r.key_bits = static_cast<int>(parse_num(f[3], line_no, "key_bits"));
    r.technology_F_nm = parse_num(f[4], line_no, "F_nm");
    if (!f[5].empty()) r.area_um2 = parse_num(f[5], line_no, "area_um2");
    r.voltage = parse_num(f[6], line_no, "voltage");
    r.energy_pj_per_bit = parse_num(f[7], line_no, "energy_pj_per_bit");
    r.throughput_mbps = parse_num(f[8], line_no, "throughput_mbps");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<MetricsRecord> load_metrics_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_metrics_csv(in);
}

int displayed_decimals(const std::string& published) {
  const auto dot = published.find('.');
  if (dot == std::string::npos) return 0;
  return static_cast<int>(published.size() - dot - 1);
}

bool matches_published(double computed, const std::string& published) {
  std::size_t used = 0;
  double ref = 0.0;
  try {
    ref = std::stod(published, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("unparseable reference value '" + published + "'");
  }
  if (used != published.size())
    throw std::invalid_argument("unparseable reference value '" + published + "'");
  const double scale = std::pow(10.0, displayed_decimals(published));
  const double rounded = std::round(computed * scale) / scale;
  const double ulp = 1.0 / scale;
  return std::abs(rounded - ref) <= ulp * (1.0 + 1e-9);
}

}  // namespace cost
