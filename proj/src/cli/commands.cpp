// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cost/calibration.hpp"
#include "cost/estimate.hpp"
#include "cost/metrics.hpp"
#include "cost/timing.hpp"
#include "cost/voltage.hpp"
#include "json.hpp"
#include "simon/vectors.hpp"

namespace bench {
namespace {

using nlohmann::json;

std::string fmt(double v) { return json(v).dump(); }

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

void emit(const json& j, const GlobalOpts& g, std::ostream& out,
          const std::string& csv) {
  if (g.format == Format::Json)
    out << j.dump(2) << '\n';
  else
    out << csv;
}

struct Check {
  std::string name;
  double value = 0.0;
  std::string expected;
  bool pass = false;
};

json checks_to_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name},
                   {"value", c.value},
                   {"expected", c.expected},
                   {"pass", c.pass}});
  return arr;
}

bool in_band(double v, double lo, double hi) { return v >= lo && v <= hi; }

struct PublishedEngine {
  double area_um2 = 0.0;
  double power_uW = 0.0;
  double throughput_mbps = 0.0;
  double clock_mhz = 0.0;
  std::string energy_pj_per_bit;  // displayed precision
  double energy_value = 0.0;      // the display string parsed back
};

PublishedEngine published_engine(const json& j) {
  PublishedEngine p;
  p.area_um2 = j.at("area_um2").get<double>();
  p.power_uW = j.at("power_uW").get<double>();
  p.throughput_mbps = j.at("throughput_mbps").get<double>();
  p.clock_mhz = j.at("clock_mhz").get<double>();
  p.energy_pj_per_bit = j.at("energy_pj_per_bit").get<std::string>();
  std::size_t used = 0;
  p.energy_value = std::stod(p.energy_pj_per_bit, &used);
  if (used != p.energy_pj_per_bit.size())
    throw std::runtime_error("energy_pj_per_bit is not a plain number: '" +
                             p.energy_pj_per_bit + "'");
  return p;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

// every present expected cell must be null or a plain decimal string
void validate_expected_survey(const json& expected) {
  if (!expected.is_object()) return;
  if (expected.contains("area_over_f2_scale") &&
      !expected.at("area_over_f2_scale").is_number())
    throw std::runtime_error("area_over_f2_scale must be a number");
  if (!expected.contains("rows")) return;
  const json& rows = expected.at("rows");
  if (!rows.is_array()) throw std::runtime_error("expected rows must be an array");
  for (const json& row : rows) {
    if (!row.is_object()) throw std::runtime_error("expected rows must be objects");
    if (row.contains("name") && !row.at("name").is_string())
      throw std::runtime_error("expected row name must be a string");
    for (const char* key :
         {"area_over_f2", "energy_eff_per_area", "throughput_eff"}) {
      if (!row.contains(key)) continue;
      const json& cell = row.at(key);
      if (cell.is_null()) continue;
      if (!cell.is_string())
        throw std::runtime_error(std::string(key) + " must be a string or null");
      const std::string& text = cell.get_ref<const std::string&>();
      std::size_t used = 0;
      try {
        (void)std::stod(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (text.empty() || used != text.size())
        throw std::runtime_error(std::string(key) + " is not a plain number: '" +
                                 text + "'");
    }
  }
}

// summary of one engine style across the vector set
struct StyleRun {
  uarch::TraceSummary anchor;  // first vector, the calibration operating point
  std::uint64_t cycles_per_block = 0;
  bool all_match = true;
};

StyleRun run_style(uarch::Style style, const std::vector<simon::TestVector>& vecs) {
  uarch::MicroarchConfig cfg{style, uarch::SeqCell::FlipFlop, 1};
  uarch::Engine eng(cfg);
  StyleRun r;
  bool first = true;
  for (const auto& v : vecs) {
    const auto res = eng.run_block(v.pt, v.key);
    const auto ref = simon::encrypt_block(v.pt, v.key);
    if (res.ct.x != ref.x || res.ct.y != ref.y) r.all_match = false;
    if (v.ct && (res.ct.x != v.ct->x || res.ct.y != v.ct->y)) r.all_match = false;
    if (first) {
      r.anchor = uarch::trace_summary(res.trace, cfg);
      r.cycles_per_block = res.trace.cycles;
      first = false;
    }
  }
  return r;
}

}  // namespace

std::string format_number(double v) { return fmt(v); }

int cmd_encrypt(const EncryptOpts& opts, const GlobalOpts& g,
                std::ostream& out, std::ostream& err) {
  std::vector<simon::TestVector> vecs;
  try {
    vecs = simon::load_vectors(opts.vectors_path);
    if (opts.verify)
      for (const auto& v : vecs)
        if (!v.ct)
          throw std::runtime_error("line " + std::to_string(v.line) +
                                   ": no expected ciphertext to verify");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kStatusInputError;
  }

  int mismatches = 0;
  json rows = json::array();
  std::ostringstream csv;
  csv << "key,pt,ct,expected_ct,match\n";
  for (const auto& v : vecs) {
    const auto ct = simon::encrypt_block(v.pt, v.key);
    json row = {{"key", simon::to_hex(v.key)},
                {"pt", simon::to_hex(v.pt)},
                {"ct", simon::to_hex(ct)}};
    std::string expected_hex, match_str;
    if (v.ct) {
      const bool match = ct.x == v.ct->x && ct.y == v.ct->y;
      expected_hex = simon::to_hex(*v.ct);
      match_str = fmt_bool(match);
      row["expected_ct"] = expected_hex;
      row["match"] = match;
      if (!match) {
        ++mismatches;
        err << "line " << v.line << ": ciphertext mismatch: computed "
            << simon::to_hex(ct) << ", expected " << expected_hex << '\n';
      }
    }
    rows.push_back(row);
    csv << simon::to_hex(v.key) << ',' << simon::to_hex(v.pt) << ','
        << simon::to_hex(ct) << ',' << expected_hex << ',' << match_str << '\n';
  }
  const json report = {{"vectors", vecs.size()},
                       {"mismatches", mismatches},
                       {"results", rows}};
  emit(report, g, out, csv.str());
  return mismatches == 0 ? kStatusOk : kStatusMismatch;
}

int cmd_simulate(const SimulateOpts& opts, const GlobalOpts& g,
                 std::ostream& out, std::ostream& err) {
  std::vector<simon::TestVector> vecs;
  try {
    vecs = simon::load_vectors(opts.vectors_path);
    if (vecs.empty()) throw std::runtime_error("no vectors in " + opts.vectors_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kStatusInputError;
  }

  int mismatches = 0;
  std::uint64_t cycles_per_block = 0;
  uarch::ActivityTrace totals;
  try {
    // first vector with per-cycle retention feeds the trace file
    uarch::Engine traced(opts.microarch, true);
    const auto first = traced.run_block(vecs.front().pt, vecs.front().key);
    cycles_per_block = first.trace.cycles;
    if (!opts.trace_path.empty()) {
      std::ofstream tf(opts.trace_path);
      if (!tf) throw std::runtime_error("cannot open " + opts.trace_path +
                                        " for writing");
      uarch::write_trace_csv(tf, first.trace, opts.microarch);
    }
    uarch::Engine eng(opts.microarch);
    for (const auto& v : vecs) {
      const auto res = eng.run_block(v.pt, v.key);
      const auto ref = simon::encrypt_block(v.pt, v.key);
      bool ok = res.ct.x == ref.x && res.ct.y == ref.y;
      if (v.ct && (res.ct.x != v.ct->x || res.ct.y != v.ct->y)) ok = false;
      if (!ok) {
        ++mismatches;
        err << "line " << v.line << ": simulated ciphertext mismatch\n";
      }
      totals.cycles += res.trace.cycles;
      for (std::size_t i = 0; i < uarch::kNumCellClasses; ++i) {
        totals.clock_events[i] += res.trace.clock_events[i];
        totals.data_toggles[i] += res.trace.data_toggles[i];
      }
      totals.comb_toggles += res.trace.comb_toggles;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kStatusInputError;
  }

  const json report = {
      {"arch", uarch::style_name(opts.microarch.style)},
      {"cell", uarch::seq_cell_name(opts.microarch.seq_cell)},
      {"vectors", vecs.size()},
      {"mismatches", mismatches},
      {"cycles_per_block", cycles_per_block},
      {"cycles_per_bit", uarch::cycles_per_bit(opts.microarch)},
      {"clocked_bits", uarch::total_clocked_bits(opts.microarch)},
      {"totals",
       {{"cycles", totals.cycles},
        {"clock_events", totals.total_clock_events()},
        {"data_toggles", totals.total_data_toggles()},
        {"comb_toggles", totals.comb_toggles}}}};
  std::ostringstream csv;
  csv << "arch,cell,vectors,mismatches,cycles_per_block,cycles_per_bit,"
         "clocked_bits,cycles,clock_events,data_toggles,comb_toggles\n"
      << uarch::style_name(opts.microarch.style) << ','
      << uarch::seq_cell_name(opts.microarch.seq_cell) << ',' << vecs.size()
      << ',' << mismatches << ',' << cycles_per_block << ','
      << fmt(uarch::cycles_per_bit(opts.microarch)) << ','
      << uarch::total_clocked_bits(opts.microarch) << ',' << totals.cycles
      << ',' << totals.total_clock_events() << ','
      << totals.total_data_toggles() << ',' << totals.comb_toggles << '\n';
  emit(report, g, out, csv.str());
  return mismatches == 0 ? kStatusOk : kStatusMismatch;
}

int cmd_compare(const CompareOpts& opts, const GlobalOpts& g,
                std::ostream& out, std::ostream& err) {
  cost::Calibration cal;
  std::vector<simon::TestVector> vecs;
  PublishedEngine pub_par, pub_ser;
  try {
    cal = cost::load_calibration(opts.calibration_path);
    vecs = simon::load_vectors(opts.vectors_path);
    if (vecs.empty()) throw std::runtime_error("no vectors in " + opts.vectors_path);
    const json pj = load_json_file(opts.published_path);
    pub_par = published_engine(pj.at("parallel"));
    pub_ser = published_engine(pj.at("serial"));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kStatusInputError;
  }

  const StyleRun par = run_style(uarch::Style::BitParallel, vecs);
  const StyleRun ser = run_style(uarch::Style::BitSerial, vecs);

  // cell-level estimates at the bit-parallel operating point
  const auto estimate = [&](uarch::SeqCell cell, const StyleRun& run,
                            uarch::Style style) {
    const int group = cell == uarch::SeqCell::MultiBitLatch8b ? 8 : 1;
    const uarch::MicroarchConfig cfg{style, cell, group};
    auto inv = cost::default_inventory(cfg, cal.ge, cal.um2_per_ge);
    inv.seq_area_fraction = cal.seq_area_fraction;
    inv.seq_energy_fraction = cal.seq_energy_fraction;
    const auto area = cost::estimate_area(inv, cfg, cal.um2_per_ge);
    const double energy = cost::estimate_energy_per_cycle(
        run.anchor, inv, cfg, cal.baseline_clocked_bits,
        cal.baseline_comb_toggles_per_cycle);
    return std::pair<cost::AreaEstimate, double>{area, energy};
  };
  const auto [area_ff, energy_ff] =
      estimate(uarch::SeqCell::FlipFlop, par, uarch::Style::BitParallel);
  const auto [area_l1, energy_l1] =
      estimate(uarch::SeqCell::PulsedLatch1b, par, uarch::Style::BitParallel);
  const auto [area_l8, energy_l8] =
      estimate(uarch::SeqCell::MultiBitLatch8b, par, uarch::Style::BitParallel);
  const double area_saving_pct = (1.0 - area_l8.relative / area_ff.relative) * 100.0;
  const double energy_saving_pct = (1.0 - energy_l8 / energy_ff) * 100.0;

  const double e_par = cost::energy_per_bit(
      {uarch::cycles_per_bit({uarch::Style::BitParallel, uarch::SeqCell::FlipFlop, 1}),
       pub_par.power_uW, pub_par.throughput_mbps});
  const double e_ser = cost::energy_per_bit(
      {uarch::cycles_per_bit({uarch::Style::BitSerial, uarch::SeqCell::FlipFlop, 1}),
       pub_ser.power_uW, pub_ser.throughput_mbps});
  cost::MetricsRecord rec_ser, rec_par;
  rec_ser.area_um2 = pub_ser.area_um2;
  rec_ser.energy_pj_per_bit = pub_ser.energy_value;
  rec_par.area_um2 = pub_par.area_um2;
  rec_par.energy_pj_per_bit = pub_par.energy_value;
  const auto pub_ratios = cost::serial_parallel_ratios(rec_ser, rec_par);
  const double pub_energy_ratio = pub_ratios.energy_ratio;
  const double pub_area_ratio = pub_ratios.area_ratio;

  std::vector<Check> checks;
  checks.push_back({"parallel_cycles_per_block",
                    static_cast<double>(par.cycles_per_block), "33",
                    par.cycles_per_block == 33});
  checks.push_back({"serial_cycles_per_block",
                    static_cast<double>(ser.cycles_per_block), "513",
                    ser.cycles_per_block == 513});
  checks.push_back(
      {"serial_cycles_per_bit",
       uarch::cycles_per_bit({uarch::Style::BitSerial, uarch::SeqCell::FlipFlop, 1}),
       "16", uarch::cycles_per_bit({uarch::Style::BitSerial,
                                    uarch::SeqCell::FlipFlop, 1}) == 16.0});
  checks.push_back({"ciphertext_equivalence",
                    par.all_match && ser.all_match ? 1.0 : 0.0, "1",
                    par.all_match && ser.all_match});
  checks.push_back({"multibit_area_saving_pct", area_saving_pct, "[12,14]",
                    in_band(area_saving_pct, 12.0, 14.0)});
  checks.push_back({"multibit_energy_saving_pct", energy_saving_pct, "[12,14]",
                    in_band(energy_saving_pct, 12.0, 14.0)});
  checks.push_back({"parallel_energy_per_bit", e_par, pub_par.energy_pj_per_bit,
                    cost::matches_published(e_par, pub_par.energy_pj_per_bit)});
  checks.push_back({"serial_energy_per_bit", e_ser, pub_ser.energy_pj_per_bit,
                    cost::matches_published(e_ser, pub_ser.energy_pj_per_bit)});
  checks.push_back({"published_energy_ratio", pub_energy_ratio, "[18.8,19.0]",
                    in_band(pub_energy_ratio, 18.8, 19.0)});
  checks.push_back({"published_area_ratio", pub_area_ratio, "[1.24,1.26]",
                    in_band(pub_area_ratio, 1.24, 1.26)});
  bool all_pass = true;
  for (const auto& c : checks) all_pass = all_pass && c.pass;

  const auto engine_json = [&](const StyleRun& run, uarch::Style style,
                               const PublishedEngine& pub) {
    const uarch::MicroarchConfig cfg{style, uarch::SeqCell::FlipFlop, 1};
    const auto inv = cost::default_inventory(cfg, cal.ge, cal.um2_per_ge);
    return json{
        {"cycles_per_block", run.cycles_per_block},
        {"cycles_per_bit", uarch::cycles_per_bit(cfg)},
        {"clocked_bits", uarch::total_clocked_bits(cfg)},
        {"comb_toggles_per_cycle", run.anchor.comb_toggles_per_cycle()},
        {"gate_equivalents", inv.gate_equivalents_total},
        {"area_um2_estimate", inv.area_um2},
        {"published",
         {{"area_um2", pub.area_um2},
          {"power_uW", pub.power_uW},
          {"throughput_mbps", pub.throughput_mbps},
          {"clock_mhz", pub.clock_mhz},
          {"energy_pj_per_bit", pub.energy_pj_per_bit},
          {"energy_pj_per_bit_recomputed",
           pub.power_uW / pub.throughput_mbps}}}};
  };
  const auto cell_json = [&](const cost::AreaEstimate& a, double e,
                             uarch::SeqCell cell) {
    const auto m = cal.cell(cell);
    return json{{"relative_area", a.relative},
                {"relative_energy", e},
                {"clocking_energy_per_bit",
                 m.energy_per_cycle_per_bit * m.clock_pin_energy_ratio}};
  };
  json report = {
      {"vectors", vecs.size()},
      {"engines",
       {{"parallel", engine_json(par, uarch::Style::BitParallel, pub_par)},
        {"serial", engine_json(ser, uarch::Style::BitSerial, pub_ser)}}},
      {"cells",
       {{"ff", cell_json(area_ff, energy_ff, uarch::SeqCell::FlipFlop)},
        {"latch1", cell_json(area_l1, energy_l1, uarch::SeqCell::PulsedLatch1b)},
        {"latch8", cell_json(area_l8, energy_l8, uarch::SeqCell::MultiBitLatch8b)}}},
      {"multibit_savings",
       {{"area_pct", area_saving_pct}, {"energy_pct", energy_saving_pct}}},
      {"published_ratios",
       {{"energy_ratio", pub_energy_ratio}, {"area_ratio", pub_area_ratio}}},
      {"checks", checks_to_json(checks)},
      {"all_pass", all_pass}};

  std::ostringstream csv;
  csv << "row_type,name,value,expected,pass\n";
  const auto engine_csv = [&](const char* label, const StyleRun& run,
                              uarch::Style style) {
    const uarch::MicroarchConfig cfg{style, uarch::SeqCell::FlipFlop, 1};
    const auto inv = cost::default_inventory(cfg, cal.ge, cal.um2_per_ge);
    csv << "engine." << label << ",cycles_per_block," << run.cycles_per_block
        << ",,\n";
    csv << "engine." << label << ",cycles_per_bit," << fmt(uarch::cycles_per_bit(cfg))
        << ",,\n";
    csv << "engine." << label << ",clocked_bits," << uarch::total_clocked_bits(cfg)
        << ",,\n";
    csv << "engine." << label << ",comb_toggles_per_cycle,"
        << fmt(run.anchor.comb_toggles_per_cycle()) << ",,\n";
    csv << "engine." << label << ",gate_equivalents,"
        << fmt(inv.gate_equivalents_total) << ",,\n";
  };
  engine_csv("parallel", par, uarch::Style::BitParallel);
  engine_csv("serial", ser, uarch::Style::BitSerial);
  const auto cell_csv = [&](const char* label, const cost::AreaEstimate& a, double e) {
    csv << "cell." << label << ",relative_area," << fmt(a.relative) << ",,\n";
    csv << "cell." << label << ",relative_energy," << fmt(e) << ",,\n";
  };
  cell_csv("ff", area_ff, energy_ff);
  cell_csv("latch1", area_l1, energy_l1);
  cell_csv("latch8", area_l8, energy_l8);
  for (const auto& c : checks)
    csv << "check," << c.name << ',' << fmt(c.value) << ',' << c.expected << ','
        << fmt_bool(c.pass) << '\n';

  emit(report, g, out, csv.str());
  return all_pass ? kStatusOk : kStatusMismatch;
}

int cmd_metrics(const MetricsOpts& opts, const GlobalOpts& g,
                std::ostream& out, std::ostream& err) {
  std::vector<cost::MetricsRecord> records;
  json expected;
  try {
    records = cost::load_metrics_csv(opts.input_csv);
    for (auto& r : records) r = cost::compute_metrics(r);
    if (!opts.expected_path.empty()) {
      expected = load_json_file(opts.expected_path);
      validate_expected_survey(expected);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kStatusInputError;
  }
  const double f2_scale =
      expected.is_object() ? expected.value("area_over_f2_scale", 1.0) : 1.0;
  const auto expected_row = [&](const std::string& name) -> json {
    if (!expected.is_object() || !expected.contains("rows")) return json();
    for (const auto& row : expected.at("rows"))
      if (row.value("name", "") == name) return row;
    return json();
  };

  int failures = 0;
  json rows = json::array();
  std::ostringstream csv;
  csv << "name,algorithm,datapath_bits,key_bits,F_nm,area_um2,voltage,"
         "energy_pj_per_bit,throughput_mbps,area_over_f2,energy_eff_per_area,"
         "throughput_eff,checks_failed\n";
  for (const auto& r : records) {
    json row = {{"name", r.name},
                {"algorithm", r.algorithm},
                {"datapath_bits", r.datapath_bits},
                {"key_bits", r.key_bits},
                {"F_nm", r.technology_F_nm},
                {"voltage", r.voltage},
                {"energy_pj_per_bit", r.energy_pj_per_bit},
                {"throughput_mbps", r.throughput_mbps}};
    if (r.area_um2) row["area_um2"] = *r.area_um2;
    if (r.area_over_f2) row["area_over_f2"] = *r.area_over_f2;
    if (r.energy_eff_per_area) row["energy_eff_per_area"] = *r.energy_eff_per_area;
    if (r.throughput_eff) row["throughput_eff"] = *r.throughput_eff;

    int row_failures = 0;
    const json exp = expected_row(r.name);
    if (exp.is_object()) {
      json cell_checks;
      const auto check_cell = [&](const char* key,
                                  const std::optional<double>& value,
                                  double scale) {
        if (!exp.contains(key)) return;
        const json& e = exp.at(key);
        bool pass = false;
        if (e.is_null()) {
          pass = !value.has_value();  // known-unpublishable cell
        } else if (value.has_value()) {
          pass = cost::matches_published(*value / scale, e.get<std::string>());
        }
        cell_checks[key] = pass;
        if (!pass) {
          ++row_failures;
          err << r.name << ": " << key << " deviates from the published value\n";
        }
      };
      check_cell("area_over_f2", r.area_over_f2, f2_scale);
      check_cell("energy_eff_per_area", r.energy_eff_per_area, 1.0);
      check_cell("throughput_eff", r.throughput_eff, 1.0);
      row["checks"] = cell_checks;
    }
    failures += row_failures;
    rows.push_back(row);

    const auto opt = [&](const std::optional<double>& v) {
      return v ? fmt(*v) : std::string();
    };
    csv << r.name << ',' << r.algorithm << ',' << r.datapath_bits << ','
        << r.key_bits << ',' << fmt(r.technology_F_nm) << ',' << opt(r.area_um2)
        << ',' << fmt(r.voltage) << ',' << fmt(r.energy_pj_per_bit) << ','
        << fmt(r.throughput_mbps) << ',' << opt(r.area_over_f2) << ','
        << opt(r.energy_eff_per_area) << ',' << opt(r.throughput_eff) << ','
        << row_failures << '\n';
  }
  const json report = {{"rows", rows}, {"failures", failures}};
  emit(report, g, out, csv.str());
  return failures == 0 ? kStatusOk : kStatusMismatch;
}

int cmd_sweep(const SweepOpts& opts, const GlobalOpts& g, std::ostream& out,
              std::ostream& err) {
  cost::Calibration cal;
  try {
    cal = cost::load_calibration(opts.calibration_path);
    if (!(opts.step > 0.0)) throw std::runtime_error("step must be > 0");
    if (opts.from > opts.to) throw std::runtime_error("empty sweep range");
    if (opts.var == SweepVar::Voltage &&
        (opts.from < cost::kVoltMin - 1e-12 || opts.to > cost::kVoltMax + 1e-12))
      throw std::runtime_error("voltage range outside [0.15, 1.0] V");
    if (opts.var == SweepVar::Duty && (opts.from <= 0.0 || opts.to >= 1.0))
      throw std::runtime_error("duty range outside (0, 1)");
    if (opts.var == SweepVar::Wordlength) {
      const auto integral = [](double v) {
        return std::abs(v - std::round(v)) < 1e-9;
      };
      if (!integral(opts.from) || !integral(opts.step))
        throw std::runtime_error("wordlength sweeps take integer bounds");
      if (opts.from < 1.0 || opts.to > 128.0)
        throw std::runtime_error("wordlength range outside [1, 128]");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kStatusInputError;
  }

  const int steps =
      static_cast<int>(std::floor((opts.to - opts.from) / opts.step + 1e-9));
  json points = json::array();
  std::ostringstream csv;
  const char* var_name = "";
  switch (opts.var) {
    case SweepVar::Voltage: {
      var_name = "voltage";
      csv << "voltage,energy_pj_per_bit\n";
      for (int i = 0; i <= steps; ++i) {
        const double v = opts.from + i * opts.step;
        const double e = cost::voltage_energy_curve(cal.voltage, v);
        points.push_back({{"voltage", v}, {"energy_pj_per_bit", e}});
        csv << fmt(v) << ',' << fmt(e) << '\n';
      }
      break;
    }
    case SweepVar::Duty: {
      var_name = "duty";
      csv << "duty,ok,max_borrow_used\n";
      // balanced profile: every round exactly fills the period
      cost::TimingParams t{1.0, 0.0, std::vector<double>(16, 1.0),
                           cal.borrow_limit_fraction};
      for (int i = 0; i <= steps; ++i) {
        const double d = opts.from + i * opts.step;
        t.duty_cycle = d;
        const auto r = cost::check_duty_cycle(t);
        points.push_back(
            {{"duty", d}, {"ok", r.ok}, {"max_borrow_used", r.max_borrow_used}});
        csv << fmt(d) << ',' << fmt_bool(r.ok) << ',' << fmt(r.max_borrow_used)
            << '\n';
      }
      break;
    }
    case SweepVar::Wordlength: {
      var_name = "wordlength";
      csv << "wordlength,storage_bits,gate_equivalents\n";
      constexpr int kBlockBits = 128;
      for (int i = 0; i <= steps; ++i) {
        const int w = static_cast<int>(std::llround(opts.from + i * opts.step));
        const auto c = cost::fifo_cost(w, kBlockBits, cal.fifo_ge_per_bit,
                                       cal.fifo_control_ge);
        points.push_back({{"wordlength", w},
                          {"storage_bits", c.storage_bits},
                          {"gate_equivalents", c.gate_equivalents}});
        csv << w << ',' << c.storage_bits << ',' << fmt(c.gate_equivalents)
            << '\n';
      }
      break;
    }
  }
  const json report = {{"variable", var_name}, {"points", points}};
  emit(report, g, out, csv.str());
  return kStatusOk;
}

}  // namespace bench
