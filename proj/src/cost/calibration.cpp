// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "cost/calibration.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cost {
namespace {

using nlohmann::json;

const char* cell_key(uarch::SeqCell c) {
  switch (c) {
    case uarch::SeqCell::FlipFlop: return "FlipFlop";
    case uarch::SeqCell::PulsedLatch1b: return "PulsedLatch1b";
    case uarch::SeqCell::MultiBitLatch8b: return "MultiBitLatch8b";
  }
  return "?";
}

uarch::SeqCell cell_from_key(const std::string& s) {
  if (s == "FlipFlop") return uarch::SeqCell::FlipFlop;
  if (s == "PulsedLatch1b") return uarch::SeqCell::PulsedLatch1b;
  if (s == "MultiBitLatch8b") return uarch::SeqCell::MultiBitLatch8b;
  throw std::runtime_error("unknown cell '" + s + "'");
}

void check(bool cond, const char* what) {
  if (!cond) throw std::runtime_error(std::string("calibration: ") + what);
}

void validate(const Calibration& c) {
  for (const auto& m : c.cells) {
    check(m.area_per_bit > 0.0, "cell area must be > 0");
    check(m.energy_per_cycle_per_bit > 0.0, "cell energy must be > 0");
    check(m.clock_pin_energy_ratio > 0.0 && m.clock_pin_energy_ratio < 1.0,
          "clock pin ratio outside (0,1)");
  }
  const auto clocking = [&](uarch::SeqCell s) {
    const auto& m = c.cell(s);
    return m.energy_per_cycle_per_bit * m.clock_pin_energy_ratio;
  };
  check(std::abs(clocking(uarch::SeqCell::MultiBitLatch8b) -
                 0.6 * clocking(uarch::SeqCell::PulsedLatch1b)) < 1e-9,
        "multi-bit clocking energy must be 0.6x the 1-b latch");
  check(c.seq_area_fraction > 0.0 && c.seq_area_fraction < 1.0,
        "seq_area_fraction outside (0,1)");
  check(c.seq_energy_fraction > 0.0 && c.seq_energy_fraction < 1.0,
        "seq_energy_fraction outside (0,1)");
  check(c.um2_per_ge > 0.0, "um2_per_ge must be > 0");
  check(c.baseline_clocked_bits > 0.0, "baseline_clocked_bits must be > 0");
  check(c.baseline_comb_toggles_per_cycle > 0.0,
        "baseline_comb_toggles_per_cycle must be > 0");
  check(c.fifo_ge_per_bit > 0.0, "fifo_ge_per_bit must be > 0");
  check(c.fifo_control_ge >= 0.0, "fifo_control_ge must be >= 0");
  check(c.borrow_limit_fraction > 0.0 && c.borrow_limit_fraction < 1.0,
        "borrow_limit_fraction outside (0,1)");
  check(c.voltage.v_nom > 0.0 && c.voltage.e_dyn_nom > 0.0 &&
            c.voltage.leak_ratio_nom > 0.0,
        "voltage parameters must be > 0");
  check(c.voltage.delay_fit.alpha > 1.0, "delay alpha must be > 1");
  check(c.voltage.delay_fit.subvt_slope_v > 0.0, "sub-vt slope must be > 0");
}

}  // namespace

Calibration::Calibration()
    : cells{cell_model(uarch::SeqCell::FlipFlop),
            cell_model(uarch::SeqCell::PulsedLatch1b),
            cell_model(uarch::SeqCell::MultiBitLatch8b)} {}

const CellModel& Calibration::cell(uarch::SeqCell c) const {
  for (const auto& m : cells)
    if (m.cell == c) return m;
  throw std::logic_error("cell model table is incomplete");
}

std::string to_json(const Calibration& c) {
  json j;
  for (const auto& m : c.cells) {
    j["cells"].push_back({{"cell", cell_key(m.cell)},
                          {"area_per_bit", m.area_per_bit},
                          {"energy_per_cycle_per_bit", m.energy_per_cycle_per_bit},
                          {"clock_pin_energy_ratio", m.clock_pin_energy_ratio}});
  }
  j["ge_table"] = {{"AND2", c.ge.and2},
                   {"XOR2", c.ge.xor2},
                   {"MUX2", c.ge.mux2},
                   {"FF", c.ge.flip_flop},
                   {"Latch", c.ge.latch}};
  j["um2_per_ge"] = c.um2_per_ge;
  j["seq_area_fraction"] = c.seq_area_fraction;
  j["seq_energy_fraction"] = c.seq_energy_fraction;
  j["baseline_clocked_bits"] = c.baseline_clocked_bits;
  j["baseline_comb_toggles_per_cycle"] = c.baseline_comb_toggles_per_cycle;
  j["fifo_ge_per_bit"] = c.fifo_ge_per_bit;
  j["fifo_control_ge"] = c.fifo_control_ge;
  j["borrow_limit_fraction"] = c.borrow_limit_fraction;
  j["voltage"] = {{"v_nom", c.voltage.v_nom},
                  {"e_dyn_nom", c.voltage.e_dyn_nom},
                  {"leak_ratio_nom", c.voltage.leak_ratio_nom},
                  {"delay_fit",
                   {{"alpha", c.voltage.delay_fit.alpha},
                    {"subvt_slope_v", c.voltage.delay_fit.subvt_slope_v}}}};
  return j.dump(2) + "\n";
}

Calibration calibration_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("calibration: ") + e.what());
  }
  Calibration c;
  try {
    if (j.contains("cells")) {
      for (const auto& jc : j.at("cells")) {
        const auto cell = cell_from_key(jc.at("cell").get<std::string>());
        for (auto& m : c.cells) {
          if (m.cell != cell) continue;
          m.area_per_bit = jc.value("area_per_bit", m.area_per_bit);
          m.energy_per_cycle_per_bit =
              jc.value("energy_per_cycle_per_bit", m.energy_per_cycle_per_bit);
          m.clock_pin_energy_ratio =
              jc.value("clock_pin_energy_ratio", m.clock_pin_energy_ratio);
        }
      }
    }
    if (j.contains("ge_table")) {
      const auto& g = j.at("ge_table");
      c.ge.and2 = g.value("AND2", c.ge.and2);
      c.ge.xor2 = g.value("XOR2", c.ge.xor2);
      c.ge.mux2 = g.value("MUX2", c.ge.mux2);
      c.ge.flip_flop = g.value("FF", c.ge.flip_flop);
      c.ge.latch = g.value("Latch", c.ge.latch);
    }
    c.um2_per_ge = j.value("um2_per_ge", c.um2_per_ge);
    c.seq_area_fraction = j.value("seq_area_fraction", c.seq_area_fraction);
    c.seq_energy_fraction = j.value("seq_energy_fraction", c.seq_energy_fraction);
    c.baseline_clocked_bits =
        j.value("baseline_clocked_bits", c.baseline_clocked_bits);
    c.baseline_comb_toggles_per_cycle = j.value(
        "baseline_comb_toggles_per_cycle", c.baseline_comb_toggles_per_cycle);
    c.fifo_ge_per_bit = j.value("fifo_ge_per_bit", c.fifo_ge_per_bit);
    c.fifo_control_ge = j.value("fifo_control_ge", c.fifo_control_ge);
    c.borrow_limit_fraction =
        j.value("borrow_limit_fraction", c.borrow_limit_fraction);
    if (j.contains("voltage")) {
      const auto& v = j.at("voltage");
      c.voltage.v_nom = v.value("v_nom", c.voltage.v_nom);
      c.voltage.e_dyn_nom = v.value("e_dyn_nom", c.voltage.e_dyn_nom);
      c.voltage.leak_ratio_nom = v.value("leak_ratio_nom", c.voltage.leak_ratio_nom);
      if (v.contains("delay_fit")) {
        const auto& f = v.at("delay_fit");
        c.voltage.delay_fit.alpha = f.value("alpha", c.voltage.delay_fit.alpha);
        c.voltage.delay_fit.subvt_slope_v =
            f.value("subvt_slope_v", c.voltage.delay_fit.subvt_slope_v);
      }
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("calibration: ") + e.what());
  }
  validate(c);
  return c;
}

Calibration load_calibration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return calibration_from_json(ss.str());
}

void save_calibration(const Calibration& cal, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << to_json(cal);
}

}  // namespace cost
