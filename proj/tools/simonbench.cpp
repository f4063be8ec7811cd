// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"

namespace {

int dispatch(const std::function<int(std::ostream&, std::ostream&)>& run,
             const std::string& out_path) {
  if (out_path.empty()) return run(std::cout, std::cerr);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return bench::kStatusInputError;
  }
  return run(out, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simon 32/64 crypto-engine bench: cipher, cycle-accurate "
               "microarchitecture simulation, and cost modeling"};
  app.require_subcommand(1);

  bench::GlobalOpts global;
  std::map<std::string, bench::Format> formats{{"json", bench::Format::Json},
                                               {"csv", bench::Format::Csv}};
  app.add_option("--format", global.format, "report format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("json");
  app.add_option("--out", global.out_path, "write the report to a file");

  bench::EncryptOpts enc;
  auto* cmd_enc = app.add_subcommand("encrypt", "encrypt a vector file");
  cmd_enc->fallthrough();  // global --format/--out may follow the subcommand
  cmd_enc->add_option("--vectors", enc.vectors_path, "vector file")->required();
  cmd_enc->add_flag("--verify", enc.verify,
                    "require an expected ciphertext on every line");

  bench::SimulateOpts sim;
  std::map<std::string, uarch::Style> styles{
      {"serial", uarch::Style::BitSerial}, {"parallel", uarch::Style::BitParallel}};
  std::map<std::string, uarch::SeqCell> cells{
      {"ff", uarch::SeqCell::FlipFlop},
      {"latch1", uarch::SeqCell::PulsedLatch1b},
      {"latch8", uarch::SeqCell::MultiBitLatch8b}};
  auto* cmd_sim = app.add_subcommand("simulate", "run one engine cycle by cycle");
  cmd_sim->fallthrough();
  cmd_sim->add_option("--arch", sim.microarch.style, "microarchitecture")
      ->transform(CLI::CheckedTransformer(styles, CLI::ignore_case))
      ->required();
  cmd_sim->add_option("--cell", sim.microarch.seq_cell, "sequential cell")
      ->transform(CLI::CheckedTransformer(cells, CLI::ignore_case));
  cmd_sim->add_option("--vectors", sim.vectors_path, "vector file")->required();
  cmd_sim->add_option("--trace", sim.trace_path,
                      "per-cycle activity CSV for the first vector");

  bench::CompareOpts cmp;
  auto* cmd_cmp = app.add_subcommand(
      "compare", "run both engines and check the model against published data");
  cmd_cmp->fallthrough();
  cmd_cmp->add_option("--calibration", cmp.calibration_path, "calibration JSON");
  cmd_cmp->add_option("--vectors", cmp.vectors_path, "vector file");
  cmd_cmp->add_option("--published", cmp.published_path,
                      "published engine summary JSON");

  bench::MetricsOpts met;
  auto* cmd_met = app.add_subcommand("metrics", "recompute survey efficiency columns");
  cmd_met->fallthrough();
  cmd_met->add_option("--input", met.input_csv, "survey CSV")->required();
  cmd_met->add_option("--expected", met.expected_path,
                      "published display values JSON, empty string disables checks");

  bench::SweepOpts swp;
  std::map<std::string, bench::SweepVar> vars{
      {"voltage", bench::SweepVar::Voltage},
      {"duty", bench::SweepVar::Duty},
      {"wordlength", bench::SweepVar::Wordlength}};
  auto* cmd_swp = app.add_subcommand("sweep", "sweep one model variable");
  cmd_swp->fallthrough();
  cmd_swp->add_option("--var", swp.var, "swept variable")
      ->transform(CLI::CheckedTransformer(vars, CLI::ignore_case))
      ->required();
  cmd_swp->add_option("--from", swp.from, "range start")->required();
  cmd_swp->add_option("--to", swp.to, "range end")->required();
  cmd_swp->add_option("--step", swp.step, "range step")->required();
  cmd_swp->add_option("--calibration", swp.calibration_path, "calibration JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bench::kStatusInputError;
  }

  // fix the derived field the engine validates
  sim.microarch.multibit_group =
      sim.microarch.seq_cell == uarch::SeqCell::MultiBitLatch8b ? 8 : 1;

  if (cmd_enc->parsed())
    return dispatch(
        [&](std::ostream& o, std::ostream& e) { return bench::cmd_encrypt(enc, global, o, e); },
        global.out_path);
  if (cmd_sim->parsed())
    return dispatch(
        [&](std::ostream& o, std::ostream& e) { return bench::cmd_simulate(sim, global, o, e); },
        global.out_path);
  if (cmd_cmp->parsed())
    return dispatch(
        [&](std::ostream& o, std::ostream& e) { return bench::cmd_compare(cmp, global, o, e); },
        global.out_path);
  if (cmd_met->parsed())
    return dispatch(
        [&](std::ostream& o, std::ostream& e) { return bench::cmd_metrics(met, global, o, e); },
        global.out_path);
  if (cmd_swp->parsed())
    return dispatch(
        [&](std::ostream& o, std::ostream& e) { return bench::cmd_sweep(swp, global, o, e); },
        global.out_path);
  return bench::kStatusInputError;
}
