// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using bench::Format;
using bench::GlobalOpts;
using nlohmann::json;

const char* kVectors = REPO_DATA_DIR "/vectors/simon32_64.txt";
const char* kCalibration = REPO_DATA_DIR "/calibration/default.json";
const char* kPublished = REPO_DATA_DIR "/published/engine_summary.json";
const char* kSurvey = REPO_DATA_DIR "/published/design_survey.csv";
const char* kSurveyExpected = REPO_DATA_DIR "/published/design_survey_expected.json";

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "simonbench_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_scratch(const std::string& name, const std::string& content) {
  const auto path = scratch_dir() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

template <typename Opts, typename Fn>
Run run(Fn fn, const Opts& opts, Format format = Format::Json) {
  std::ostringstream out, err;
  GlobalOpts g;
  g.format = format;
  Run r;
  r.status = fn(opts, g, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("encrypt verifies the shipped corpus") {
  bench::EncryptOpts opts{kVectors, true};
  const auto r = run(bench::cmd_encrypt, opts);
  CHECK(r.status == bench::kStatusOk);
  CHECK(r.err.empty());
  const json j = json::parse(r.out);
  CHECK(j.at("vectors") == 21);
  CHECK(j.at("mismatches") == 0);
  for (const auto& row : j.at("results")) CHECK(row.at("match") == true);
}

TEST_CASE("encrypt reports a corrupted expectation as a mismatch") {
  const auto path = write_scratch(
      "corrupt.txt",
      "key=1918111009080100 pt=65656877 ct=c69be9bb\n"
      "key=1918111009080100 pt=65656877 ct=00000000\n");
  bench::EncryptOpts opts{path.string(), true};
  const auto r = run(bench::cmd_encrypt, opts);
  CHECK(r.status == bench::kStatusMismatch);
  CHECK(r.err.find("line 2") != std::string::npos);
  const json j = json::parse(r.out);
  CHECK(j.at("mismatches") == 1);
  CHECK(j.at("results")[0].at("match") == true);
  CHECK(j.at("results")[1].at("match") == false);
}

TEST_CASE("encrypt distinguishes input errors from mismatches") {
  SUBCASE("malformed hex") {
    const auto path = write_scratch(
        "badhex.txt",
        "key=1918111009080100 pt=65656877\n"
        "key=19181110090801zz pt=65656877\n");
    bench::EncryptOpts opts{path.string(), false};
    const auto r = run(bench::cmd_encrypt, opts);
    CHECK(r.status == bench::kStatusInputError);
    CHECK(r.err.find("line 2") != std::string::npos);
  }
  SUBCASE("verify without expected ciphertext") {
    const auto path =
        write_scratch("noct.txt", "key=1918111009080100 pt=65656877\n");
    bench::EncryptOpts opts{path.string(), true};
    CHECK(run(bench::cmd_encrypt, opts).status == bench::kStatusInputError);
    opts.verify = false;
    CHECK(run(bench::cmd_encrypt, opts).status == bench::kStatusOk);
  }
  SUBCASE("missing file") {
    bench::EncryptOpts opts{"/nonexistent/vectors.txt", false};
    CHECK(run(bench::cmd_encrypt, opts).status == bench::kStatusInputError);
  }
}

TEST_CASE("simulate writes a parseable per-cycle trace") {
  const auto trace_path = scratch_dir() / "serial_trace.csv";
  bench::SimulateOpts opts;
  opts.microarch = {uarch::Style::BitSerial, uarch::SeqCell::FlipFlop, 1};
  opts.vectors_path = kVectors;
  opts.trace_path = trace_path.string();
  const auto r = run(bench::cmd_simulate, opts);
  CHECK(r.status == bench::kStatusOk);
  const json j = json::parse(r.out);
  CHECK(j.at("mismatches") == 0);
  CHECK(j.at("cycles_per_block") == 513);
  CHECK(j.at("cycles_per_bit") == 16.0);
  CHECK(j.at("totals").at("cycles") == 21 * 513);

  std::ifstream tf(trace_path);
  REQUIRE(tf.good());
  std::string line;
  REQUIRE(std::getline(tf, line));
  CHECK(line == "cycle,cell_class,clock_events,data_toggles,comb_toggles");
  std::size_t rows = 0;
  while (std::getline(tf, line)) {
    CHECK(split_csv_line(line).size() == 5);
    ++rows;
  }
  // 513 cycles x (4 sequential classes + 1 comb row)
  CHECK(rows == 513 * 5);
}

TEST_CASE("simulate rejects an unknown vectors file") {
  bench::SimulateOpts opts;
  opts.microarch = {uarch::Style::BitParallel, uarch::SeqCell::FlipFlop, 1};
  opts.vectors_path = "/nonexistent/vectors.txt";
  CHECK(run(bench::cmd_simulate, opts).status == bench::kStatusInputError);
}

TEST_CASE("compare passes every published claim with shipped data") {
  bench::CompareOpts opts{kCalibration, kVectors, kPublished};
  const auto r = run(bench::cmd_compare, opts);
  CHECK(r.status == bench::kStatusOk);
  const json j = json::parse(r.out);
  CHECK(j.at("all_pass") == true);
  REQUIRE(j.at("checks").size() == 10);
  for (const auto& c : j.at("checks")) CHECK(c.at("pass") == true);
  CHECK(j.at("engines").at("parallel").at("cycles_per_block") == 33);
  CHECK(j.at("engines").at("serial").at("cycles_per_block") == 513);
}

TEST_CASE("compare fails when the published summary disagrees") {
  json pub = json::parse(std::ifstream(kPublished));
  pub["parallel"]["energy_pj_per_bit"] = "1.23";
  const auto path = write_scratch("bad_published.json", pub.dump());
  bench::CompareOpts opts{kCalibration, kVectors, path.string()};
  const auto r = run(bench::cmd_compare, opts);
  CHECK(r.status == bench::kStatusMismatch);
  const json j = json::parse(r.out);
  CHECK(j.at("all_pass") == false);
}

TEST_CASE("compare treats unreadable inputs as input errors") {
  bench::CompareOpts opts{"/nonexistent/cal.json", kVectors, kPublished};
  CHECK(run(bench::cmd_compare, opts).status == bench::kStatusInputError);
}

TEST_CASE("compare rejects a published energy that is not a plain number") {
  json pub = json::parse(std::ifstream(kPublished));
  pub["parallel"]["energy_pj_per_bit"] = "0.99 pJ";
  const auto path = write_scratch("junk_published.json", pub.dump());
  bench::CompareOpts opts{kCalibration, kVectors, path.string()};
  CHECK(run(bench::cmd_compare, opts).status == bench::kStatusInputError);
}

TEST_CASE("metrics reproduces the shipped survey") {
  bench::MetricsOpts opts{kSurvey, kSurveyExpected};
  const auto r = run(bench::cmd_metrics, opts);
  CHECK(r.status == bench::kStatusOk);
  const json j = json::parse(r.out);
  CHECK(j.at("failures") == 0);
  REQUIRE(j.at("rows").size() == 6);
  // the no-area row carries no derived columns and still passes its checks
  const auto& iscas = j.at("rows")[2];
  CHECK(iscas.at("name") == "ISCAS2018");
  CHECK_FALSE(iscas.contains("area_um2"));
  CHECK_FALSE(iscas.contains("area_over_f2"));
  CHECK(iscas.at("checks").at("area_over_f2") == true);
}

TEST_CASE("metrics flags a deviating published cell") {
  json exp = json::parse(std::ifstream(kSurveyExpected));
  exp["rows"][0]["throughput_eff"] = "0.700";
  const auto path = write_scratch("bad_expected.json", exp.dump());
  bench::MetricsOpts opts{kSurvey, path.string()};
  const auto r = run(bench::cmd_metrics, opts);
  CHECK(r.status == bench::kStatusMismatch);
  CHECK(r.err.find("ThisWork") != std::string::npos);
}

TEST_CASE("metrics rejects a malformed survey") {
  const auto path = write_scratch("bad_survey.csv", "name,oops\nX,1\n");
  bench::MetricsOpts opts{path.string(), kSurveyExpected};
  CHECK(run(bench::cmd_metrics, opts).status == bench::kStatusInputError);
}

TEST_CASE("metrics rejects malformed expected values") {
  json exp = json::parse(std::ifstream(kSurveyExpected));
  SUBCASE("trailing junk in a cell") {
    exp["rows"][0]["throughput_eff"] = "0.70abc";
  }
  SUBCASE("numeric cell instead of a display string") {
    exp["rows"][0]["throughput_eff"] = 0.7;
  }
  SUBCASE("non-numeric scale") { exp["area_over_f2_scale"] = "big"; }
  const auto path = write_scratch("junk_expected.json", exp.dump());
  bench::MetricsOpts opts{kSurvey, path.string()};
  CHECK(run(bench::cmd_metrics, opts).status == bench::kStatusInputError);
}

TEST_CASE("voltage sweep spans the model domain") {
  bench::SweepOpts opts;
  opts.var = bench::SweepVar::Voltage;
  opts.from = 0.15;
  opts.to = 1.0;
  opts.step = 0.05;
  opts.calibration_path = kCalibration;
  const auto r = run(bench::cmd_sweep, opts);
  CHECK(r.status == bench::kStatusOk);
  const json j = json::parse(r.out);
  CHECK(j.at("variable") == "voltage");
  REQUIRE(j.at("points").size() == 18);
  // the curve dips to a minimum inside the domain and rises again
  double e_first = j.at("points").front().at("energy_pj_per_bit");
  double e_last = j.at("points").back().at("energy_pj_per_bit");
  double e_min = e_first;
  for (const auto& p : j.at("points"))
    e_min = std::min(e_min, p.at("energy_pj_per_bit").get<double>());
  CHECK(e_min < e_first);
  CHECK(e_min < e_last);
}

TEST_CASE("duty sweep marks the supported window") {
  bench::SweepOpts opts;
  opts.var = bench::SweepVar::Duty;
  opts.from = 0.05;
  opts.to = 0.30;
  opts.step = 0.01;
  opts.calibration_path = kCalibration;
  const auto r = run(bench::cmd_sweep, opts);
  CHECK(r.status == bench::kStatusOk);
  const json j = json::parse(r.out);
  for (const auto& p : j.at("points")) {
    const double d = p.at("duty").get<double>();
    const bool ok = p.at("ok").get<bool>();
    CHECK(ok == (d > 0.0999 && d < 0.2401));
  }
}

TEST_CASE("wordlength sweep prices the aggregation fifo") {
  bench::SweepOpts opts;
  opts.var = bench::SweepVar::Wordlength;
  opts.from = 8.0;
  opts.to = 128.0;
  opts.step = 8.0;
  opts.calibration_path = kCalibration;
  const auto r = run(bench::cmd_sweep, opts);
  CHECK(r.status == bench::kStatusOk);
  const json j = json::parse(r.out);
  REQUIRE(j.at("points").size() == 16);
  const auto& w32 = j.at("points")[3];
  CHECK(w32.at("wordlength") == 32);
  CHECK(w32.at("storage_bits") == 256);
  CHECK(w32.at("gate_equivalents") == 2504.0);
  // a full-block interface needs no fifo at all
  const auto& last = j.at("points").back();
  CHECK(last.at("wordlength") == 128);
  CHECK(last.at("storage_bits") == 0);
  CHECK(last.at("gate_equivalents") == 0.0);
}

TEST_CASE("sweep validates its range") {
  bench::SweepOpts opts;
  opts.calibration_path = kCalibration;
  opts.var = bench::SweepVar::Voltage;
  opts.from = 0.5;
  opts.to = 0.9;
  opts.step = 0.0;
  CHECK(run(bench::cmd_sweep, opts).status == bench::kStatusInputError);
  opts.step = 0.1;
  opts.from = 1.0;
  opts.to = 0.5;
  CHECK(run(bench::cmd_sweep, opts).status == bench::kStatusInputError);
  opts.from = 0.5;
  opts.to = 1.2;
  CHECK(run(bench::cmd_sweep, opts).status == bench::kStatusInputError);
  opts.var = bench::SweepVar::Duty;
  opts.from = 0.0;
  opts.to = 0.3;
  CHECK(run(bench::cmd_sweep, opts).status == bench::kStatusInputError);
  opts.var = bench::SweepVar::Wordlength;
  opts.from = 8.5;
  opts.to = 16.0;
  opts.step = 1.0;
  CHECK(run(bench::cmd_sweep, opts).status == bench::kStatusInputError);
  opts.from = 8.0;
  opts.to = 256.0;
  CHECK(run(bench::cmd_sweep, opts).status == bench::kStatusInputError);
}

TEST_CASE("reports are deterministic") {
  bench::CompareOpts copts{kCalibration, kVectors, kPublished};
  CHECK(run(bench::cmd_compare, copts).out == run(bench::cmd_compare, copts).out);
  CHECK(run(bench::cmd_compare, copts, Format::Csv).out ==
        run(bench::cmd_compare, copts, Format::Csv).out);
  bench::SweepOpts sopts;
  sopts.var = bench::SweepVar::Voltage;
  sopts.from = 0.2;
  sopts.to = 0.9;
  sopts.step = 0.1;
  sopts.calibration_path = kCalibration;
  CHECK(run(bench::cmd_sweep, sopts).out == run(bench::cmd_sweep, sopts).out);
}

TEST_CASE("csv and json reports carry identical numbers") {
  bench::SweepOpts opts;
  opts.var = bench::SweepVar::Voltage;
  opts.from = 0.15;
  opts.to = 1.0;
  opts.step = 0.05;
  opts.calibration_path = kCalibration;
  const auto jr = run(bench::cmd_sweep, opts, Format::Json);
  const auto cr = run(bench::cmd_sweep, opts, Format::Csv);
  const json j = json::parse(jr.out);
  const auto lines = lines_of(cr.out);
  REQUIRE(lines.size() == j.at("points").size() + 1);
  CHECK(lines[0] == "voltage,energy_pj_per_bit");
  for (std::size_t i = 0; i < j.at("points").size(); ++i) {
    const auto fields = split_csv_line(lines[i + 1]);
    REQUIRE(fields.size() == 2);
    const auto& p = j.at("points")[i];
    CHECK(fields[0] == bench::format_number(p.at("voltage").get<double>()));
    CHECK(fields[1] ==
          bench::format_number(p.at("energy_pj_per_bit").get<double>()));
  }
}
