// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef CLI_COMMANDS_HPP_
#define CLI_COMMANDS_HPP_

#include <iosfwd>
#include <string>

#include "uarch/engine.hpp"

namespace bench {

// exit status contract shared by every command
inline constexpr int kStatusOk = 0;
inline constexpr int kStatusMismatch = 1;
inline constexpr int kStatusInputError = 2;

enum class Format { Json, Csv };

struct GlobalOpts {
  Format format = Format::Json;
  std::string out_path;  // empty = stdout
};

struct EncryptOpts {
  std::string vectors_path;
  bool verify = false;  // require an expected ciphertext on every line
};

struct SimulateOpts {
  uarch::MicroarchConfig microarch;
  std::string vectors_path;
  std::string trace_path;  // per-cycle activity CSV of the first vector
};

struct CompareOpts {
  std::string calibration_path = "data/calibration/default.json";
  std::string vectors_path = "data/vectors/simon32_64.txt";
  std::string published_path = "data/published/engine_summary.json";
};

struct MetricsOpts {
  std::string input_csv;
  std::string expected_path = "data/published/design_survey_expected.json";
};

enum class SweepVar { Voltage, Duty, Wordlength };

struct SweepOpts {
  SweepVar var = SweepVar::Voltage;
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;
  std::string calibration_path = "data/calibration/default.json";
};

/// Each command writes its report to `out` and diagnostics to `err`,
/// returning the exit status. Reports are deterministic: identical inputs
/// give byte-identical output.
int cmd_encrypt(const EncryptOpts& opts, const GlobalOpts& g,
                std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOpts& opts, const GlobalOpts& g,
                 std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOpts& opts, const GlobalOpts& g,
                std::ostream& out, std::ostream& err);
int cmd_metrics(const MetricsOpts& opts, const GlobalOpts& g,
                std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOpts& opts, const GlobalOpts& g,
              std::ostream& out, std::ostream& err);

/// Shared number formatting: shortest round-trip decimal, so JSON and CSV
/// carry identical values.
std::string format_number(double v);

}  // namespace bench

#endif  // CLI_COMMANDS_HPP_
