// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef UARCH_ENGINE_HPP_
#define UARCH_ENGINE_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "simon/cipher.hpp"

namespace uarch {

enum class Style { BitParallel, BitSerial };
enum class SeqCell { FlipFlop, PulsedLatch1b, MultiBitLatch8b };

struct MicroarchConfig {
  Style style = Style::BitParallel;
  SeqCell seq_cell = SeqCell::FlipFlop;
  // bits per shared clock driver: 8 for MultiBitLatch8b, 1 otherwise
  int multibit_group = 1;
};

const char* style_name(Style s);
const char* seq_cell_name(SeqCell c);

/// Register groups tracked by the activity trace.
enum class CellClass : int { Data = 0, Key = 1, Control = 2, Staging = 3 };
inline constexpr int kNumCellClasses = 4;
const char* cell_class_name(CellClass c);

/// Stored bits per register group for a given microarchitecture.
/// Bit-parallel: 32 data + 64 key + 6 control = 102 clocked bits.
/// Bit-serial: 32 + 64 + 10 control + 16 staging = 122 clocked bits.
int clocked_bits(const MicroarchConfig& cfg, CellClass c);
int total_clocked_bits(const MicroarchConfig& cfg);

/// 2-input gate outputs evaluated per cycle for toggle counting
/// (datapath + key expansion; zero-delay, no glitches).
int comb_gate_count(const MicroarchConfig& cfg);

/// Steady-state cycles per plaintext bit, ignoring the load cycle.
double cycles_per_bit(const MicroarchConfig& cfg);

struct CycleActivity {
  std::uint32_t cycle = 0;
  std::array<std::uint16_t, kNumCellClasses> clock_events{};
  std::array<std::uint16_t, kNumCellClasses> data_toggles{};
  std::uint32_t comb_toggles = 0;
};

/// Per-run switching-activity counters. All counters are cumulative since
/// the last load; `per_cycle` is only populated when recording is enabled.
struct ActivityTrace {
  std::uint64_t cycles = 0;
  std::array<std::uint64_t, kNumCellClasses> clock_events{};
  std::array<std::uint64_t, kNumCellClasses> data_toggles{};
  std::uint64_t comb_toggles = 0;
  std::vector<CycleActivity> per_cycle;

  std::uint64_t total_clock_events() const;
  std::uint64_t total_data_toggles() const;
};

/// Per-class activity report of a completed run, the input to the
/// cost-model energy estimate.
struct TraceSummary {
  std::uint64_t cycles = 0;
  std::array<int, kNumCellClasses> bits{};
  std::array<std::uint64_t, kNumCellClasses> clock_events{};
  std::array<std::uint64_t, kNumCellClasses> data_toggles{};
  std::uint64_t comb_toggles = 0;
  int total_bits() const;
  double comb_toggles_per_cycle() const;
};

TraceSummary trace_summary(const ActivityTrace& trace,
                           const MicroarchConfig& cfg);

/// CSV dump, one row per (cycle, register class) plus a comb row per cycle.
/// Requires a trace recorded with per-cycle retention.
void write_trace_csv(std::ostream& os, const ActivityTrace& trace,
                     const MicroarchConfig& cfg);

enum class Phase { Idle, Computing, Done };

struct RunResult {
  simon::Block ct;
  ActivityTrace trace;
};

/// Cycle-accurate model of one crypto-engine instance.
///
/// The bit-parallel engine retires one Feistel round per cycle; the
/// bit-serial engine produces one bit of the round's new word per cycle
/// and commits the round every 16 cycles. Both expand the key on the fly
/// through a sliding 4-word window that advances once per round. Activity
/// counters are derived from actual register-bit transitions; every stored
/// bit receives a clock event every cycle (no clock gating).
class Engine {
 public:
  explicit Engine(const MicroarchConfig& cfg, bool record_cycles = false);

  const MicroarchConfig& config() const { return cfg_; }
  Phase phase() const { return phase_; }
  const ActivityTrace& trace() const { return trace_; }

  /// Captures operands, zeroes the counters and the trace, and enters
  /// Computing. Consumes one cycle. Rejected while Computing.
  void load(simon::Block pt, const simon::Key& key);

  /// Advances one clock cycle. Rejected unless Computing.
  void step();

  /// load + step until Done; ciphertext is read combinationally.
  RunResult run_block(simon::Block pt, const simon::Key& key);

  simon::Block data_state() const { return {x_, y_}; }
  std::array<simon::word16, 4> key_window() const { return kw_; }
  int rounds_done() const { return round_; }
  int bit_index() const { return bit_; }

 private:
  struct Snapshot;
  Snapshot snap() const;
  std::uint32_t control_word() const;
  void account(const Snapshot& before);
  void eval_comb();
  void step_parallel();
  void step_serial();

  MicroarchConfig cfg_;
  bool record_ = false;
  Phase phase_ = Phase::Idle;

  simon::word16 x_ = 0;
  simon::word16 y_ = 0;
  std::array<simon::word16, 4> kw_{};  // key window, kw_[0] = current round key
  simon::word16 staging_ = 0;          // bit-serial result accumulator
  int round_ = 0;                      // rounds committed, 0..32
  int bit_ = 0;                        // bit index within round, 0..15

  std::array<simon::word16, 7> comb_par_{};  // parallel gate outputs, 7x16
  std::uint8_t comb_ser_ = 0;                // serial gate outputs, 8x1
  ActivityTrace trace_;
};

}  // namespace uarch

#endif  // UARCH_ENGINE_HPP_
