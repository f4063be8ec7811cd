// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "uarch/engine.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>

namespace uarch {
namespace {

int popcount16(simon::word16 v) { return std::popcount(static_cast<unsigned>(v)); }

int bit_of(simon::word16 w, int i) { return (w >> (i & 15)) & 1; }

simon::word16 with_bit(simon::word16 w, int i, int b) {
  return static_cast<simon::word16>((w & ~(1u << i)) | (static_cast<unsigned>(b) << i));
}

}  // namespace

const char* style_name(Style s) {
  return s == Style::BitParallel ? "parallel" : "serial";
}

const char* seq_cell_name(SeqCell c) {
  switch (c) {
    case SeqCell::FlipFlop: return "ff";
    case SeqCell::PulsedLatch1b: return "latch1";
    case SeqCell::MultiBitLatch8b: return "latch8";
  }
  return "?";
}

const char* cell_class_name(CellClass c) {
  switch (c) {
    case CellClass::Data: return "data";
    case CellClass::Key: return "key";
    case CellClass::Control: return "control";
    case CellClass::Staging: return "staging";
  }
  return "?";
}

int clocked_bits(const MicroarchConfig& cfg, CellClass c) {
  const bool serial = cfg.style == Style::BitSerial;
  switch (c) {
    case CellClass::Data: return 32;
    case CellClass::Key: return 64;
    // round counter (5) + busy (1), serial adds the 4-bit bit counter
    case CellClass::Control: return serial ? 10 : 6;
    case CellClass::Staging: return serial ? 16 : 0;
  }
  return 0;
}

int total_clocked_bits(const MicroarchConfig& cfg) {
  int total = 0;
  for (int i = 0; i < kNumCellClasses; ++i)
    total += clocked_bits(cfg, static_cast<CellClass>(i));
  return total;
}

int comb_gate_count(const MicroarchConfig& cfg) {
  // parallel: 16 AND + 6x16 XOR; serial: 1 AND + 7 XOR on single bits
  return cfg.style == Style::BitParallel ? 112 : 8;
}

double cycles_per_bit(const MicroarchConfig& cfg) {
  return cfg.style == Style::BitParallel ? 1.0 : 16.0;
}

std::uint64_t ActivityTrace::total_clock_events() const {
  std::uint64_t t = 0;
  for (auto v : clock_events) t += v;
  return t;
}

std::uint64_t ActivityTrace::total_data_toggles() const {
  std::uint64_t t = 0;
  for (auto v : data_toggles) t += v;
  return t;
}

int TraceSummary::total_bits() const {
  int t = 0;
  for (auto b : bits) t += b;
  return t;
}

double TraceSummary::comb_toggles_per_cycle() const {
  return cycles == 0 ? 0.0 : static_cast<double>(comb_toggles) / static_cast<double>(cycles);
}

TraceSummary trace_summary(const ActivityTrace& trace, const MicroarchConfig& cfg) {
  TraceSummary s;
  s.cycles = trace.cycles;
  for (int i = 0; i < kNumCellClasses; ++i)
    s.bits[static_cast<std::size_t>(i)] = clocked_bits(cfg, static_cast<CellClass>(i));
  s.clock_events = trace.clock_events;
  s.data_toggles = trace.data_toggles;
  s.comb_toggles = trace.comb_toggles;
  return s;
}

void write_trace_csv(std::ostream& os, const ActivityTrace& trace,
                     const MicroarchConfig& cfg) {
  if (trace.per_cycle.size() != trace.cycles)
    throw std::logic_error("trace was not recorded with per-cycle retention");
  os << "cycle,cell_class,clock_events,data_toggles,comb_toggles\n";
  for (const auto& row : trace.per_cycle) {
    for (int i = 0; i < kNumCellClasses; ++i) {
      const auto c = static_cast<CellClass>(i);
      if (clocked_bits(cfg, c) == 0) continue;
      os << row.cycle << ',' << cell_class_name(c) << ','
         << row.clock_events[static_cast<std::size_t>(i)] << ','
         << row.data_toggles[static_cast<std::size_t>(i)] << ",0\n";
    }
    os << row.cycle << ",comb,0,0," << row.comb_toggles << '\n';
  }
}

struct Engine::Snapshot {
  simon::word16 x, y, staging;
  std::array<simon::word16, 4> kw;
  std::uint32_t control;
};

Engine::Engine(const MicroarchConfig& cfg, bool record_cycles)
    : cfg_(cfg), record_(record_cycles) {
  const int want = cfg.seq_cell == SeqCell::MultiBitLatch8b ? 8 : 1;
  if (cfg.multibit_group != want)
    throw std::invalid_argument("multibit_group must be " + std::to_string(want) +
                                " for " + seq_cell_name(cfg.seq_cell));
  eval_comb();
}

Engine::Snapshot Engine::snap() const {
  return {x_, y_, staging_, kw_, control_word()};
}

std::uint32_t Engine::control_word() const {
  const std::uint32_t busy = phase_ == Phase::Computing ? 1u : 0u;
  const auto round = static_cast<std::uint32_t>(round_) & 31u;
  if (cfg_.style == Style::BitParallel) return round | busy << 5;
  return round | (static_cast<std::uint32_t>(bit_) & 15u) << 5 | busy << 9;
}

void Engine::eval_comb() {
  using simon::rol16;
  using simon::ror16;
  if (cfg_.style == Style::BitParallel) {
    const simon::word16 and_o = rol16(x_, 1) & rol16(x_, 8);
    const simon::word16 fx = and_o ^ rol16(x_, 2);
    const simon::word16 s1 = fx ^ y_;
    const simon::word16 s2 = s1 ^ kw_[0];
    const simon::word16 tmp = ror16(kw_[3], 3) ^ kw_[1];
    const simon::word16 a = kw_[0] ^ tmp;
    const simon::word16 b = a ^ ror16(tmp, 1);
    std::array<simon::word16, 7> next = {and_o, fx, s1, s2, tmp, a, b};
    std::uint64_t flips = 0;
    for (std::size_t i = 0; i < next.size(); ++i)
      flips += static_cast<std::uint64_t>(popcount16(next[i] ^ comb_par_[i]));
    trace_.comb_toggles += flips;
    if (record_ && !trace_.per_cycle.empty())
      trace_.per_cycle.back().comb_toggles += static_cast<std::uint32_t>(flips);
    comb_par_ = next;
    return;
  }
  const int j = bit_;
  const int and_o = bit_of(x_, j + 15) & bit_of(x_, j + 8);
  const int d1 = and_o ^ bit_of(x_, j + 14);
  const int d2 = d1 ^ bit_of(y_, j);
  const int d3 = d2 ^ bit_of(kw_[0], j);
  const int t1 = bit_of(kw_[3], j + 3) ^ bit_of(kw_[1], j);
  const int t2 = bit_of(kw_[3], j + 4) ^ bit_of(kw_[1], j + 1);
  const int t3 = bit_of(kw_[0], j) ^ t1;
  const int t4 = t3 ^ t2;
  const auto next = static_cast<std::uint8_t>(
      and_o | d1 << 1 | d2 << 2 | d3 << 3 | t1 << 4 | t2 << 5 | t3 << 6 | t4 << 7);
  const auto flips = static_cast<std::uint64_t>(
      std::popcount(static_cast<unsigned>(next ^ comb_ser_)));
  trace_.comb_toggles += flips;
  if (record_ && !trace_.per_cycle.empty())
    trace_.per_cycle.back().comb_toggles += static_cast<std::uint32_t>(flips);
  comb_ser_ = next;
}

void Engine::account(const Snapshot& before) {
  std::array<std::uint16_t, kNumCellClasses> clocks{};
  std::array<std::uint16_t, kNumCellClasses> toggles{};
  for (int i = 0; i < kNumCellClasses; ++i)
    clocks[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>(clocked_bits(cfg_, static_cast<CellClass>(i)));
  toggles[0] = static_cast<std::uint16_t>(popcount16(x_ ^ before.x) +
                                          popcount16(y_ ^ before.y));
  int key_flips = 0;
  for (std::size_t i = 0; i < 4; ++i) key_flips += popcount16(kw_[i] ^ before.kw[i]);
  toggles[1] = static_cast<std::uint16_t>(key_flips);
  toggles[2] = static_cast<std::uint16_t>(
      std::popcount(control_word() ^ before.control));
  toggles[3] = static_cast<std::uint16_t>(popcount16(staging_ ^ before.staging));

  trace_.cycles += 1;
  for (std::size_t i = 0; i < kNumCellClasses; ++i) {
    trace_.clock_events[i] += clocks[i];
    trace_.data_toggles[i] += toggles[i];
  }
  if (record_) {
    CycleActivity row;
    row.cycle = static_cast<std::uint32_t>(trace_.cycles - 1);
    row.clock_events = clocks;
    row.data_toggles = toggles;
    trace_.per_cycle.push_back(row);
  }
  eval_comb();
}

void Engine::load(simon::Block pt, const simon::Key& key) {
  if (phase_ == Phase::Computing)
    throw std::logic_error("load while a block is in flight");
  trace_.cycles = 0;
  trace_.clock_events = {};
  trace_.data_toggles = {};
  trace_.comb_toggles = 0;
  trace_.per_cycle.clear();

  const Snapshot before = snap();
  x_ = pt.x;
  y_ = pt.y;
  kw_ = {key.k0, key.k1, key.k2, key.k3};
  // staging keeps its old value: it recirculates until the first commit
  round_ = 0;
  bit_ = 0;
  phase_ = Phase::Computing;
  account(before);
}

void Engine::step() {
  if (phase_ != Phase::Computing)
    throw std::logic_error("step outside an active computation");
  if (cfg_.style == Style::BitParallel)
    step_parallel();
  else
    step_serial();
}

void Engine::step_parallel() {
  const Snapshot before = snap();
  const simon::word16 k = kw_[0];
  const simon::Block next = simon::encrypt_round({x_, y_}, k);
  const simon::word16 knew = simon::next_round_key(kw_[0], kw_[1], kw_[3], round_);
  x_ = next.x;
  y_ = next.y;
  kw_ = {kw_[1], kw_[2], kw_[3], knew};
  round_ += 1;
  if (round_ == simon::kRounds) phase_ = Phase::Done;
  account(before);
}

void Engine::step_serial() {
  const Snapshot before = snap();
  const int j = bit_;
  // one result bit per cycle, taps into statically held registers
  const int and_o = bit_of(x_, j + 15) & bit_of(x_, j + 8);
  const int data_bit = and_o ^ bit_of(x_, j + 14) ^ bit_of(y_, j) ^ bit_of(kw_[0], j);
  const int tmp_j = bit_of(kw_[3], j + 3) ^ bit_of(kw_[1], j);
  const int tmp_j1 = bit_of(kw_[3], j + 4) ^ bit_of(kw_[1], j + 1);
  const int c_bit = (simon::kKeyConst >> j) & 1;
  const int z_term = j == 0 ? simon::z_bit(round_) : 0;
  const int key_bit = bit_of(kw_[0], j) ^ tmp_j ^ tmp_j1 ^ c_bit ^ z_term;

  if (j < 15) {
    staging_ = with_bit(staging_, j, data_bit);
    kw_[0] = with_bit(kw_[0], j, key_bit);  // bit j is dead for this round
    bit_ = j + 1;
  } else {
    const simon::word16 new_x = with_bit(staging_, 15, data_bit);
    const simon::word16 knew = with_bit(kw_[0], 15, key_bit);
    staging_ = new_x;
    y_ = x_;
    x_ = new_x;
    kw_ = {kw_[1], kw_[2], kw_[3], knew};
    bit_ = 0;
    round_ += 1;
    if (round_ == simon::kRounds) phase_ = Phase::Done;
  }
  account(before);
}

RunResult Engine::run_block(simon::Block pt, const simon::Key& key) {
  load(pt, key);
  while (phase_ == Phase::Computing) step();
  return {data_state(), trace_};
}

}  // namespace uarch
