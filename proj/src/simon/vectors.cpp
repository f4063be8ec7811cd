// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "simon/vectors.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace simon {
namespace {

bool parse_hex(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    int d;
    if (c >= '0' && c <= '9')
      d = c - '0';
    else if (c >= 'a' && c <= 'f')
      d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      d = c - 'A' + 10;
    else
      return false;
    out = (out << 4) | static_cast<unsigned>(d);
  }
  return true;
}

// Expects "name=<digits hex digits>"; throws on anything else.
std::uint64_t parse_field(const std::string& tok, const char* name, int digits,
                          int line) {
  const std::string prefix = std::string(name) + "=";
  if (tok.rfind(prefix, 0) != 0)
    throw VectorParseError(line, "expected '" + prefix + "...', got '" + tok + "'");
  const std::string hex = tok.substr(prefix.size());
  std::uint64_t v = 0;
  if (static_cast<int>(hex.size()) != digits || !parse_hex(hex, v))
    throw VectorParseError(line, "field '" + std::string(name) + "' needs " +
                                     std::to_string(digits) + " hex digits");
  return v;
}

Block block_from_u32(std::uint32_t v) {
  return {static_cast<word16>(v >> 16), static_cast<word16>(v & 0xFFFF)};
}

}  // namespace

std::vector<TestVector> parse_vectors(std::istream& in) {
  std::vector<TestVector> out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() != 2 && toks.size() != 3)
      throw VectorParseError(line, "expected 'key=... pt=... [ct=...]'");

    TestVector v;
    v.line = line;
    const std::uint64_t k = parse_field(toks[0], "key", 16, line);
    v.key = {static_cast<word16>(k >> 48), static_cast<word16>(k >> 32),
             static_cast<word16>(k >> 16), static_cast<word16>(k)};
    v.pt = block_from_u32(
        static_cast<std::uint32_t>(parse_field(toks[1], "pt", 8, line)));
    if (toks.size() == 3)
      v.ct = block_from_u32(
          static_cast<std::uint32_t>(parse_field(toks[2], "ct", 8, line)));
    out.push_back(v);
  }
  return out;
}

std::vector<TestVector> load_vectors(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw VectorParseError(0, "cannot open '" + path + "'");
  return parse_vectors(in);
}

std::string to_hex(Block b) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%04x%04x", b.x, b.y);
  return buf;
}

std::string to_hex(const Key& k) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%04x%04x%04x%04x", k.k3, k.k2, k.k1, k.k0);
  return buf;
}

std::string format_vector(const TestVector& v) {
  std::string s = "key=" + to_hex(v.key) + " pt=" + to_hex(v.pt);
  if (v.ct) s += " ct=" + to_hex(*v.ct);
  return s;
}

}  // namespace simon
