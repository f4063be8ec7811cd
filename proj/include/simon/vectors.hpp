// Copyright simonbench contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMON_VECTORS_HPP_
#define SIMON_VECTORS_HPP_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "simon/cipher.hpp"

namespace simon {

/// One line of a test-vector file. The ciphertext is optional on input;
/// `encrypt` fills it in, `verify` checks it.
struct TestVector {
  Key key;
  Block pt;
  std::optional<Block> ct;
  int line = 0;  // 1-based source line, for error reporting
};

/// Malformed vector file; `line` is the offending 1-based line number.
class VectorParseError : public std::runtime_error {
 public:
  VectorParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// File format, one case per line, hex big-endian word order (k3k2k1k0, xy):
//   key=<16 hex> pt=<8 hex> [ct=<8 hex>]
// Blank lines and lines starting with '#' are skipped.
std::vector<TestVector> parse_vectors(std::istream& in);
std::vector<TestVector> load_vectors(const std::string& path);
std::string format_vector(const TestVector& v);

std::string to_hex(Block b);
std::string to_hex(const Key& k);

}  // namespace simon

#endif  // SIMON_VECTORS_HPP_
