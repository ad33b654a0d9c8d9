// Copyright 2026 The qfeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qfeas {

// Invalid domain value (rate outside [0,1), non-positive time, ...).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Inverting the fidelity law through a channel with no operations.
struct ZeroCount : std::domain_error {
  using std::domain_error::domain_error;
};

// Physical error rate at or above the code threshold.
struct AboveThreshold : std::domain_error {
  using std::domain_error::domain_error;
};

// Requested logical error rate is below what the non-correctable floor allows.
struct FloorUnreachable : std::domain_error {
  using std::domain_error::domain_error;
};

// Gate acting on an out-of-range or repeated qubit index.
struct BadTarget : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Malformed simulator input (register size, bitstring, ...).
struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Least-squares design matrix does not separate the requested channels.
struct RankDeficient : std::domain_error {
  using std::domain_error::domain_error;
};

// Text input that could not be parsed. Line and column are 1-based; 0 means unknown.
struct ParseError : std::runtime_error {
  ParseError(const std::string &what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line == 0 ? what
                                     : what + " (line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace qfeas
