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

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qfeas/errors.hpp"
#include "qfeas/fidelity.hpp"

namespace qfeas::sim {

/// Largest register the simulator accepts (2^16 amplitudes).
inline constexpr unsigned kMaxQubits = 16;

enum class GateKind : std::uint8_t { H, X, Y, Z, S, T, RZ, RX, CZ, CNOT, IDLE };

inline constexpr std::array<std::string_view, 11> kGateNames{"H",  "X",  "Y",  "Z",    "S",   "T",
                                                             "RZ", "RX", "CZ", "CNOT", "IDLE"};

inline std::string_view gate_name(GateKind k) { return kGateNames[static_cast<std::size_t>(k)]; }

inline std::optional<GateKind> gate_kind_from_name(std::string_view s) {
  for (std::size_t i = 0; i < kGateNames.size(); ++i) {
    if (kGateNames[i] == s) return static_cast<GateKind>(i);
  }
  return std::nullopt;
}

inline constexpr bool is_two_qubit(GateKind k) { return k == GateKind::CZ || k == GateKind::CNOT; }
inline constexpr bool has_angle(GateKind k) { return k == GateKind::RZ || k == GateKind::RX; }

/// One operation. For CNOT, targets[0] is the control.
struct Gate {
  GateKind kind = GateKind::IDLE;
  std::array<unsigned, 2> targets{0, 0};
  double theta = 0.0;

  unsigned arity() const { return is_two_qubit(kind) ? 2 : 1; }

  static Gate one(GateKind k, unsigned q, double theta = 0.0) { return Gate{k, {q, 0}, theta}; }
  static Gate two(GateKind k, unsigned a, unsigned b) { return Gate{k, {a, b}, 0.0}; }

  bool operator==(const Gate &) const = default;
};

inline void check_targets(const Gate &g, unsigned n_qubits) {
  for (unsigned i = 0; i < g.arity(); ++i) {
    if (g.targets[i] >= n_qubits) {
      throw BadTarget(std::string(gate_name(g.kind)) + ": qubit " + std::to_string(g.targets[i]) +
                      " outside register of " + std::to_string(n_qubits));
    }
  }
  if (g.arity() == 2 && g.targets[0] == g.targets[1]) {
    throw BadTarget(std::string(gate_name(g.kind)) + ": repeated qubit " +
                    std::to_string(g.targets[0]));
  }
  if (has_angle(g.kind) && !std::isfinite(g.theta)) {
    throw BadTarget(std::string(gate_name(g.kind)) + ": non-finite angle");
  }
}

class Circuit {
 public:
  explicit Circuit(unsigned n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
      throw BadInput("register size must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
  }

  unsigned n_qubits() const { return n_qubits_; }
  const std::vector<Gate> &gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  Circuit &add(const Gate &g) {
    check_targets(g, n_qubits_);
    gates_.push_back(g);
    return *this;
  }
  Circuit &add(GateKind k, unsigned q, double theta = 0.0) { return add(Gate::one(k, q, theta)); }
  Circuit &add(GateKind k, unsigned a, unsigned b) { return add(Gate::two(k, a, b)); }
  Circuit &append(const Circuit &other) {
    for (const Gate &g : other.gates_) add(g);
    return *this;
  }

  /// N0 = explicit IDLE slots, N1 = one-qubit gates, N2 = two-qubit gates.
  OpCounts counts() const {
    OpCounts c;
    for (const Gate &g : gates_) {
      if (g.kind == GateKind::IDLE) {
        c.n0 += 1;
      } else if (is_two_qubit(g.kind)) {
        c.n2 += 1;
      } else {
        c.n1 += 1;
      }
    }
    return c;
  }

  bool operator==(const Circuit &) const = default;

 private:
  unsigned n_qubits_;
  std::vector<Gate> gates_;
};

// Text format, one statement per line, '#' starts a comment:
//
//   QUBITS <n>                  (once, before any gate)
//   <GATE> <q>                  H X Y Z S T IDLE
//   <GATE> <q> <theta>          RZ RX, radians
//   <GATE> <q0> <q1>            CZ, CNOT (q0 is the control)
//
// Angles are written with 17 significant digits so text round-trips exactly.

inline std::string to_text(const Circuit &c) {
  std::string out = "QUBITS " + std::to_string(c.n_qubits()) + "\n";
  char buf[64];
  for (const Gate &g : c.gates()) {
    out += gate_name(g.kind);
    out += ' ';
    out += std::to_string(g.targets[0]);
    if (g.arity() == 2) {
      out += ' ';
      out += std::to_string(g.targets[1]);
    }
    if (has_angle(g.kind)) {
      std::snprintf(buf, sizeof buf, " %.17g", g.theta);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

inline Circuit circuit_from_text(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    auto fail = [&](const std::string &why) -> ParseError { return ParseError(why, line_no, 1); };
    auto parse_uint = [&](const std::string &s) {
      unsigned v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size()) throw fail("bad integer '" + s + "'");
      return v;
    };
    auto parse_double = [&](const std::string &s) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(s, &used);
      } catch (const std::exception &) {
        throw fail("bad angle '" + s + "'");
      }
      if (used != s.size()) throw fail("bad angle '" + s + "'");
      return v;
    };

    if (tok[0] == "QUBITS") {
      if (circuit) throw fail("duplicate QUBITS");
      if (tok.size() != 2) throw fail("QUBITS takes one argument");
      try {
        circuit.emplace(parse_uint(tok[1]));
      } catch (const BadInput &e) {
        throw fail(e.what());
      }
      continue;
    }
    if (!circuit) throw fail("gate before QUBITS");
    const auto kind = gate_kind_from_name(tok[0]);
    if (!kind) throw fail("unknown gate '" + tok[0] + "'");
    const std::size_t want = 2 + (is_two_qubit(*kind) ? 1 : 0) + (has_angle(*kind) ? 1 : 0);
    if (tok.size() != want) {
      throw fail(tok[0] + " expects " + std::to_string(want - 1) + " arguments");
    }
    Gate g;
    g.kind = *kind;
    g.targets[0] = parse_uint(tok[1]);
    if (is_two_qubit(*kind)) g.targets[1] = parse_uint(tok[2]);
    if (has_angle(*kind)) g.theta = parse_double(tok[2]);
    try {
      circuit->add(g);
    } catch (const BadTarget &e) {
      throw fail(e.what());
    }
  }
  if (!circuit) throw ParseError("missing QUBITS line");
  return std::move(*circuit);
}

}  // namespace qfeas::sim
