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

// Grover search on the simulator gate set.
//
// Marked bitstrings are written qubit 0 first: marked[q] is the value of
// qubit q, so "011" marks basis index 0b110 = 6.
//
// The n-qubit controlled-Z is expanded without ancillas as a phase
// polynomial. With x_0..x_{m-1} the qubit values,
//
//   x_0 x_1 ... x_{m-1} = 2^{1-m} * sum_{S nonempty} (-1)^{|S|+1} parity_S(x),
//
// so the phase pi * AND(x) is a product of exp(i a_S parity_S) factors, each
// an RZ(a_S) on a qubit holding parity_S (up to global phase). For every
// target t = qs[j], the subsets whose highest member is t are visited in
// Gray-code order over qs[0..j-1], one CNOT per step, plus one CNOT to
// restore t. Exact cost for m >= 3: 2^m - 1 RZ and 2^m - 2 CNOT. m = 1 is a
// single Z and m = 2 a single CZ.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfeas/errors.hpp"
#include "qfeas/fidelity.hpp"
#include "qfeas/sim/circuit.hpp"
#include "qfeas/sim/noise.hpp"
#include "qfeas/sim/state.hpp"

namespace qfeas::sim {

/// Exact (N1, N2) of append_multi_controlled_z on m qubits.
inline OpCounts multi_controlled_z_counts(unsigned m) {
  if (m == 1) return {0, 1, 0};
  if (m == 2) return {0, 0, 1};
  const double p = std::exp2(static_cast<double>(m));
  return {0, p - 1.0, p - 2.0};
}

/// Phase -1 on the all-ones state of `qs` (global phase aside).
inline void append_multi_controlled_z(Circuit &c, std::span<const unsigned> qs) {
  const unsigned m = static_cast<unsigned>(qs.size());
  if (m == 0) throw BadInput("multi-controlled Z needs at least one qubit");
  if (m == 1) {
    c.add(GateKind::Z, qs[0]);
    return;
  }
  if (m == 2) {
    c.add(GateKind::CZ, qs[0], qs[1]);
    return;
  }
  const double unit = std::numbers::pi / std::exp2(static_cast<double>(m - 1));
  auto angle = [unit](unsigned subset_size) { return subset_size % 2 == 1 ? unit : -unit; };
  for (unsigned j = 0; j < m; ++j) {
    const unsigned target = qs[j];
    c.add(GateKind::RZ, target, angle(1));
    const std::uint64_t steps = std::uint64_t{1} << j;
    for (std::uint64_t k = 1; k < steps; ++k) {
      const unsigned flipped = static_cast<unsigned>(std::countr_zero(k));
      const std::uint64_t gray = k ^ (k >> 1);
      c.add(GateKind::CNOT, qs[flipped], target);
      c.add(GateKind::RZ, target, angle(static_cast<unsigned>(std::popcount(gray)) + 1));
    }
    if (j > 0) c.add(GateKind::CNOT, qs[j - 1], target);
  }
}

inline std::uint64_t bitstring_index(std::string_view marked) {
  std::uint64_t idx = 0;
  for (std::size_t q = 0; q < marked.size(); ++q) {
    if (marked[q] == '1') {
      idx |= std::uint64_t{1} << q;
    } else if (marked[q] != '0') {
      throw BadInput("marked bitstring may only contain 0 and 1");
    }
  }
  return idx;
}

/// H on every qubit, then `iterations` rounds of phase oracle and diffusion.
inline Circuit build_grover_circuit(unsigned n, std::string_view marked, std::size_t iterations) {
  if (n < 1 || n > kMaxQubits) {
    throw BadInput("grover register must have 1.." + std::to_string(kMaxQubits) + " qubits");
  }
  if (marked.size() != n) throw BadInput("marked bitstring must have n bits");
  bitstring_index(marked);

  Circuit c(n);
  std::vector<unsigned> all(n);
  for (unsigned q = 0; q < n; ++q) all[q] = q;
  for (unsigned q = 0; q < n; ++q) c.add(GateKind::H, q);
  for (std::size_t it = 0; it < iterations; ++it) {
    for (unsigned q = 0; q < n; ++q)
      if (marked[q] == '0') c.add(GateKind::X, q);
    append_multi_controlled_z(c, all);
    for (unsigned q = 0; q < n; ++q)
      if (marked[q] == '0') c.add(GateKind::X, q);

    for (unsigned q = 0; q < n; ++q) c.add(GateKind::H, q);
    for (unsigned q = 0; q < n; ++q) c.add(GateKind::X, q);
    append_multi_controlled_z(c, all);
    for (unsigned q = 0; q < n; ++q) c.add(GateKind::X, q);
    for (unsigned q = 0; q < n; ++q) c.add(GateKind::H, q);
  }
  return c;
}

/// sin^2((2k+1) asin(2^{-n/2})), the noiseless success probability.
inline double grover_closed_form(unsigned n, std::size_t iterations) {
  const double theta = std::asin(std::exp2(-0.5 * n));
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return s * s;
}

/// floor(pi / (4 asin(2^{-n/2}))), the iteration count maximising success.
inline std::size_t optimal_grover_iterations(unsigned n) {
  const double theta = std::asin(std::exp2(-0.5 * n));
  return static_cast<std::size_t>(std::floor(std::numbers::pi / (4.0 * theta)));
}

/// Trajectory mean of |<marked|psi>|^2.
inline FidelityEstimate grover_success_probability(unsigned n, std::string_view marked,
                                                   std::size_t iterations, const NoiseModel &noise,
                                                   std::uint64_t n_traj, std::uint64_t seed,
                                                   unsigned threads = 0) {
  const Circuit c = build_grover_circuit(n, marked, iterations);
  const std::uint64_t target = bitstring_index(marked);
  auto metric = [target](const QuantumState &s) { return s.probability(target); };
  const double noiseless = metric(run_ideal(c));
  return trajectory_average(c, noise, n_traj, seed, metric, noiseless, threads);
}

}  // namespace qfeas::sim
