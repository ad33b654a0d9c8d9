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

#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include "qfeas/errors.hpp"
#include "qfeas/sim/circuit.hpp"
#include "qfeas/sim/philox.hpp"

namespace qfeas::sim {

inline constexpr std::uint32_t kCircuitStream = 1;

namespace detail {

// One layer: a gate from {H, T, RX(pi/2)} on every qubit, then CZ on the
// first `max_pairs` pairs of a random perfect-as-possible pairing.
inline std::size_t add_random_layer(Circuit &c, PhiloxStream &rng, std::size_t max_pairs) {
  const unsigned n = c.n_qubits();
  for (unsigned q = 0; q < n; ++q) {
    switch (rng.below(3)) {
      case 0: c.add(GateKind::H, q); break;
      case 1: c.add(GateKind::T, q); break;
      default: c.add(GateKind::RX, q, std::numbers::pi / 2.0); break;
    }
  }
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  for (unsigned i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::size_t pairs = 0;
  for (unsigned i = 0; i + 1 < n && pairs < max_pairs; i += 2, ++pairs) {
    c.add(GateKind::CZ, perm[i], perm[i + 1]);
  }
  return pairs;
}

}  // namespace detail

/// `depth` layers of random one-qubit gates followed by CZs on a random
/// non-overlapping pairing. Deterministic in (n, depth, seed).
inline Circuit random_circuit(unsigned n, std::size_t depth, std::uint64_t seed) {
  if (n < 2) throw BadInput("random_circuit needs n >= 2");
  if (depth < 1) throw BadInput("random_circuit needs depth >= 1");
  Circuit c(n);
  PhiloxStream rng(seed, kCircuitStream);
  for (std::size_t d = 0; d < depth; ++d) detail::add_random_layer(c, rng, n / 2);
  return c;
}

/// Random layers as above until exactly `n2` CZ gates have been placed; the
/// last layer's pairing is truncated when n2 is not a multiple of n/2.
inline Circuit random_circuit_with_two_qubit_count(unsigned n, std::size_t n2, std::uint64_t seed) {
  if (n < 2) throw BadInput("random_circuit needs n >= 2");
  if (n2 < 1) throw BadInput("need at least one two-qubit gate");
  Circuit c(n);
  PhiloxStream rng(seed, kCircuitStream);
  std::size_t placed = 0;
  while (placed < n2) placed += detail::add_random_layer(c, rng, n2 - placed);
  return c;
}

}  // namespace qfeas::sim
