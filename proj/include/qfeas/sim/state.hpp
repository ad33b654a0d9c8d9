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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "qfeas/errors.hpp"
#include "qfeas/sim/circuit.hpp"

namespace qfeas::sim {

using Amplitude = std::complex<double>;

/// Pure state on n qubits. Basis index bit q holds qubit q (qubit 0 is the
/// least significant bit).
class QuantumState {
 public:
  /// |0...0>
  explicit QuantumState(unsigned n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
      throw BadInput("register size must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    amps_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
  }

  static QuantumState basis(unsigned n_qubits, std::uint64_t index) {
    QuantumState s(n_qubits);
    if (index >= s.dimension()) throw BadInput("basis index outside register");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
  }

  static QuantumState from_amplitudes(std::vector<Amplitude> amps) {
    const std::size_t dim = amps.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) throw BadInput("amplitude count must be a power of two");
    unsigned n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    QuantumState s(n);
    s.amps_ = std::move(amps);
    return s;
  }

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  const Amplitude &operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const {
    double s = 0.0;
    for (const Amplitude &a : amps_) s += std::norm(a);
    return s;
  }

  double probability(std::uint64_t index) const { return std::norm(amps_.at(index)); }

  bool operator==(const QuantumState &) const = default;

 private:
  unsigned n_qubits_;
  std::vector<Amplitude> amps_;
};

/// <a|b>
inline Amplitude inner_product(const QuantumState &a, const QuantumState &b) {
  if (a.dimension() != b.dimension()) throw BadInput("state dimensions differ");
  Amplitude s{0.0, 0.0};
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

/// |<a|b>|^2
inline double overlap(const QuantumState &a, const QuantumState &b) {
  return std::norm(inner_product(a, b));
}

namespace detail {

template <class F>
void for_each_pair(std::span<Amplitude> amps, unsigned q, F &&f) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t base = 0; base < amps.size(); base += 2 * bit) {
    for (std::size_t i = base; i < base + bit; ++i) f(amps[i], amps[i + bit]);
  }
}

inline void apply_matrix(std::span<Amplitude> amps, unsigned q, Amplitude m00, Amplitude m01,
                         Amplitude m10, Amplitude m11) {
  for_each_pair(amps, q, [&](Amplitude &a0, Amplitude &a1) {
    const Amplitude b0 = m00 * a0 + m01 * a1;
    const Amplitude b1 = m10 * a0 + m11 * a1;
    a0 = b0;
    a1 = b1;
  });
}

inline void apply_diagonal(std::span<Amplitude> amps, unsigned q, Amplitude d0, Amplitude d1) {
  for_each_pair(amps, q, [&](Amplitude &a0, Amplitude &a1) {
    a0 *= d0;
    a1 *= d1;
  });
}

}  // namespace detail

/// In-place gate application. IDLE is the identity.
inline void apply(QuantumState &state, const Gate &g) {
  check_targets(g, state.n_qubits());
  auto amps = state.amplitudes();
  const unsigned q = g.targets[0];
  const Amplitude I{0.0, 1.0};
  switch (g.kind) {
    case GateKind::IDLE:
      break;
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      detail::for_each_pair(amps, q, [r](Amplitude &a0, Amplitude &a1) {
        const Amplitude s = a0 + a1, d = a0 - a1;
        a0 = r * s;
        a1 = r * d;
      });
      break;
    }
    case GateKind::X:
      detail::for_each_pair(amps, q, [](Amplitude &a0, Amplitude &a1) { std::swap(a0, a1); });
      break;
    case GateKind::Y:
      // Y = [[0, -i], [i, 0]]
      detail::for_each_pair(amps, q, [I](Amplitude &a0, Amplitude &a1) {
        const Amplitude b0 = -I * a1;
        a1 = I * a0;
        a0 = b0;
      });
      break;
    case GateKind::Z:
      detail::for_each_pair(amps, q, [](Amplitude &, Amplitude &a1) { a1 = -a1; });
      break;
    case GateKind::S:
      detail::for_each_pair(amps, q, [I](Amplitude &, Amplitude &a1) { a1 *= I; });
      break;
    case GateKind::T:
      detail::apply_diagonal(amps, q, 1.0, std::polar(1.0, std::numbers::pi / 4.0));
      break;
    case GateKind::RZ:
      detail::apply_diagonal(amps, q, std::polar(1.0, -g.theta / 2.0),
                             std::polar(1.0, g.theta / 2.0));
      break;
    case GateKind::RX: {
      const double c = std::cos(g.theta / 2.0), s = std::sin(g.theta / 2.0);
      detail::apply_matrix(amps, q, c, -I * s, -I * s, c);
      break;
    }
    case GateKind::CZ: {
      const std::size_t mask = (std::size_t{1} << g.targets[0]) | (std::size_t{1} << g.targets[1]);
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) amps[i] = -amps[i];
      }
      break;
    }
    case GateKind::CNOT: {
      const std::size_t c = std::size_t{1} << g.targets[0];
      const std::size_t t = std::size_t{1} << g.targets[1];
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & c) && !(i & t)) std::swap(amps[i], amps[i | t]);
      }
      break;
    }
  }
}

inline QuantumState apply_gate(QuantumState state, const Gate &g) {
  apply(state, g);
  return state;
}

inline QuantumState run_ideal(const Circuit &circuit, QuantumState state) {
  if (circuit.n_qubits() != state.n_qubits()) throw BadInput("circuit and state sizes differ");
  for (const Gate &g : circuit.gates()) apply(state, g);
  return state;
}

inline QuantumState run_ideal(const Circuit &circuit) {
  return run_ideal(circuit, QuantumState(circuit.n_qubits()));
}

}  // namespace qfeas::sim
