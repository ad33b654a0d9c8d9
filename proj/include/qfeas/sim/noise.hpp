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

// Stochastic Pauli noise and Monte-Carlo trajectory averaging.
//
// After every gate, one uniform draw decides whether an error is inserted:
// with probability eps1 a uniform X/Y/Z follows a one-qubit gate, with eps2
// one of the 15 non-identity two-qubit Paulis follows a two-qubit gate, and
// with eps0 a uniform X/Y/Z follows an IDLE slot. The decision draw is made
// for every gate regardless of the rates, so trajectories with the same
// seed stay aligned across a sweep of rates.
//
// Trajectory i of an estimate uses the Philox stream keyed by seed + i.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "qfeas/errors.hpp"
#include "qfeas/fidelity.hpp"
#include "qfeas/sim/circuit.hpp"
#include "qfeas/sim/philox.hpp"
#include "qfeas/sim/state.hpp"

namespace qfeas::sim {

struct NoiseModel {
  ErrorBudget budget;

  double rate_for(GateKind k) const {
    if (k == GateKind::IDLE) return budget.eps0;
    return is_two_qubit(k) ? budget.eps2 : budget.eps1;
  }

  bool operator==(const NoiseModel &) const = default;
};

struct FidelityEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_trajectories = 0;
  std::uint64_t seed = 0;

  bool operator==(const FidelityEstimate &) const = default;
};

/// Pauli inserted after gate `gate_index`. paulis[j] in {0=I,1=X,2=Y,3=Z} acts on targets[j].
struct PauliInsertion {
  std::size_t gate_index = 0;
  std::array<std::uint8_t, 2> paulis{0, 0};
};

/// The insertion events of one trajectory. Consumes the stream in gate order.
inline std::vector<PauliInsertion> sample_insertions(const Circuit &circuit, const NoiseModel &noise,
                                                     std::uint64_t seed) {
  noise.budget.validate();
  PhiloxStream rng(seed);
  std::vector<PauliInsertion> out;
  const auto &gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const GateKind k = gates[i].kind;
    const double u = rng.uniform();
    if (u >= noise.rate_for(k)) continue;
    PauliInsertion ins;
    ins.gate_index = i;
    if (is_two_qubit(k)) {
      const auto idx = rng.below(15) + 1;  // 1..15, never II
      ins.paulis = {static_cast<std::uint8_t>(idx / 4), static_cast<std::uint8_t>(idx % 4)};
    } else {
      ins.paulis = {static_cast<std::uint8_t>(rng.below(3) + 1), 0};
    }
    out.push_back(ins);
  }
  return out;
}

namespace detail {

inline void apply_pauli(QuantumState &s, std::uint8_t p, unsigned q) {
  static constexpr GateKind kinds[] = {GateKind::IDLE, GateKind::X, GateKind::Y, GateKind::Z};
  if (p != 0) apply(s, Gate::one(kinds[p], q));
}

inline QuantumState run_with_insertions(const Circuit &circuit, QuantumState state,
                                        const std::vector<PauliInsertion> &insertions) {
  if (circuit.n_qubits() != state.n_qubits()) throw BadInput("circuit and state sizes differ");
  const auto &gates = circuit.gates();
  auto next = insertions.begin();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    apply(state, gates[i]);
    for (; next != insertions.end() && next->gate_index == i; ++next) {
      for (unsigned j = 0; j < gates[i].arity(); ++j) {
        apply_pauli(state, next->paulis[j], gates[i].targets[j]);
      }
    }
  }
  return state;
}

}  // namespace detail

inline QuantumState run_trajectory(const Circuit &circuit, const NoiseModel &noise,
                                   std::uint64_t seed, QuantumState initial) {
  return detail::run_with_insertions(circuit, std::move(initial),
                                     sample_insertions(circuit, noise, seed));
}

inline QuantumState run_trajectory(const Circuit &circuit, const NoiseModel &noise,
                                   std::uint64_t seed) {
  return run_trajectory(circuit, noise, seed, QuantumState(circuit.n_qubits()));
}

/// Mean and standard error of `metric` over trajectories seed..seed+n_traj-1.
/// A trajectory that drew no insertion is bit-identical to the ideal run and
/// scores `error_free_value` without being simulated. Per-trajectory values
/// are reduced in index order, so the result does not depend on `threads`.
inline FidelityEstimate trajectory_average(const Circuit &circuit, const NoiseModel &noise,
                                           std::uint64_t n_traj, std::uint64_t seed,
                                           const std::function<double(const QuantumState &)> &metric,
                                           double error_free_value, unsigned threads = 0) {
  if (n_traj < 1) throw BadInput("n_traj must be >= 1");
  noise.budget.validate();
  std::vector<double> values(n_traj);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto ins = sample_insertions(circuit, noise, seed + i);
      if (ins.empty()) {
        values[i] = error_free_value;
      } else {
        values[i] = metric(detail::run_with_insertions(circuit, QuantumState(circuit.n_qubits()), ins));
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_traj));
  if (threads <= 1) {
    work(0, n_traj);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (n_traj + threads - 1) / threads;
    for (std::uint64_t b = 0; b < n_traj; b += chunk) {
      pool.emplace_back(work, b, std::min(n_traj, b + chunk));
    }
  }

  // Shifted by the first value: constant data gives an exact mean and zero error.
  const double shift = values[0];
  const double n = static_cast<double>(n_traj);
  double sum = 0.0, sum_sq = 0.0;
  for (double v : values) {
    sum += v - shift;
    sum_sq += (v - shift) * (v - shift);
  }
  FidelityEstimate e;
  e.mean = shift + sum / n;
  const double ss = std::max(0.0, sum_sq - sum * sum / n);
  e.std_error = n_traj > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  e.n_trajectories = n_traj;
  e.seed = seed;
  return e;
}

/// Trajectory-averaged |<psi_ideal|psi_traj>|^2, i.e. the state fidelity
/// <psi|rho|psi> of the noisy channel, starting from |0...0>.
inline FidelityEstimate estimate_fidelity(const Circuit &circuit, const NoiseModel &noise,
                                          std::uint64_t n_traj, std::uint64_t seed,
                                          unsigned threads = 0) {
  const QuantumState ideal = run_ideal(circuit);
  return trajectory_average(
      circuit, noise, n_traj, seed, [&ideal](const QuantumState &s) { return overlap(ideal, s); },
      1.0, threads);
}

}  // namespace qfeas::sim
