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
#include <optional>
#include <string>
#include <string_view>

#include "qfeas/errors.hpp"
#include "qfeas/fidelity.hpp"

namespace qfeas {

/// "Reasonably high probability" of success: F* = 1/e makes the required rate 1/N.
inline const double kDefaultTargetFidelity = std::exp(-1.0);
inline constexpr double kChemistryTargetFidelity = 0.999;
inline constexpr double kSecondsPerYear = 365.25 * 24.0 * 3600.0;

enum class AlgorithmKind { shor, grover, chemistry };

inline std::string_view to_string(AlgorithmKind k) {
  switch (k) {
    case AlgorithmKind::shor: return "shor";
    case AlgorithmKind::grover: return "grover";
    case AlgorithmKind::chemistry: return "chemistry";
  }
  return "?";
}

inline std::optional<AlgorithmKind> algorithm_kind_from_string(std::string_view s) {
  if (s == "shor") return AlgorithmKind::shor;
  if (s == "grover") return AlgorithmKind::grover;
  if (s == "chemistry") return AlgorithmKind::chemistry;
  return std::nullopt;
}

inline double default_target_fidelity(AlgorithmKind k) {
  return k == AlgorithmKind::chemistry ? kChemistryTargetFidelity : kDefaultTargetFidelity;
}

struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::shor;
  /// Bits for Shor, search-register qubits for Grover, electrons for chemistry.
  double size_n = 1;
  double target_fidelity = kDefaultTargetFidelity;
  /// Multiplies the n^6 chemistry count; the scaling law carries no prefactor.
  double chemistry_prefactor = 1.0;
  /// Extra two-qubit gates from limited connectivity; 1 means all-to-all.
  double routing_overhead = 1.0;
  /// Logical qubits held by the computation; 0 means size_n.
  double logical_qubits = 0.0;

  static AlgorithmSpec make(AlgorithmKind kind, double size_n) {
    AlgorithmSpec s;
    s.kind = kind;
    s.size_n = size_n;
    s.target_fidelity = default_target_fidelity(kind);
    return s;
  }

  double logical_qubit_count() const { return logical_qubits > 0.0 ? logical_qubits : size_n; }

  void validate() const {
    const double min_n = kind == AlgorithmKind::grover ? 1.0 : 2.0;
    if (!(size_n >= min_n) || !std::isfinite(size_n) || std::floor(size_n) != size_n) {
      throw ValidationError("size_n must be an integer >= " + std::to_string(int(min_n)) + " for " +
                            std::string(to_string(kind)));
    }
    if (!(target_fidelity > 0.0 && target_fidelity < 1.0)) {
      throw ValidationError("target_fidelity out of (0,1)");
    }
    if (!(chemistry_prefactor > 0.0) || !std::isfinite(chemistry_prefactor)) {
      throw ValidationError("chemistry_prefactor must be > 0");
    }
    if (!(routing_overhead >= 1.0) || !std::isfinite(routing_overhead)) {
      throw ValidationError("routing_overhead must be >= 1");
    }
    if (!(logical_qubits >= 0.0) || !std::isfinite(logical_qubits)) {
      throw ValidationError("logical_qubits must be >= 0");
    }
  }

  bool operator==(const AlgorithmSpec &) const = default;
};

/// N2 ~ 10 n^3 for factoring an n-bit number.
inline double shor_two_qubit_count(double n_bits) { return 10.0 * n_bits * n_bits * n_bits; }

/// N2 ~ n * sqrt(2^n): sqrt(2^n) oracle calls, each linear in n.
inline double grover_two_qubit_count(double n_bits) { return n_bits * std::exp2(n_bits / 2.0); }

/// N2 ~ n^6 (triple excitations in the ansatz).
inline double chemistry_two_qubit_count(double n_electrons, double prefactor = 1.0) {
  const double n3 = n_electrons * n_electrons * n_electrons;
  return prefactor * n3 * n3;
}

inline double two_qubit_count(const AlgorithmSpec &spec) {
  double n2 = 0.0;
  switch (spec.kind) {
    case AlgorithmKind::shor: n2 = shor_two_qubit_count(spec.size_n); break;
    case AlgorithmKind::grover: n2 = grover_two_qubit_count(spec.size_n); break;
    case AlgorithmKind::chemistry:
      n2 = chemistry_two_qubit_count(spec.size_n, spec.chemistry_prefactor);
      break;
  }
  return n2 * spec.routing_overhead;
}

enum class Verdict { feasible, infeasible };

inline std::string_view to_string(Verdict v) {
  return v == Verdict::feasible ? "feasible" : "infeasible";
}

struct FeasibilityReport {
  double two_qubit_count = 0.0;
  /// ln F on the given hardware, two-qubit channel only.
  double achieved_log_fidelity = 0.0;
  double required_eps2 = 0.0;
  /// hardware eps2 / required eps2; > 1 means the hardware falls short.
  double gap_factor = 0.0;
  double sequential_runtime = 0.0;
  Verdict verdict = Verdict::infeasible;

  bool operator==(const FeasibilityReport &) const = default;
};

inline FeasibilityReport assess(const AlgorithmSpec &spec, const HardwareProfile &hw) {
  spec.validate();
  hw.validate();
  FeasibilityReport r;
  r.two_qubit_count = two_qubit_count(spec);
  const OpCounts counts{0.0, 0.0, r.two_qubit_count};
  r.achieved_log_fidelity = log_fidelity(ErrorBudget{0.0, 0.0, hw.budget.eps2}, counts);
  r.required_eps2 = required_error_rate(counts, spec.target_fidelity, Channel::two_qubit);
  r.gap_factor = hw.budget.eps2 / r.required_eps2;
  r.sequential_runtime = r.two_qubit_count * hw.gate_time_2q;
  r.verdict = hw.budget.eps2 <= r.required_eps2 ? Verdict::feasible : Verdict::infeasible;
  return r;
}

/// Wall time for Grover with every two-qubit gate executed in sequence.
inline double grover_sequential_runtime(double n_bits, double gate_time_2q) {
  if (!(gate_time_2q > 0.0)) throw ValidationError("gate_time_2q must be > 0");
  if (!(n_bits >= 1.0)) throw ValidationError("n_bits must be >= 1");
  return grover_two_qubit_count(n_bits) * gate_time_2q;
}

struct Throughput {
  double bits_per_second = 0.0;
  /// log10(reference / computed), both in bits/s.
  double orders_below_reference = 0.0;
};

inline constexpr double kLaptopBytesPerSecond = 1e9;

inline constexpr double kDefaultBitsOut = 20.0;
inline constexpr double kDefaultThroughputRuntime = 3600.0;

inline Throughput info_throughput(double bits_out = kDefaultBitsOut,
                                  double runtime = kDefaultThroughputRuntime,
                                  double reference_bytes_per_second = kLaptopBytesPerSecond) {
  if (!(runtime > 0.0)) throw ValidationError("runtime must be > 0");
  Throughput t;
  t.bits_per_second = bits_out / runtime;
  t.orders_below_reference = std::log10(8.0 * reference_bytes_per_second / t.bits_per_second);
  return t;
}

}  // namespace qfeas
