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

// Exponential fidelity law: F = exp(-(eps0*N0 + eps1*N1 + eps2*N2)).
//
// All arithmetic happens on the (non-positive) log of the fidelity; the
// exponential is only taken when a probability is presented. Exponents of
// order 1e17 occur for large Grover instances.

#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "qfeas/errors.hpp"

namespace qfeas {

/// Error probability per operation for each channel.
struct ErrorBudget {
  double eps0 = 0.0;  ///< per qubit idle step
  double eps1 = 0.0;  ///< per one-qubit gate
  double eps2 = 0.0;  ///< per two-qubit gate

  void validate() const {
    check_rate(eps0, "eps0");
    check_rate(eps1, "eps1");
    check_rate(eps2, "eps2");
  }

  static void check_rate(double r, const char *name) {
    if (!std::isfinite(r) || r < 0.0 || r >= 1.0) {
      throw ValidationError(std::string(name) + ": rate out of [0,1)");
    }
  }

  bool operator==(const ErrorBudget &) const = default;
};

/// Operation tallies. Counts are carried as doubles: exact below 2^53, and
/// relative error 2^-53 (about 1.1e-16) above that.
struct OpCounts {
  double n0 = 0.0;  ///< idle slots (qubit x time step)
  double n1 = 0.0;  ///< one-qubit gates
  double n2 = 0.0;  ///< two-qubit gates

  void validate() const {
    if (!(n0 >= 0.0 && n1 >= 0.0 && n2 >= 0.0) || !std::isfinite(n0 + n1 + n2)) {
      throw ValidationError("operation counts must be finite and non-negative");
    }
  }

  OpCounts &operator+=(const OpCounts &o) {
    n0 += o.n0;
    n1 += o.n1;
    n2 += o.n2;
    return *this;
  }
  friend OpCounts operator+(OpCounts a, const OpCounts &b) { return a += b; }
  bool operator==(const OpCounts &) const = default;
};

enum class Channel { idle, one_qubit, two_qubit };

inline const char *channel_name(Channel c) {
  switch (c) {
    case Channel::idle: return "idle";
    case Channel::one_qubit: return "one_qubit";
    case Channel::two_qubit: return "two_qubit";
  }
  return "?";
}

inline double count_of(const OpCounts &c, Channel ch) {
  switch (ch) {
    case Channel::idle: return c.n0;
    case Channel::one_qubit: return c.n1;
    case Channel::two_qubit: return c.n2;
  }
  return 0.0;
}

/// Physical platform parameters. Times in seconds, area in m^2, power in W.
struct HardwareProfile {
  std::string name;
  ErrorBudget budget;
  double t2 = 1e-4;
  double gate_time_1q = 1e-8;
  double gate_time_2q = 1e-7;
  double cycle_time = 1e-6;
  /// Seconds of computation added per extra qubit; a = tau / T2.
  double time_per_qubit_layer = 1e-6;
  double yield_p = 1.0;
  double area_per_qubit = 1e-6;
  double dissipation_per_qubit = 1e-9;

  void validate() const {
    budget.validate();
    auto positive = [](double v, const char *what) {
      if (!std::isfinite(v) || v <= 0.0) throw ValidationError(std::string(what) + " must be > 0");
    };
    positive(t2, "t2");
    positive(gate_time_1q, "gate_time_1q");
    positive(gate_time_2q, "gate_time_2q");
    positive(cycle_time, "cycle_time");
    positive(time_per_qubit_layer, "time_per_qubit_layer");
    if (!(yield_p >= 0.0 && yield_p <= 1.0)) throw ValidationError("yield_p out of [0,1]");
    if (!(area_per_qubit >= 0.0) || !std::isfinite(area_per_qubit))
      throw ValidationError("area_per_qubit must be >= 0");
    if (!(dissipation_per_qubit >= 0.0) || !std::isfinite(dissipation_per_qubit))
      throw ValidationError("dissipation_per_qubit must be >= 0");
  }

  bool operator==(const HardwareProfile &) const = default;
};

/// A probability carried together with its natural log. `underflow` is set
/// when the log is finite but exp() rounds to zero.
struct LogProbability {
  double value = 1.0;
  double log_value = 0.0;
  bool underflow = false;

  static LogProbability from_log(double log_value) {
    LogProbability p;
    p.log_value = log_value;
    p.value = std::exp(log_value);
    p.underflow = p.value == 0.0 && std::isfinite(log_value);
    return p;
  }
};

inline double log_fidelity(const ErrorBudget &b, const OpCounts &c) {
  return -(b.eps0 * c.n0 + b.eps1 * c.n1 + b.eps2 * c.n2);
}

inline LogProbability fidelity(const ErrorBudget &b, const OpCounts &c) {
  return LogProbability::from_log(log_fidelity(b, c));
}

/// Error rate on `channel` that yields `target_fidelity` when every other
/// channel is error-free: -ln(F*) / N.
inline double required_error_rate(const OpCounts &c, double target_fidelity, Channel channel) {
  if (!(target_fidelity > 0.0 && target_fidelity < 1.0)) {
    throw ValidationError("target fidelity out of (0,1)");
  }
  const double n = count_of(c, channel);
  if (n <= 0.0) {
    throw ZeroCount(std::string("no operations on channel ") + channel_name(channel));
  }
  // target - 1 is exact for target >= 0.5, so log1p keeps full precision near 1.
  const double log_target =
      target_fidelity >= 0.5 ? std::log1p(target_fidelity - 1.0) : std::log(target_fidelity);
  return -log_target / n;
}

/// eps0*N0 approximated by n*T/T2.
inline double idle_error_exponent(double n_qubits, double duration, double t2) {
  if (!(t2 > 0.0)) throw ValidationError("t2 must be > 0");
  if (!(duration >= 0.0)) throw ValidationError("duration must be >= 0");
  return n_qubits * duration / t2;
}

/// a*n^2 with a = tau/T2, from T growing linearly with n.
inline double quadratic_scaling_exponent(double n_qubits, const HardwareProfile &hw) {
  const double a = hw.time_per_qubit_layer / hw.t2;
  return a * n_qubits * n_qubits;
}

}  // namespace qfeas
