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
#include <cstdio>
#include <string>
#include <vector>

#include "qfeas/algorithms.hpp"
#include "qfeas/errors.hpp"
#include "qfeas/fidelity.hpp"
#include "qfeas/qec.hpp"

namespace qfeas {

/// Dilution refrigerator budget. Defaults: 500 uW at 100 mK, ~1 W at 4 K,
/// ~10 kW of electricity per fridge.
struct CryoProfile {
  double cooling_power_cold = 500e-6;
  double cooling_power_4k = 1.0;
  double wall_power_per_fridge = 1e4;

  void validate() const {
    if (!(cooling_power_cold > 0.0) || !(cooling_power_4k > 0.0) || !(wall_power_per_fridge > 0.0))
      throw ValidationError("cryo powers must be > 0");
  }

  bool operator==(const CryoProfile &) const = default;
};

/// One syndrome bit per physical qubit per cycle.
inline double syndrome_data_rate(double n_phys, double cycle_time) {
  if (!(cycle_time > 0.0)) throw ValidationError("cycle_time must be > 0");
  return n_phys / cycle_time;
}

inline constexpr double kGigabitEthernetBitsPerSecond = 1e9;

inline double decoder_compute(double syndrome_rate, double ops_per_bit) {
  if (!(syndrome_rate >= 0.0) || !(ops_per_bit >= 0.0)) throw ValidationError("inputs must be >= 0");
  return syndrome_rate * ops_per_bit;
}

/// p^n_total, evaluated as exp(n_total * ln p).
inline LogProbability fabrication_yield(double p, double n_total) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("yield p out of [0,1]");
  if (!(n_total >= 0.0)) throw ValidationError("n_total must be >= 0");
  if (n_total == 0.0) return LogProbability::from_log(0.0);
  return LogProbability::from_log(n_total * std::log(p));
}

inline double chip_area(double n_total, double area_per_qubit) {
  if (!(n_total >= 0.0) || !(area_per_qubit >= 0.0)) throw ValidationError("inputs must be >= 0");
  return n_total * area_per_qubit;
}

struct CryoBudget {
  double fridge_count = 0.0;
  double total_wall_power = 0.0;
};

/// At least one fridge whenever there is a chip to cool.
inline CryoBudget cryo_budget(double n_total, double dissipation_per_qubit, const CryoProfile &cryo) {
  cryo.validate();
  if (!(n_total >= 0.0) || !(dissipation_per_qubit >= 0.0))
    throw ValidationError("inputs must be >= 0");
  CryoBudget b;
  if (n_total > 0.0) {
    b.fridge_count =
        std::max(1.0, std::ceil(n_total * dissipation_per_qubit / cryo.cooling_power_cold));
  }
  b.total_wall_power = b.fridge_count * cryo.wall_power_per_fridge;
  return b;
}

inline double wiring_count(double n_total, double lines_per_qubit) {
  if (!(n_total >= 0.0) || !(lines_per_qubit >= 0.0)) throw ValidationError("inputs must be >= 0");
  return n_total * lines_per_qubit;
}

struct EngineeringOptions {
  double ops_per_bit = 1.0;
  double lines_per_qubit = 1.0;
  /// Control lines considered buildable; above this the wiring budget is flagged.
  double line_budget = 1e4;
  /// Lines-per-qubit values for the wiring sensitivity rows.
  std::vector<double> wiring_sensitivity{1.0, 2.0, 4.0};

  void validate() const {
    if (!(ops_per_bit >= 0.0) || !(lines_per_qubit >= 0.0) || !(line_budget >= 0.0))
      throw ValidationError("engineering options must be >= 0");
  }

  bool operator==(const EngineeringOptions &) const = default;
};

struct WiringRow {
  double lines_per_qubit = 0.0;
  double wire_count = 0.0;
  bool over_budget = false;
};

struct ScalingReport {
  FeasibilityReport feasibility;
  double logical_qubits = 0.0;
  /// Required eps_L per logical operation: -ln(F*) / N2.
  double target_logical_error = 0.0;
  QecPlan qec;
  double logical_runtime = 0.0;
  double syndrome_rate = 0.0;
  double syndrome_ethernet_links = 0.0;
  double decoder_ops = 0.0;
  LogProbability yield_probability;
  double chip_area = 0.0;
  double fridge_count = 0.0;
  double total_wall_power = 0.0;
  double cooling_load = 0.0;
  double wire_count = 0.0;
  std::vector<WiringRow> wiring_sensitivity;
  std::vector<std::string> notes;
};

/// Algorithm -> QEC plan -> engineering budgets. Throws AboveThreshold or
/// FloorUnreachable (with the algorithm in the message) when no code plan exists.
inline ScalingReport full_stack_report(const AlgorithmSpec &spec, const HardwareProfile &hw,
                                       const QecCode &code, const CryoProfile &cryo,
                                       const EngineeringOptions &opt = {}) {
  spec.validate();
  hw.validate();
  code.validate();
  cryo.validate();
  opt.validate();

  ScalingReport r;
  r.feasibility = assess(spec, hw);
  r.logical_qubits = spec.logical_qubit_count();
  r.target_logical_error = r.feasibility.required_eps2;

  const std::string context =
      std::string(to_string(spec.kind)) + " n=" + std::to_string(static_cast<long long>(spec.size_n));
  try {
    r.qec = plan_code(hw.budget.eps2, code, r.target_logical_error, r.logical_qubits);
  } catch (const AboveThreshold &e) {
    throw AboveThreshold(context + ": " + e.what());
  } catch (const FloorUnreachable &e) {
    throw FloorUnreachable(context + ": " + e.what());
  }

  const double n_total = r.qec.n_total;
  r.logical_runtime = logical_runtime(r.feasibility.two_qubit_count, code, hw.cycle_time);
  r.syndrome_rate = syndrome_data_rate(n_total, hw.cycle_time);
  r.syndrome_ethernet_links = r.syndrome_rate / kGigabitEthernetBitsPerSecond;
  r.decoder_ops = decoder_compute(r.syndrome_rate, opt.ops_per_bit);
  r.yield_probability = fabrication_yield(hw.yield_p, n_total);
  r.chip_area = chip_area(n_total, hw.area_per_qubit);
  const CryoBudget cb = cryo_budget(n_total, hw.dissipation_per_qubit, cryo);
  r.fridge_count = cb.fridge_count;
  r.total_wall_power = cb.total_wall_power;
  r.cooling_load = n_total * hw.dissipation_per_qubit;
  r.wire_count = wiring_count(n_total, opt.lines_per_qubit);
  for (double lpq : opt.wiring_sensitivity) {
    const double w = wiring_count(n_total, lpq);
    r.wiring_sensitivity.push_back({lpq, w, w > opt.line_budget});
  }

  if (r.feasibility.verdict == Verdict::infeasible) {
    char gap[32];
    std::snprintf(gap, sizeof gap, "%.3e", r.feasibility.gap_factor);
    r.notes.push_back(std::string("physical eps2 exceeds the unencoded requirement by a factor ") + gap);
  }
  if (r.qec.n_c > 1 && r.qec.eps_L <= r.target_logical_error) {
    r.notes.push_back("QEC meets the per-operation target with n_c=" + std::to_string(r.qec.n_c));
  }
  if (r.yield_probability.value < 0.5) r.notes.push_back("fabrication yield below 50%");
  if (r.fridge_count > 1.0) r.notes.push_back("cooling load exceeds a single fridge");
  if (r.wire_count > opt.line_budget) r.notes.push_back("control wiring exceeds the line budget");
  if (r.decoder_ops >= 1e15) r.notes.push_back("syndrome decoding needs petaflop-scale compute");
  return r;
}

}  // namespace qfeas
