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

// JSON encodings of the domain types. Key order is fixed (ordered_json), so
// identical values always serialise to identical bytes, and doubles are
// written in shortest round-trip form.

#pragma once

#include <string>

#include "json.hpp"
#include "qfeas/algorithms.hpp"
#include "qfeas/engineering.hpp"
#include "qfeas/fidelity.hpp"
#include "qfeas/qec.hpp"
#include "qfeas/scenario.hpp"
#include "qfeas/sim/fit.hpp"
#include "qfeas/sim/noise.hpp"

namespace qfeas {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const ErrorBudget &b) {
  return ojson{{"eps0", b.eps0}, {"eps1", b.eps1}, {"eps2", b.eps2}};
}

inline ojson to_json(const OpCounts &c) { return ojson{{"n0", c.n0}, {"n1", c.n1}, {"n2", c.n2}}; }

inline ojson to_json(const HardwareProfile &hw) {
  return ojson{{"name", hw.name},
               {"eps0", hw.budget.eps0},
               {"eps1", hw.budget.eps1},
               {"eps2", hw.budget.eps2},
               {"t2", hw.t2},
               {"gate_time_1q", hw.gate_time_1q},
               {"gate_time_2q", hw.gate_time_2q},
               {"cycle_time", hw.cycle_time},
               {"time_per_qubit_layer", hw.time_per_qubit_layer},
               {"yield_p", hw.yield_p},
               {"area_per_qubit", hw.area_per_qubit},
               {"dissipation_per_qubit", hw.dissipation_per_qubit}};
}

inline ojson to_json(const AlgorithmSpec &s) {
  return ojson{{"kind", std::string(to_string(s.kind))},
               {"size_n", s.size_n},
               {"target_fidelity", s.target_fidelity},
               {"chemistry_prefactor", s.chemistry_prefactor},
               {"routing_overhead", s.routing_overhead},
               {"logical_qubits", s.logical_qubits}};
}

inline ojson to_json(const QecCode &c) {
  return ojson{{"eps_th", c.eps_th},
               {"eps_nc", c.eps_nc},
               {"nc_max", c.nc_max},
               {"ops_per_logical_gate", c.ops_per_logical_gate},
               {"factory_overhead", c.factory_overhead},
               {"correctable_prefactor", c.correctable_prefactor},
               {"floor_prefactor", c.floor_prefactor}};
}

inline ojson to_json(const CryoProfile &c) {
  return ojson{{"cooling_power_cold", c.cooling_power_cold},
               {"cooling_power_4k", c.cooling_power_4k},
               {"wall_power_per_fridge", c.wall_power_per_fridge}};
}

inline ojson to_json(const EngineeringOptions &e) {
  return ojson{{"ops_per_bit", e.ops_per_bit},
               {"lines_per_qubit", e.lines_per_qubit},
               {"line_budget", e.line_budget},
               {"wiring_sensitivity", e.wiring_sensitivity}};
}

inline ojson to_json(const SimulationBlock &s) {
  ojson j{{"mode", std::string(to_string(s.mode))},
          {"n", s.n},
          {"depth", s.depth},
          {"two_qubit_counts", s.two_qubit_counts}};
  if (s.iterations) j["iterations"] = *s.iterations;
  j["marked"] = s.marked;
  ojson noise = ojson::object();
  if (s.noise.eps0) noise["eps0"] = *s.noise.eps0;
  if (s.noise.eps1) noise["eps1"] = *s.noise.eps1;
  if (s.noise.eps2) noise["eps2"] = *s.noise.eps2;
  j["noise"] = noise;
  j["eps2_sweep"] = s.eps2_sweep;
  j["success_threshold"] = s.success_threshold;
  j["n_traj"] = s.n_traj;
  j["seed"] = s.seed;
  j["circuit_seed"] = s.circuit_seed;
  return j;
}

/// A document that parse_scenario() reads back to an equal Scenario.
inline ojson to_json(const Scenario &s) {
  ojson j{{"hardware", to_json(s.hardware)}};
  if (s.algorithm) j["algorithm"] = to_json(*s.algorithm);
  j["qec"] = to_json(s.qec);
  j["cryo"] = to_json(s.cryo);
  j["engineering"] = to_json(s.engineering);
  if (s.simulation) j["simulation"] = to_json(*s.simulation);
  return j;
}

inline ojson to_json(const FeasibilityReport &r) {
  return ojson{{"two_qubit_count", r.two_qubit_count},
               {"achieved_log_fidelity", r.achieved_log_fidelity},
               {"achieved_fidelity", LogProbability::from_log(r.achieved_log_fidelity).value},
               {"required_eps2", r.required_eps2},
               {"gap_factor", r.gap_factor},
               {"sequential_runtime", r.sequential_runtime},
               {"verdict", std::string(to_string(r.verdict))}};
}

inline FeasibilityReport feasibility_from_json(const ojson &j) {
  FeasibilityReport r;
  r.two_qubit_count = j.at("two_qubit_count").get<double>();
  r.achieved_log_fidelity = j.at("achieved_log_fidelity").get<double>();
  r.required_eps2 = j.at("required_eps2").get<double>();
  r.gap_factor = j.at("gap_factor").get<double>();
  r.sequential_runtime = j.at("sequential_runtime").get<double>();
  r.verdict = j.at("verdict").get<std::string>() == "feasible" ? Verdict::feasible : Verdict::infeasible;
  return r;
}

inline ojson to_json(const QecPlan &p) {
  return ojson{{"n_c", p.n_c}, {"eps_L", p.eps_L}, {"n_total", p.n_total}, {"floor", p.floor}};
}

inline ojson to_json(const LogProbability &p) {
  return ojson{{"value", p.value}, {"log_value", p.log_value}, {"underflow", p.underflow}};
}

inline ojson to_json(const ScalingReport &r) {
  ojson wiring = ojson::array();
  for (const auto &w : r.wiring_sensitivity) {
    wiring.push_back(ojson{{"lines_per_qubit", w.lines_per_qubit},
                           {"wire_count", w.wire_count},
                           {"over_budget", w.over_budget}});
  }
  return ojson{{"logical_qubits", r.logical_qubits},
               {"target_logical_error", r.target_logical_error},
               {"qec", to_json(r.qec)},
               {"logical_runtime", r.logical_runtime},
               {"syndrome_rate", r.syndrome_rate},
               {"syndrome_ethernet_links", r.syndrome_ethernet_links},
               {"decoder_ops", r.decoder_ops},
               {"yield_probability", to_json(r.yield_probability)},
               {"chip_area", r.chip_area},
               {"fridge_count", r.fridge_count},
               {"total_wall_power", r.total_wall_power},
               {"cooling_load", r.cooling_load},
               {"wire_count", r.wire_count},
               {"wiring_sensitivity", wiring},
               {"notes", r.notes}};
}

/// Inverse of to_json(ScalingReport); `feasibility` is carried separately.
inline ScalingReport scaling_from_json(const ojson &j, const FeasibilityReport &feasibility) {
  ScalingReport r;
  r.feasibility = feasibility;
  r.logical_qubits = j.at("logical_qubits").get<double>();
  r.target_logical_error = j.at("target_logical_error").get<double>();
  const ojson &q = j.at("qec");
  r.qec.n_c = q.at("n_c").get<std::uint64_t>();
  r.qec.eps_L = q.at("eps_L").get<double>();
  r.qec.n_total = q.at("n_total").get<double>();
  r.qec.floor = q.at("floor").get<double>();
  r.logical_runtime = j.at("logical_runtime").get<double>();
  r.syndrome_rate = j.at("syndrome_rate").get<double>();
  r.syndrome_ethernet_links = j.at("syndrome_ethernet_links").get<double>();
  r.decoder_ops = j.at("decoder_ops").get<double>();
  const ojson &y = j.at("yield_probability");
  r.yield_probability.value = y.at("value").get<double>();
  r.yield_probability.log_value = y.at("log_value").get<double>();
  r.yield_probability.underflow = y.at("underflow").get<bool>();
  r.chip_area = j.at("chip_area").get<double>();
  r.fridge_count = j.at("fridge_count").get<double>();
  r.total_wall_power = j.at("total_wall_power").get<double>();
  r.cooling_load = j.at("cooling_load").get<double>();
  r.wire_count = j.at("wire_count").get<double>();
  for (const auto &w : j.at("wiring_sensitivity")) {
    r.wiring_sensitivity.push_back({w.at("lines_per_qubit").get<double>(),
                                    w.at("wire_count").get<double>(),
                                    w.at("over_budget").get<bool>()});
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

inline ojson to_json(const sim::FidelityEstimate &e) {
  return ojson{{"mean", e.mean},
               {"std_error", e.std_error},
               {"n_trajectories", e.n_trajectories},
               {"seed", e.seed}};
}

inline ojson to_json(const sim::RateFit &f) {
  static constexpr const char *names[3] = {"idle", "one_qubit", "two_qubit"};
  ojson ch = ojson::object();
  for (std::size_t c = 0; c < 3; ++c) {
    const auto &cf = f.channels[c];
    if (!cf.fitted) continue;
    ch[names[c]] = ojson{{"rate", cf.rate},
                         {"std_error", cf.std_error},
                         {"ci_low", cf.ci_low},
                         {"ci_high", cf.ci_high}};
  }
  return ojson{{"rates", to_json(f.rates)},
               {"channels", ch},
               {"confidence", f.confidence},
               {"dof", f.dof},
               {"weighted", f.weighted},
               {"rss", f.rss}};
}

}  // namespace qfeas
