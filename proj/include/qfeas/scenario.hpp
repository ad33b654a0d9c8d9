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

// Scenario documents (JSON). Every object is read strictly: a key that is
// not part of the schema is a ParseError, so a misspelt field cannot fall
// back to its default silently. Range violations surface as ValidationError.
//
//   {
//     "hardware": "sc-2020" | {"preset": "sc-2020", "eps2": 1e-4, ...} | {"name": ..., ...},
//     "algorithm": {"kind": "shor", "size_n": 2048, "target_fidelity": 0.3679, ...},
//     "qec": {"eps_th": 0.01, "eps_nc": 0, ...},
//     "cryo": {"cooling_power_cold": 5e-4, ...},
//     "engineering": {"ops_per_bit": 1, "lines_per_qubit": 1, "line_budget": 1e4},
//     "simulation": {"mode": "fidelity" | "fit" | "grover", ...}
//   }

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qfeas/algorithms.hpp"
#include "qfeas/engineering.hpp"
#include "qfeas/errors.hpp"
#include "qfeas/fidelity.hpp"
#include "qfeas/presets.hpp"
#include "qfeas/qec.hpp"
#include "qfeas/sim/circuit.hpp"

namespace qfeas {

enum class SimulationMode { fidelity, fit, grover };

inline std::string_view to_string(SimulationMode m) {
  switch (m) {
    case SimulationMode::fidelity: return "fidelity";
    case SimulationMode::fit: return "fit";
    case SimulationMode::grover: return "grover";
  }
  return "?";
}

struct NoiseOverrides {
  std::optional<double> eps0, eps1, eps2;

  ErrorBudget apply(ErrorBudget b) const {
    if (eps0) b.eps0 = *eps0;
    if (eps1) b.eps1 = *eps1;
    if (eps2) b.eps2 = *eps2;
    return b;
  }

  bool operator==(const NoiseOverrides &) const = default;
};

struct SimulationBlock {
  SimulationMode mode = SimulationMode::fidelity;
  unsigned n = 6;
  /// Random-circuit depth (fidelity mode).
  std::size_t depth = 10;
  /// Two-qubit gate counts of the random circuits (fit mode).
  std::vector<std::size_t> two_qubit_counts{50, 100, 200, 400};
  /// Grover iterations; optimal when unset.
  std::optional<std::size_t> iterations;
  /// Grover marked bitstring, qubit 0 first; all ones when empty.
  std::string marked;
  NoiseOverrides noise;
  /// eps2 values for the Grover degradation sweep.
  std::vector<double> eps2_sweep;
  double success_threshold = 0.15;
  std::uint64_t n_traj = 4000;
  std::uint64_t seed = 42;
  /// Seed of the random circuits, independent of the trajectory seed.
  std::uint64_t circuit_seed = 7;

  void validate() const {
    if (n < 1 || n > sim::kMaxQubits)
      throw ValidationError("simulation.n must be in [1, " + std::to_string(sim::kMaxQubits) + "]");
    if (mode != SimulationMode::grover && n < 2)
      throw ValidationError("simulation.n must be >= 2 for random circuits");
    if (depth < 1) throw ValidationError("simulation.depth must be >= 1");
    if (n_traj < 1) throw ValidationError("simulation.n_traj must be >= 1");
    if (mode == SimulationMode::fit && two_qubit_counts.size() < 2)
      throw ValidationError("simulation.two_qubit_counts needs at least two entries");
    for (auto c : two_qubit_counts)
      if (c < 1) throw ValidationError("simulation.two_qubit_counts entries must be >= 1");
    if (!marked.empty() && marked.size() != n)
      throw ValidationError("simulation.marked must have n bits");
    if (marked.find_first_not_of("01") != std::string::npos)
      throw ValidationError("simulation.marked may only contain 0 and 1");
    for (double e : eps2_sweep) ErrorBudget::check_rate(e, "simulation.eps2_sweep");
    if (!(success_threshold > 0.0 && success_threshold < 1.0))
      throw ValidationError("simulation.success_threshold out of (0,1)");
  }

  std::string marked_or_default() const { return marked.empty() ? std::string(n, '1') : marked; }

  bool operator==(const SimulationBlock &) const = default;
};

struct Scenario {
  HardwareProfile hardware;
  std::optional<AlgorithmSpec> algorithm;
  QecCode qec;
  CryoProfile cryo;
  EngineeringOptions engineering;
  std::optional<SimulationBlock> simulation;

  void validate() const {
    hardware.validate();
    if (algorithm) algorithm->validate();
    qec.validate();
    cryo.validate();
    engineering.validate();
    if (simulation) {
      simulation->validate();
      simulation->noise.apply(hardware.budget).validate();
    }
  }

  bool operator==(const Scenario &) const = default;
};

namespace detail {

using nlohmann::json;

struct TextLocator {
  std::string_view text;

  std::pair<std::size_t, std::size_t> line_col(std::size_t byte) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  /// Position of the first occurrence of "key" in the document.
  std::pair<std::size_t, std::size_t> key(std::string_view k) const {
    const std::string quoted = "\"" + std::string(k) + "\"";
    const auto pos = text.find(quoted);
    if (pos == std::string_view::npos) return {0, 0};
    return line_col(pos);
  }
};

class StrictObject {
 public:
  StrictObject(const json &j, std::string path, const TextLocator &loc,
               std::initializer_list<std::string_view> allowed)
      : j_(j), path_(std::move(path)), loc_(loc) {
    if (!j_.is_object()) throw error(path_ + " must be an object", path_);
    for (const auto &[k, v] : j_.items()) {
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
        const auto [line, col] = loc_.key(k);
        throw ParseError("unknown key '" + k + "' in " + path_, line, col);
      }
    }
  }

  bool has(std::string_view k) const { return j_.contains(std::string(k)); }
  const json &at(std::string_view k) const { return j_.at(std::string(k)); }

  void number(std::string_view k, double &out) const {
    if (!has(k)) return;
    const json &v = at(k);
    if (!v.is_number()) throw error(name(k) + " must be a number", k);
    out = v.get<double>();
  }

  void optional_number(std::string_view k, std::optional<double> &out) const {
    if (!has(k)) return;
    double v = 0.0;
    number(k, v);
    out = v;
  }

  template <class U>
  void count(std::string_view k, U &out) const {
    if (!has(k)) return;
    const json &v = at(k);
    if (!v.is_number_unsigned()) throw error(name(k) + " must be a non-negative integer", k);
    out = static_cast<U>(v.get<std::uint64_t>());
  }

  void string(std::string_view k, std::string &out) const {
    if (!has(k)) return;
    const json &v = at(k);
    if (!v.is_string()) throw error(name(k) + " must be a string", k);
    out = v.get<std::string>();
  }

  std::string name(std::string_view k) const { return path_ + "." + std::string(k); }

  ParseError error(const std::string &what, std::string_view k) const {
    const auto [line, col] = loc_.key(k);
    return ParseError(what, line, col);
  }

 private:
  const json &j_;
  std::string path_;
  const TextLocator &loc_;
};

inline void read_hardware_fields(const StrictObject &o, HardwareProfile &hw) {
  o.string("name", hw.name);
  o.number("eps0", hw.budget.eps0);
  o.number("eps1", hw.budget.eps1);
  o.number("eps2", hw.budget.eps2);
  o.number("t2", hw.t2);
  o.number("gate_time_1q", hw.gate_time_1q);
  o.number("gate_time_2q", hw.gate_time_2q);
  o.number("cycle_time", hw.cycle_time);
  o.number("time_per_qubit_layer", hw.time_per_qubit_layer);
  o.number("yield_p", hw.yield_p);
  o.number("area_per_qubit", hw.area_per_qubit);
  o.number("dissipation_per_qubit", hw.dissipation_per_qubit);
}

inline HardwareProfile read_hardware(const json &j, const TextLocator &loc) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    auto p = find_preset(name);
    if (!p) {
      const auto [line, col] = loc.key(name);
      throw ParseError("unknown hardware preset '" + name + "'", line, col);
    }
    return *p;
  }
  StrictObject o(j, "hardware", loc,
                 {"preset", "name", "eps0", "eps1", "eps2", "t2", "gate_time_1q", "gate_time_2q",
                  "cycle_time", "time_per_qubit_layer", "yield_p", "area_per_qubit",
                  "dissipation_per_qubit"});
  HardwareProfile hw;
  hw.name = "custom";
  if (o.has("preset")) {
    std::string name;
    o.string("preset", name);
    auto p = find_preset(name);
    if (!p) throw o.error("unknown hardware preset '" + name + "'", "preset");
    hw = *p;
  }
  read_hardware_fields(o, hw);
  return hw;
}

inline AlgorithmSpec read_algorithm(const json &j, const TextLocator &loc) {
  StrictObject o(j, "algorithm", loc,
                 {"kind", "size_n", "target_fidelity", "chemistry_prefactor", "routing_overhead",
                  "logical_qubits"});
  if (!o.has("kind")) throw ParseError("algorithm.kind is required");
  if (!o.has("size_n")) throw ParseError("algorithm.size_n is required");
  std::string kind;
  o.string("kind", kind);
  const auto k = algorithm_kind_from_string(kind);
  if (!k) throw o.error("algorithm.kind must be shor, grover or chemistry", "kind");
  AlgorithmSpec s = AlgorithmSpec::make(*k, 1);
  o.number("size_n", s.size_n);
  o.number("target_fidelity", s.target_fidelity);
  o.number("chemistry_prefactor", s.chemistry_prefactor);
  o.number("routing_overhead", s.routing_overhead);
  o.number("logical_qubits", s.logical_qubits);
  return s;
}

inline QecCode read_qec(const json &j, const TextLocator &loc) {
  StrictObject o(j, "qec", loc,
                 {"eps_th", "eps_nc", "nc_max", "ops_per_logical_gate", "factory_overhead",
                  "correctable_prefactor", "floor_prefactor"});
  QecCode c;
  o.number("eps_th", c.eps_th);
  o.number("eps_nc", c.eps_nc);
  o.count("nc_max", c.nc_max);
  o.number("ops_per_logical_gate", c.ops_per_logical_gate);
  o.number("factory_overhead", c.factory_overhead);
  o.number("correctable_prefactor", c.correctable_prefactor);
  o.number("floor_prefactor", c.floor_prefactor);
  return c;
}

inline CryoProfile read_cryo(const json &j, const TextLocator &loc) {
  StrictObject o(j, "cryo", loc, {"cooling_power_cold", "cooling_power_4k", "wall_power_per_fridge"});
  CryoProfile c;
  o.number("cooling_power_cold", c.cooling_power_cold);
  o.number("cooling_power_4k", c.cooling_power_4k);
  o.number("wall_power_per_fridge", c.wall_power_per_fridge);
  return c;
}

inline EngineeringOptions read_engineering(const json &j, const TextLocator &loc) {
  StrictObject o(j, "engineering", loc,
                 {"ops_per_bit", "lines_per_qubit", "line_budget", "wiring_sensitivity"});
  EngineeringOptions e;
  o.number("ops_per_bit", e.ops_per_bit);
  o.number("lines_per_qubit", e.lines_per_qubit);
  o.number("line_budget", e.line_budget);
  if (o.has("wiring_sensitivity")) {
    const json &a = o.at("wiring_sensitivity");
    if (!a.is_array()) throw o.error("engineering.wiring_sensitivity must be an array", "wiring_sensitivity");
    e.wiring_sensitivity.clear();
    for (const auto &v : a) {
      if (!v.is_number()) throw o.error("engineering.wiring_sensitivity entries must be numbers", "wiring_sensitivity");
      e.wiring_sensitivity.push_back(v.get<double>());
    }
  }
  return e;
}

inline SimulationBlock read_simulation(const json &j, const TextLocator &loc) {
  StrictObject o(j, "simulation", loc,
                 {"mode", "n", "depth", "two_qubit_counts", "iterations", "marked", "noise",
                  "eps2_sweep", "success_threshold", "n_traj", "seed", "circuit_seed"});
  SimulationBlock s;
  if (o.has("mode")) {
    std::string m;
    o.string("mode", m);
    if (m == "fidelity") {
      s.mode = SimulationMode::fidelity;
    } else if (m == "fit") {
      s.mode = SimulationMode::fit;
    } else if (m == "grover") {
      s.mode = SimulationMode::grover;
    } else {
      throw o.error("simulation.mode must be fidelity, fit or grover", "mode");
    }
  }
  o.count("n", s.n);
  o.count("depth", s.depth);
  if (o.has("two_qubit_counts")) {
    const json &a = o.at("two_qubit_counts");
    if (!a.is_array()) throw o.error("simulation.two_qubit_counts must be an array", "two_qubit_counts");
    s.two_qubit_counts.clear();
    for (const auto &v : a) {
      if (!v.is_number_unsigned())
        throw o.error("simulation.two_qubit_counts entries must be non-negative integers", "two_qubit_counts");
      s.two_qubit_counts.push_back(v.get<std::size_t>());
    }
  }
  if (o.has("iterations")) {
    std::size_t it = 0;
    o.count("iterations", it);
    s.iterations = it;
  }
  o.string("marked", s.marked);
  if (o.has("noise")) {
    StrictObject no(o.at("noise"), "simulation.noise", loc, {"eps0", "eps1", "eps2"});
    no.optional_number("eps0", s.noise.eps0);
    no.optional_number("eps1", s.noise.eps1);
    no.optional_number("eps2", s.noise.eps2);
  }
  if (o.has("eps2_sweep")) {
    const json &a = o.at("eps2_sweep");
    if (!a.is_array()) throw o.error("simulation.eps2_sweep must be an array", "eps2_sweep");
    for (const auto &v : a) {
      if (!v.is_number()) throw o.error("simulation.eps2_sweep entries must be numbers", "eps2_sweep");
      s.eps2_sweep.push_back(v.get<double>());
    }
  }
  o.number("success_threshold", s.success_threshold);
  o.count("n_traj", s.n_traj);
  o.count("seed", s.seed);
  o.count("circuit_seed", s.circuit_seed);
  return s;
}

}  // namespace detail

inline Scenario parse_scenario(std::string_view text) {
  using detail::json;
  const detail::TextLocator loc{text};
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    const auto [line, col] = loc.line_col(e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("malformed scenario: ") + e.what(), line, col);
  }
  detail::StrictObject root(doc, "scenario", loc,
                            {"hardware", "algorithm", "qec", "cryo", "engineering", "simulation"});
  if (!root.has("hardware")) throw ParseError("scenario.hardware is required");

  Scenario s;
  s.hardware = detail::read_hardware(root.at("hardware"), loc);
  if (root.has("algorithm")) s.algorithm = detail::read_algorithm(root.at("algorithm"), loc);
  if (root.has("qec")) s.qec = detail::read_qec(root.at("qec"), loc);
  if (root.has("cryo")) s.cryo = detail::read_cryo(root.at("cryo"), loc);
  if (root.has("engineering")) s.engineering = detail::read_engineering(root.at("engineering"), loc);
  if (root.has("simulation")) s.simulation = detail::read_simulation(root.at("simulation"), loc);
  s.validate();
  return s;
}

}  // namespace qfeas
