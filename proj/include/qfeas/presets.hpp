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

// Named hardware profiles. Error rates follow the superconducting two-qubit
// gate timeline (0.1 in 2009, 0.01 later, 0.001 by 2020) and the best
// reported values (eps1 ~ 1e-4, eps2 ~ 2e-3). The remaining fields are
// representative transmon numbers: T2 = 100 us, 10 ns one-qubit gates,
// 100 ns two-qubit gates, a 1 us QEC cycle, 1 mm^2 and 1 nW per qubit.
//
// Preset table version 1. Changing any value requires bumping kPresetVersion.

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "qfeas/fidelity.hpp"

namespace qfeas {

inline constexpr int kPresetVersion = 1;

namespace detail {

inline HardwareProfile transmon(const char *name, double eps1, double eps2) {
  HardwareProfile hw;
  hw.name = name;
  hw.t2 = 1e-4;
  hw.gate_time_1q = 1e-8;
  hw.gate_time_2q = 1e-7;
  hw.cycle_time = 1e-6;
  hw.time_per_qubit_layer = 1e-6;
  // One idle step lasts one single-qubit gate time.
  hw.budget = ErrorBudget{hw.gate_time_1q / hw.t2, eps1, eps2};
  hw.yield_p = 0.999;
  hw.area_per_qubit = 1e-6;
  hw.dissipation_per_qubit = 1e-9;
  return hw;
}

}  // namespace detail

inline const std::array<HardwareProfile, 4> &presets() {
  static const std::array<HardwareProfile, 4> table{
      detail::transmon("sc-2009", 1e-2, 0.1),
      detail::transmon("sc-2014", 1e-3, 0.01),
      detail::transmon("sc-2020", 1e-4, 0.001),
      detail::transmon("best-2023", 1e-4, 2e-3),
  };
  return table;
}

inline std::optional<HardwareProfile> find_preset(std::string_view name) {
  for (const auto &p : presets()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace qfeas
