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

#include "qfeas/algorithms.hpp"
#include "qfeas/engineering.hpp"
#include "qfeas/errors.hpp"
#include "qfeas/fidelity.hpp"
#include "qfeas/presets.hpp"
#include "qfeas/qec.hpp"
#include "qfeas/report.hpp"
#include "qfeas/scenario.hpp"
#include "qfeas/serialize.hpp"
#include "qfeas/sim/circuit.hpp"
#include "qfeas/sim/fit.hpp"
#include "qfeas/sim/grover.hpp"
#include "qfeas/sim/noise.hpp"
#include "qfeas/sim/philox.hpp"
#include "qfeas/sim/random_circuit.hpp"
#include "qfeas/sim/state.hpp"
