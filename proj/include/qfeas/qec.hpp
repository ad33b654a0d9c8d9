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

// Surface-code logical error law with a non-correctable floor:
//
//   eps_L(n_c) = A * (eps2 / eps_th)^sqrt(n_c) + B * eps_nc * n_c
//
// A and B default to 1. n_c is the number of physical qubits per logical
// qubit and is used directly (no mapping to a code distance).
//
// Code-size searches rank candidates by log(eps_L), evaluated as a
// log-sum-exp of the two terms, so the correctable term never underflows
// and stays strictly decreasing in n_c below threshold. The function is
// convex in n_c on the reals, which makes the integer minimum reachable by
// bisection on the sign of eps_L(n+1) - eps_L(n); a local scan around the
// bisection point settles rounding-level ties toward the smaller n_c.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

#include "qfeas/errors.hpp"

namespace qfeas {

/// A rate within this relative distance of a target counts as meeting it;
/// (0.1)^sqrt(36) evaluates to 1.0000000000000004e-6, not 1e-6.
inline constexpr double kTargetRelTolerance = 1e-12;

struct QecCode {
  double eps_th = 0.01;
  /// Non-correctable error per logical qubit per cycle.
  double eps_nc = 0.0;
  std::uint64_t nc_max = 1'000'000;
  /// Physical operations per logical one-qubit gate (all nested levels collapsed).
  double ops_per_logical_gate = 1e4;
  /// Physical-qubit multiplier for magic-state factories.
  double factory_overhead = 10.0;
  double correctable_prefactor = 1.0;
  double floor_prefactor = 1.0;

  void validate() const {
    if (!(eps_th > 0.0 && eps_th < 1.0)) throw ValidationError("eps_th out of (0,1)");
    if (!(eps_nc >= 0.0) || !std::isfinite(eps_nc)) throw ValidationError("eps_nc must be >= 0");
    if (nc_max < 1) throw ValidationError("nc_max must be >= 1");
    if (!(ops_per_logical_gate >= 1.0) || !std::isfinite(ops_per_logical_gate))
      throw ValidationError("ops_per_logical_gate must be >= 1");
    if (!(factory_overhead >= 1.0) || !std::isfinite(factory_overhead))
      throw ValidationError("factory_overhead must be >= 1");
    if (!(correctable_prefactor > 0.0) || !(floor_prefactor > 0.0))
      throw ValidationError("prefactors must be > 0");
  }

  bool operator==(const QecCode &) const = default;
};

struct QecPlan {
  std::uint64_t n_c = 1;
  double eps_L = 0.0;
  double n_total = 0.0;
  double floor = 0.0;

  bool operator==(const QecPlan &) const = default;
};

inline double logical_error_rate(double eps2, const QecCode &code, std::uint64_t n_c) {
  const double s = std::sqrt(static_cast<double>(n_c));
  return code.correctable_prefactor * std::pow(eps2 / code.eps_th, s) +
         code.floor_prefactor * code.eps_nc * static_cast<double>(n_c);
}

/// log(eps_L) without underflow; -inf when both terms vanish.
inline double log_logical_error_rate(double eps2, const QecCode &code, std::uint64_t n_c) {
  constexpr double ninf = -std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(n_c);
  const double ratio = eps2 / code.eps_th;
  const double lc =
      ratio > 0.0 ? std::log(code.correctable_prefactor) + std::sqrt(n) * std::log(ratio) : ninf;
  const double floor_term = code.floor_prefactor * code.eps_nc * n;
  const double lf = floor_term > 0.0 ? std::log(floor_term) : ninf;
  const double hi = std::max(lc, lf);
  if (hi == ninf) return ninf;
  const double lo = std::min(lc, lf);
  return hi + std::log1p(std::exp(lo - hi));
}

namespace detail {

inline void require_below_threshold(double eps2, const QecCode &code) {
  code.validate();
  if (!(eps2 >= 0.0) || !std::isfinite(eps2)) throw ValidationError("eps2 must be >= 0");
  if (eps2 >= code.eps_th) {
    std::ostringstream os;
    os << "eps2=" << eps2 << " is not below the threshold eps_th=" << code.eps_th;
    throw AboveThreshold(os.str());
  }
}

}  // namespace detail

struct CodeSizeOptimum {
  std::uint64_t n_c = 1;
  double eps_L = 0.0;
  double log_eps_L = 0.0;
  /// The minimum sits at nc_max, so a larger scan range could go lower.
  bool limited_by_nc_max = false;
};

/// Integer n_c in [1, nc_max] minimising eps_L; ties go to the smaller n_c.
inline CodeSizeOptimum optimal_code_size(double eps2, const QecCode &code) {
  detail::require_below_threshold(eps2, code);
  auto f = [&](std::uint64_t n) { return log_logical_error_rate(eps2, code, n); };

  // Smallest n with f(n+1) >= f(n); nc_max if f keeps decreasing.
  std::uint64_t lo = 1, hi = code.nc_max;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (f(mid + 1) >= f(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }

  constexpr std::uint64_t window = 64;
  const std::uint64_t first = lo > window ? lo - window : 1;
  const std::uint64_t last = std::min(code.nc_max, lo + window);
  CodeSizeOptimum best;
  best.n_c = first;
  best.log_eps_L = f(first);
  for (std::uint64_t n = first + 1; n <= last; ++n) {
    const double v = f(n);
    if (v < best.log_eps_L) {
      best.n_c = n;
      best.log_eps_L = v;
    }
  }
  best.eps_L = std::exp(best.log_eps_L);
  best.limited_by_nc_max = best.n_c == code.nc_max;
  return best;
}

/// Lowest reachable eps_L for this hardware and code family.
inline CodeSizeOptimum error_floor(double eps2, const QecCode &code) {
  return optimal_code_size(eps2, code);
}

/// Smallest n_c whose eps_L is at or below `target_eps_L` (relative slack
/// kTargetRelTolerance). Throws FloorUnreachable when the target is below the floor.
inline std::uint64_t required_code_size(double eps2, const QecCode &code, double target_eps_L) {
  detail::require_below_threshold(eps2, code);
  if (!(target_eps_L > 0.0)) throw ValidationError("target logical error must be > 0");
  if (target_eps_L >= 1.0) return 1;

  const CodeSizeOptimum floor = optimal_code_size(eps2, code);
  const double target = target_eps_L * (1.0 + kTargetRelTolerance);
  if (floor.eps_L > target) {
    std::ostringstream os;
    os << "target eps_L=" << target_eps_L << " is below the reachable floor " << floor.eps_L
       << " (n_c=" << floor.n_c << (floor.limited_by_nc_max ? ", limited by nc_max" : "")
       << ")";
    throw FloorUnreachable(os.str());
  }
  // eps_L is non-increasing on [1, floor.n_c]; compare in the same
  // exp(log) domain as the floor so the floor itself always qualifies.
  auto ok = [&](std::uint64_t n) {
    return std::exp(log_logical_error_rate(eps2, code, n)) <= target;
  };
  std::uint64_t lo = 1, hi = floor.n_c;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (ok(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  while (lo > 1 && ok(lo - 1)) --lo;
  return lo;
}

/// n_logical * n_c * factory_overhead.
inline double physical_resources(double n_logical, double n_c, const QecCode &code) {
  if (!(n_logical >= 1.0) || !(n_c >= 1.0)) throw ValidationError("counts must be >= 1");
  return n_logical * n_c * code.factory_overhead;
}

inline double logical_runtime(double n_logical_ops, const QecCode &code, double cycle_time) {
  if (!(n_logical_ops >= 0.0)) throw ValidationError("n_logical_ops must be >= 0");
  return n_logical_ops * code.ops_per_logical_gate * cycle_time;
}

inline QecPlan plan_code(double eps2, const QecCode &code, double target_eps_L, double n_logical) {
  QecPlan p;
  p.n_c = required_code_size(eps2, code, target_eps_L);
  p.eps_L = std::exp(log_logical_error_rate(eps2, code, p.n_c));
  p.n_total = physical_resources(n_logical, static_cast<double>(p.n_c), code);
  p.floor = error_floor(eps2, code).eps_L;
  return p;
}

}  // namespace qfeas
