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

#include "qfeas/qec.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace qfeas;

namespace {

QecCode code(double eps_nc, std::uint64_t nc_max = 1'000'000) {
  QecCode c;
  c.eps_th = 1e-2;
  c.eps_nc = eps_nc;
  c.nc_max = nc_max;
  return c;
}

}  // namespace

TEST(qec, at_threshold_correctable_term_is_one) {
  const QecCode c = code(0.0);
  for (std::uint64_t n : {1, 2, 3, 4, 17, 1000, 999999}) {
    EXPECT_EQ(logical_error_rate(c.eps_th, c, n), 1.0);
    EXPECT_EQ(log_logical_error_rate(c.eps_th, c, n), 0.0);
  }
}

TEST(qec, point_values) {
  EXPECT_DOUBLE_EQ(logical_error_rate(1e-3, code(0.0), 4), 0.01);
  EXPECT_NEAR(logical_error_rate(1e-3, code(1e-4), 16), 1.7e-3, 1e-15);
  EXPECT_NEAR(std::exp(log_logical_error_rate(1e-3, code(1e-4), 16)), 1.7e-3, 1e-15);
}

TEST(qec, log_form_agrees_with_plain_form) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 2000; ++i) {
    QecCode c = code(u(rng) < 0.2 ? 0.0 : std::pow(10.0, -12 + 9 * u(rng)));
    const double eps2 = c.eps_th * std::pow(10.0, -3 * u(rng));
    const std::uint64_t n = 1 + rng() % 5000;
    const double plain = logical_error_rate(eps2, c, n);
    if (plain < 1e-290) continue;
    EXPECT_NEAR(log_logical_error_rate(eps2, c, n), std::log(plain), 1e-12 * std::fabs(std::log(plain)) + 1e-14);
  }
}

TEST(qec, strictly_decreasing_without_floor) {
  const QecCode c = code(0.0, 100000);
  for (std::uint64_t n = 1; n < c.nc_max; ++n) {
    ASSERT_LT(log_logical_error_rate(1e-3, c, n + 1), log_logical_error_rate(1e-3, c, n)) << n;
  }
}

TEST(qec, unimodal_with_floor) {
  const QecCode c = code(1e-6, 20000);
  const auto opt = oracle::scan_optimal_code_size(1e-3, c);
  for (std::uint64_t n = 1; n < c.nc_max; ++n) {
    const double a = log_logical_error_rate(1e-3, c, n), b = log_logical_error_rate(1e-3, c, n + 1);
    if (n + 1 <= opt.n_c) {
      EXPECT_LT(b, a) << n;
    } else {
      EXPECT_GE(b, a) << n;
    }
  }
}

TEST(qec, optimal_size_no_floor_is_nc_max) {
  const auto r = optimal_code_size(1e-3, code(0.0));
  EXPECT_EQ(r.n_c, 1'000'000u);
  EXPECT_TRUE(r.limited_by_nc_max);
}

TEST(qec, optimal_size_with_floor) {
  const QecCode c = code(1e-4, 10000);
  const auto r = optimal_code_size(1e-3, c);
  const auto scan = oracle::scan_optimal_code_size(1e-3, c);
  EXPECT_EQ(r.n_c, 12u);
  EXPECT_EQ(scan.n_c, 12u);
  EXPECT_NEAR(r.eps_L, 1.543477572473021e-3, 1e-15);
  EXPECT_FALSE(r.limited_by_nc_max);
  EXPECT_NEAR(error_floor(1e-3, c).eps_L, 1.5e-3, 0.05e-3);
}

TEST(qec, above_threshold) {
  EXPECT_THROW(optimal_code_size(1e-2, code(0.0)), AboveThreshold);
  EXPECT_THROW(error_floor(0.1, code(1e-4)), AboveThreshold);
  EXPECT_THROW(required_code_size(1e-2, code(0.0), 1e-6), AboveThreshold);
}

TEST(qec, zero_physical_error) {
  EXPECT_EQ(optimal_code_size(0.0, code(1e-4)).n_c, 1u);
  EXPECT_EQ(optimal_code_size(0.0, code(0.0)).n_c, 1u);
}

TEST(qec, matches_exhaustive_scan_on_random_draws) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 300; ++i) {
    QecCode c;
    c.eps_th = 0.005 + 0.02 * u(rng);
    c.eps_nc = u(rng) < 0.1 ? 0.0 : std::pow(10.0, -14 + 12 * u(rng));
    c.nc_max = 1 + rng() % 5000;
    const double eps2 = c.eps_th * std::pow(10.0, -4 * u(rng)) * 0.999;
    const auto fast = optimal_code_size(eps2, c);
    const auto slow = oracle::scan_optimal_code_size(eps2, c);
    ASSERT_EQ(fast.n_c, slow.n_c) << "eps2=" << eps2 << " eps_nc=" << c.eps_nc << " nc_max=" << c.nc_max;
    ASSERT_EQ(fast.log_eps_L, slow.log_eps_L);
  }
}

TEST(qec, required_code_size_no_floor) {
  EXPECT_EQ(required_code_size(1e-3, code(0.0), 1e-6), 36u);
  EXPECT_EQ(oracle::scan_required_code_size(1e-3, code(0.0, 100), 1e-6), 36u);
  EXPECT_EQ(required_code_size(1e-3, code(0.0), 1.0), 1u);
  EXPECT_EQ(required_code_size(1e-3, code(0.5), 2.0), 1u);
}

TEST(qec, required_code_size_floor_unreachable) {
  EXPECT_THROW(required_code_size(1e-3, code(1e-4), 1e-6), FloorUnreachable);
}

TEST(qec, required_code_size_matches_scan) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 200; ++i) {
    QecCode c = code(u(rng) < 0.3 ? 0.0 : std::pow(10.0, -12 + 6 * u(rng)), 20000);
    const double eps2 = c.eps_th * std::pow(10.0, -3 * u(rng)) * 0.999;
    const double target = std::pow(10.0, -14 * u(rng));
    const std::uint64_t expect = oracle::scan_required_code_size(eps2, c, target);
    if (expect == 0) {
      EXPECT_THROW(required_code_size(eps2, c, target), FloorUnreachable);
    } else {
      EXPECT_EQ(required_code_size(eps2, c, target), expect);
    }
  }
}

TEST(qec, floor_boundary) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 100; ++i) {
    QecCode c = code(std::pow(10.0, -12 + 9 * u(rng)), 50000);
    const double eps2 = c.eps_th * std::pow(10.0, -3 * u(rng)) * 0.999;
    const double floor = error_floor(eps2, c).eps_L;
    EXPECT_NO_THROW(required_code_size(eps2, c, floor));
    EXPECT_THROW(required_code_size(eps2, c, floor * (1 - 1e-6)), FloorUnreachable);
  }
}

TEST(qec, floor_non_decreasing_in_eps_nc) {
  double prev = 0.0;
  for (double nc = 1e-12; nc < 1e-3; nc *= 3) {
    const double f = error_floor(1e-3, code(nc, 100000)).eps_L;
    EXPECT_GE(f, prev);
    prev = f;
  }
}

TEST(qec, physical_resources_and_runtime) {
  QecCode c;
  c.factory_overhead = 1;
  EXPECT_EQ(physical_resources(4000, 1000, c), 4e6);
  c.factory_overhead = 10;
  EXPECT_EQ(physical_resources(4000, 1000, c), 4e7);
  c.factory_overhead = 1;
  EXPECT_EQ(physical_resources(123, 1, c), 123.0);
  EXPECT_THROW(physical_resources(0, 1, c), ValidationError);

  QecCode d;
  EXPECT_NEAR(logical_runtime(8.59e10, d, 1e-8), 8.59e6, 1e-3);
  EXPECT_NEAR(logical_runtime(8.59e10, d, 1e-8) / 86400, 99.42, 0.01);
  EXPECT_EQ(logical_runtime(0, d, 1e-8), 0.0);
  d.ops_per_logical_gate = 1;
  EXPECT_EQ(logical_runtime(5, d, 1.0), 5.0);
}

TEST(qec, plan_invariants) {
  QecCode c = code(1e-9);
  const auto p = plan_code(1e-3, c, 1e-7, 100);
  EXPECT_GE(p.n_c, 1u);
  EXPECT_GE(p.eps_L, p.floor);
  EXPECT_LE(p.eps_L, 1e-7 * (1 + 1e-12));
  EXPECT_EQ(p.n_total, 100.0 * double(p.n_c) * c.factory_overhead);
}

TEST(qec, code_validation) {
  QecCode c;
  c.eps_th = 1.0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = QecCode{};
  c.nc_max = 0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = QecCode{};
  c.factory_overhead = 0.5;
  EXPECT_THROW(c.validate(), ValidationError);
}
