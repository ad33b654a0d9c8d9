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

#include "qfeas/sim/fit.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "qfeas/sim/noise.hpp"
#include "qfeas/sim/random_circuit.hpp"

using namespace qfeas::sim;
using qfeas::OpCounts;

namespace {

std::vector<RateObservation> exact_obs(const qfeas::ErrorBudget &b, const std::vector<OpCounts> &counts) {
  std::vector<RateObservation> out;
  for (const auto &c : counts) out.push_back({c, qfeas::log_fidelity(b, c), 0.0});
  return out;
}

}  // namespace

TEST(fit, exact_recovery_three_channels) {
  const qfeas::ErrorBudget truth{1e-5, 3e-4, 2e-3};
  const auto obs = exact_obs(truth, {{100, 10, 5}, {20, 300, 40}, {5, 50, 400}, {1000, 1, 1}, {7, 70, 700}});
  const auto fit = fit_error_rates(obs);
  EXPECT_NEAR(fit.rates.eps0, truth.eps0, 1e-12 * truth.eps0 + 1e-18);
  EXPECT_NEAR(fit.rates.eps1, truth.eps1, 1e-12 * truth.eps1);
  EXPECT_NEAR(fit.rates.eps2, truth.eps2, 1e-12 * truth.eps2);
  EXPECT_EQ(fit.dof, 2u);
  EXPECT_FALSE(fit.weighted);
  EXPECT_LT(fit.rss, 1e-24);
  for (const auto &ch : fit.channels) {
    EXPECT_TRUE(ch.fitted);
    EXPECT_LE(ch.ci_low, ch.rate);
    EXPECT_GE(ch.ci_high, ch.rate);
  }
}

TEST(fit, exact_recovery_subset) {
  const qfeas::ErrorBudget truth{0, 0, 2e-3};
  const auto obs = exact_obs(truth, {{0, 0, 50}, {0, 0, 100}, {0, 0, 200}});
  const auto fit = fit_error_rates(obs);
  EXPECT_FALSE(fit.channels[0].fitted);
  EXPECT_FALSE(fit.channels[1].fitted);
  EXPECT_NEAR(fit.rates.eps2, 2e-3, 2e-15);
  EXPECT_EQ(fit.rates.eps0, 0.0);
}

TEST(fit, confidence_interval_is_student_t) {
  // y = -e*n plus alternating residuals: slope known, residual variance known.
  std::vector<RateObservation> obs;
  const std::vector<double> n{10, 20, 30, 40};
  const std::vector<double> r{0.01, -0.01, -0.01, 0.01};
  for (std::size_t i = 0; i < n.size(); ++i) obs.push_back({{0, 0, n[i]}, -0.002 * n[i] + r[i], 0.0});
  const auto fit = fit_error_rates(obs, ChannelSet{false, false, true});
  // Oracle: closed-form simple regression through the origin.
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    sxx += n[i] * n[i];
    sxy += n[i] * -obs[i].log_fidelity;
  }
  const double slope = sxy / sxx;
  double rss = 0;
  for (std::size_t i = 0; i < n.size(); ++i) rss += std::pow(-obs[i].log_fidelity - slope * n[i], 2);
  const double se = std::sqrt(rss / 3 / sxx);
  const double t975_3 = 3.182446305284263;
  EXPECT_NEAR(fit.rates.eps2, slope, 1e-15);
  EXPECT_NEAR(fit.channels[2].std_error, se, 1e-15);
  EXPECT_NEAR(fit.channels[2].ci_high - fit.rates.eps2, t975_3 * se, 1e-12);
  EXPECT_NEAR(fit.rss, rss, 1e-15);
}

TEST(fit, rank_deficient) {
  const qfeas::ErrorBudget truth{0, 1e-3, 2e-3};
  EXPECT_THROW(fit_error_rates(exact_obs(truth, {{0, 10, 20}, {0, 20, 40}, {0, 5, 10}})), qfeas::RankDeficient);
  EXPECT_THROW(fit_error_rates(exact_obs(truth, {{0, 10, 20}, {0, 10, 20}})), qfeas::RankDeficient);
}

TEST(fit, too_few_observations) {
  EXPECT_THROW(fit_error_rates(exact_obs({0, 0, 1e-3}, {{0, 0, 10}})), qfeas::BadInput);
  EXPECT_THROW(fit_error_rates({}), qfeas::BadInput);
}

TEST(fit, simulator_recovers_injected_rate) {
  const double injected = 2e-3;
  std::vector<RateObservation> obs;
  std::uint64_t i = 0;
  for (std::size_t n2 : {50u, 100u, 200u, 400u}) {
    const Circuit c = random_circuit_with_two_qubit_count(6, n2, 7 + i);
    const auto e = estimate_fidelity(c, NoiseModel{{0, 0, injected}}, 4000, 42 + i * 4000, 1);
    obs.push_back({c.counts(), std::log(e.mean), e.std_error / e.mean});
    ++i;
  }
  const auto fit = fit_error_rates(obs, ChannelSet{false, false, true});
  EXPECT_TRUE(fit.weighted);
  EXPECT_LE(std::abs(fit.rates.eps2 - injected) / injected, 0.15) << fit.rates.eps2;
}
