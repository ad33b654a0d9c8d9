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

// Weighted linear least squares for -ln F = eps0*N0 + eps1*N1 + eps2*N2
// (no intercept), with Student-t confidence intervals.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/distributions/students_t.hpp>

#include "qfeas/errors.hpp"
#include "qfeas/fidelity.hpp"

namespace qfeas::sim {

struct RateObservation {
  OpCounts counts;
  double log_fidelity = 0.0;
  /// Standard error of log_fidelity; weights the fit when every observation has one.
  double std_error = 0.0;

  bool operator==(const RateObservation &) const = default;
};

using ChannelSet = std::array<bool, 3>;  // idle, one_qubit, two_qubit

struct ChannelFit {
  bool fitted = false;
  double rate = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

struct RateFit {
  ErrorBudget rates;
  std::array<ChannelFit, 3> channels;
  double confidence = 0.95;
  std::size_t dof = 0;
  bool weighted = false;
  /// Sum of squared (weighted) residuals.
  double rss = 0.0;
};

/// Channels with a non-zero count in at least one observation.
inline ChannelSet channels_present(const std::vector<RateObservation> &obs) {
  ChannelSet s{false, false, false};
  for (const auto &o : obs) {
    s[0] = s[0] || o.counts.n0 > 0;
    s[1] = s[1] || o.counts.n1 > 0;
    s[2] = s[2] || o.counts.n2 > 0;
  }
  return s;
}

inline RateFit fit_error_rates(const std::vector<RateObservation> &obs, ChannelSet channels,
                               double confidence = 0.95) {
  if (obs.size() < 2) throw BadInput("fit needs at least two observations");
  if (!(confidence > 0.0 && confidence < 1.0)) throw BadInput("confidence out of (0,1)");
  std::vector<int> cols;
  for (int c = 0; c < 3; ++c)
    if (channels[c]) cols.push_back(c);
  const auto m = static_cast<Eigen::Index>(obs.size());
  const auto p = static_cast<Eigen::Index>(cols.size());
  if (p == 0) throw RankDeficient("no channels selected");
  if (m < p) throw RankDeficient("fewer observations than fitted channels");

  bool weighted = true;
  for (const auto &o : obs) {
    o.counts.validate();
    if (!std::isfinite(o.log_fidelity)) throw BadInput("log fidelity must be finite");
    weighted = weighted && o.std_error > 0.0;
  }

  Eigen::MatrixXd a(m, p);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto &o = obs[static_cast<std::size_t>(i)];
    const double w = weighted ? 1.0 / o.std_error : 1.0;
    const double row[3] = {o.counts.n0, o.counts.n1, o.counts.n2};
    for (Eigen::Index j = 0; j < p; ++j) a(i, j) = w * row[cols[static_cast<std::size_t>(j)]];
    y(i) = -w * o.log_fidelity;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < p) throw RankDeficient("observation counts do not separate the fitted channels");
  const Eigen::VectorXd beta = qr.solve(y);
  const Eigen::VectorXd resid = y - a * beta;

  RateFit fit;
  fit.confidence = confidence;
  fit.weighted = weighted;
  fit.dof = static_cast<std::size_t>(m - p);
  fit.rss = resid.squaredNorm();
  const double s2 = fit.dof > 0 ? fit.rss / static_cast<double>(fit.dof) : 0.0;
  const Eigen::MatrixXd cov = s2 * (a.transpose() * a).inverse();
  double t = 0.0;
  if (fit.dof > 0) {
    boost::math::students_t dist(static_cast<double>(fit.dof));
    t = boost::math::quantile(boost::math::complement(dist, (1.0 - confidence) / 2.0));
  }

  double *rate_slots[3] = {&fit.rates.eps0, &fit.rates.eps1, &fit.rates.eps2};
  for (Eigen::Index j = 0; j < p; ++j) {
    const int c = cols[static_cast<std::size_t>(j)];
    ChannelFit &cf = fit.channels[static_cast<std::size_t>(c)];
    cf.fitted = true;
    cf.rate = beta(j);
    cf.std_error = std::sqrt(std::max(0.0, cov(j, j)));
    cf.ci_low = cf.rate - t * cf.std_error;
    cf.ci_high = cf.rate + t * cf.std_error;
    *rate_slots[c] = cf.rate;
  }
  return fit;
}

inline RateFit fit_error_rates(const std::vector<RateObservation> &obs, double confidence = 0.95) {
  return fit_error_rates(obs, channels_present(obs), confidence);
}

}  // namespace qfeas::sim
