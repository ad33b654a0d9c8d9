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

#include "qfeas/sim/grover.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace qfeas::sim;

namespace {

Amplitude phase_of_first_nonzero(const oracle::Matrix &u) {
  return u(0, 0) / std::abs(u(0, 0));
}

}  // namespace

TEST(grover, mcz_counts) {
  EXPECT_EQ(multi_controlled_z_counts(1), (qfeas::OpCounts{0, 1, 0}));
  EXPECT_EQ(multi_controlled_z_counts(2), (qfeas::OpCounts{0, 0, 1}));
  EXPECT_EQ(multi_controlled_z_counts(3), (qfeas::OpCounts{0, 7, 6}));
  EXPECT_EQ(multi_controlled_z_counts(5), (qfeas::OpCounts{0, 31, 30}));
  for (unsigned m = 1; m <= 8; ++m) {
    Circuit c(m);
    std::vector<unsigned> qs(m);
    for (unsigned i = 0; i < m; ++i) qs[i] = i;
    append_multi_controlled_z(c, qs);
    EXPECT_EQ(c.counts(), multi_controlled_z_counts(m)) << m;
  }
}

TEST(grover, mcz_matches_diagonal_up_to_global_phase) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned m = 1; m <= n; ++m) {
      // Non-contiguous, unsorted subset of the register.
      std::vector<unsigned> qs;
      for (unsigned i = 0; i < m; ++i) qs.push_back((n - 1 - 2 * i + 2 * n) % n);
      std::sort(qs.begin(), qs.end());
      qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
      std::reverse(qs.begin(), qs.end());
      Circuit c(n);
      append_multi_controlled_z(c, qs);
      oracle::Matrix u = oracle::Matrix::Identity(1 << n, 1 << n);
      for (const auto &g : c.gates()) u = oracle::dense_gate(g, n) * u;
      const Amplitude phase = phase_of_first_nonzero(u);
      std::uint64_t mask = 0;
      for (unsigned q : qs) mask |= 1ull << q;
      for (std::uint64_t i = 0; i < (1ull << n); ++i) {
        for (std::uint64_t j = 0; j < (1ull << n); ++j) {
          const Amplitude want = i != j ? 0.0 : ((i & mask) == mask ? -phase : phase);
          EXPECT_NEAR(std::abs(u(i, j) - want), 0.0, 1e-12) << n << " " << m << " " << i << " " << j;
        }
      }
    }
  }
}

TEST(grover, bitstring_index_is_little_endian) {
  EXPECT_EQ(bitstring_index("011"), 6u);
  EXPECT_EQ(bitstring_index("1"), 1u);
  EXPECT_EQ(bitstring_index("00001"), 16u);
  EXPECT_THROW(bitstring_index("01x"), qfeas::BadInput);
}

TEST(grover, closed_form_values) {
  EXPECT_NEAR(grover_closed_form(2, 1), 1.0, 1e-15);
  EXPECT_NEAR(grover_closed_form(3, 2), 0.9453125, 1e-14);
  EXPECT_NEAR(grover_closed_form(4, 3), 0.9613189697265625, 1e-14);
  EXPECT_NEAR(grover_closed_form(5, 4), 0.9991823155432940, 1e-12);
  EXPECT_NEAR(grover_closed_form(3, 0), 0.125, 1e-15);
  EXPECT_EQ(optimal_grover_iterations(2), 1u);
  EXPECT_EQ(optimal_grover_iterations(3), 2u);
  EXPECT_EQ(optimal_grover_iterations(4), 3u);
  EXPECT_EQ(optimal_grover_iterations(5), 4u);
  EXPECT_EQ(optimal_grover_iterations(10), 25u);
}

TEST(grover, simulated_circuit_matches_closed_form) {
  for (unsigned n = 1; n <= 7; ++n) {
    for (std::size_t k = 0; k <= optimal_grover_iterations(n) + 2; ++k) {
      for (std::uint64_t target : {0ull, (1ull << n) - 1, 5ull % (1ull << n)}) {
        std::string marked(n, '0');
        for (unsigned q = 0; q < n; ++q) marked[q] = (target >> q) & 1 ? '1' : '0';
        const auto s = run_ideal(build_grover_circuit(n, marked, k));
        EXPECT_NEAR(s.probability(target), grover_closed_form(n, k), 1e-10) << n << " " << k << " " << marked;
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
      }
    }
  }
}

TEST(grover, circuit_gate_counts) {
  // Per iteration: two MCZ on n qubits.
  const auto c = build_grover_circuit(5, "11111", 4);
  EXPECT_EQ(c.counts().n2, 4 * 2 * 30.0);
  EXPECT_EQ(build_grover_circuit(3, "000", 2).counts().n2, 2 * 2 * 6.0);
}

TEST(grover, bad_inputs) {
  EXPECT_THROW(build_grover_circuit(3, "01", 1), qfeas::BadInput);
  EXPECT_THROW(build_grover_circuit(0, "", 1), qfeas::BadInput);
  EXPECT_THROW(build_grover_circuit(17, std::string(17, '1'), 1), qfeas::BadInput);
}

TEST(grover, noiseless_estimate_is_closed_form) {
  const auto e = grover_success_probability(4, "1011", 3, NoiseModel{}, 100, 1, 1);
  EXPECT_NEAR(e.mean, grover_closed_form(4, 3), 1e-12);
  EXPECT_EQ(e.std_error, 0.0);
}

TEST(grover, success_decays_with_two_qubit_noise) {
  double prev = 1.0;
  for (double e2 : {0.0, 2e-3, 8e-3, 3.2e-2}) {
    const auto e = grover_success_probability(5, "11111", 4, NoiseModel{{0, 0, e2}}, 600, 3, 1);
    EXPECT_LE(e.mean, prev + 3 * e.std_error + 1e-12) << e2;
    prev = e.mean;
  }
  EXPECT_LT(prev, 0.15);
}
