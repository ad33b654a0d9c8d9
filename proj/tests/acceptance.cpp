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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qfeas/qfeas.hpp"

using namespace qfeas;

namespace {

struct Check {
  std::ostringstream detail;
  bool ok = true;

  void expect(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool rel_close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

void shor_requirement(Check &c) {
  const double n2 = shor_two_qubit_count(2048);
  c.expect(n2 == 10.0 * 2048 * 2048 * 2048, "N2 = 10*2048^3");
  const double eps = required_error_rate({0, 0, n2}, kDefaultTargetFidelity, Channel::two_qubit);
  c.expect(std::abs(eps - 1.164e-11) <= 1e-14, "eps2 = 1.164e-11 +- 1e-14");
  c.expect(rel_close(eps, 1.0 / n2, 1e-15), "eps2 = 1/N2");
  c.detail << "eps2=" << eps;
}

void grover_requirement(Check &c) {
  const double n2 = grover_two_qubit_count(100);
  const double eps = required_error_rate({0, 0, n2}, kDefaultTargetFidelity, Channel::two_qubit);
  const double years = grover_sequential_runtime(100, 1e-6) / kSecondsPerYear;
  c.expect(rel_close(n2, 1.1259e17, 0.01), "N2 = 1.1259e17 +- 1%");
  c.expect(rel_close(eps, 8.88e-18, 0.01), "eps2 = 8.88e-18 +- 1%");
  c.expect(std::round(years / 100.0) == 36.0, "runtime ~ 3.6e3 years");
  c.detail << "N2=" << n2 << " eps2=" << eps << " years=" << years;
}

void chemistry_requirement(Check &c) {
  const double n2 = chemistry_two_qubit_count(30);
  const double eps = required_error_rate({0, 0, n2}, kChemistryTargetFidelity, Channel::two_qubit);
  c.expect(n2 == 729e6, "N2 = 30^6");
  c.expect(rel_close(eps, 1.372e-12, 1e-3), "eps2 = 1.372e-12 +- 0.1%");
  c.detail << "eps2=" << eps;
}

void syndrome_arithmetic(Check &c) {
  const double bits = syndrome_data_rate(1e9, 1e-6);
  const double ops = decoder_compute(bits, 1.0);
  c.expect(bits == 1e15, "bits/s == 1e15");
  c.expect(ops == 1e15, "ops/s == 1e15");
  c.detail << "bits/s=" << bits << " ops/s=" << ops;
}

void qec_law(Check &c) {
  QecCode at;
  at.eps_nc = 0.0;
  bool unity = true;
  for (double th : {0.01, 0.0123, 0.2}) {
    at.eps_th = th;
    for (std::uint64_t n = 1; n <= 100000; ++n) unity &= logical_error_rate(th, at, n) == 1.0;
  }
  c.expect(unity, "correctable term == 1 at threshold");

  QecCode q;
  q.eps_nc = 0.0;
  const double e = logical_error_rate(0.1 * q.eps_th, q, 4);
  // 0.1^2 is not representable; the product is within a few ulp of the double nearest 0.01.
  c.expect(std::abs(e - 0.01) <= 4 * std::numeric_limits<double>::epsilon() * 0.01, "eps_L(n_c=4) == 0.01");

  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> u(0, 1);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    QecCode r;
    r.eps_th = 0.005 + 0.02 * u(rng);
    r.eps_nc = u(rng) < 0.1 ? 0.0 : std::pow(10.0, -14 + 12 * u(rng));
    r.nc_max = 1 + rng() % 5000;
    const double eps2 = r.eps_th * std::pow(10.0, -4 * u(rng)) * 0.999;
    const auto fast = optimal_code_size(eps2, r);
    const auto slow = oracle::scan_optimal_code_size(eps2, r);
    if (fast.n_c != slow.n_c || fast.log_eps_L != slow.log_eps_L) ++mismatches;
  }
  c.expect(mismatches == 0, "optimal_code_size == exhaustive scan");
  c.detail << "eps_L(4)=" << e << " scan mismatches=" << mismatches << "/1000";
}

void floor_behavior(Check &c) {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(0, 1);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    QecCode r;
    r.eps_th = 0.005 + 0.02 * u(rng);
    r.eps_nc = std::pow(10.0, -12 + 9 * u(rng));
    r.nc_max = 50000;
    const double eps2 = r.eps_th * std::pow(10.0, -3 * u(rng)) * 0.999;
    const double floor = error_floor(eps2, r).eps_L;
    bool ok = true;
    try {
      const auto n = required_code_size(eps2, r, floor);
      ok &= n >= 1 && n <= r.nc_max;
    } catch (const FloorUnreachable &) {
      ok = false;
    }
    for (double below : {floor * (1 - 1e-6), floor * 0.5, floor * 1e-3}) {
      try {
        required_code_size(eps2, r, below);
        ok = false;
      } catch (const FloorUnreachable &) {
      }
    }
    bad += !ok;
  }
  c.expect(bad == 0, "floor boundary");
  c.detail << "violations=" << bad << "/100";
}

void empirical_validation(Check &c) {
  const double injected = 2e-3;
  const sim::NoiseModel noise{{0, 0, injected}};
  const std::uint64_t n_traj = 4000;
  std::vector<sim::RateObservation> obs;
  double mean100 = 0, se100 = 0;
  std::uint64_t i = 0;
  for (std::size_t n2 : {50u, 100u, 200u, 400u}) {
    const sim::Circuit circ = sim::random_circuit_with_two_qubit_count(6, n2, 7 + i);
    const auto e = sim::estimate_fidelity(circ, noise, n_traj, 42 + i * n_traj);
    obs.push_back({circ.counts(), std::log(e.mean), e.std_error / e.mean});
    if (n2 == 100) mean100 = e.mean, se100 = e.std_error;
    ++i;
  }
  const auto fit = sim::fit_error_rates(obs, sim::ChannelSet{false, false, true});
  const double rel = std::abs(fit.rates.eps2 - injected) / injected;
  const double oracle = std::pow(1.0 - injected, 100);
  c.expect(rel <= 0.15, "fitted eps2 within 15%");
  c.expect(std::abs(mean100 - oracle) <= 3 * se100, "F(N2=100) within 3 sigma of 0.8186");
  c.detail << "fit eps2=" << fit.rates.eps2 << " (rel " << rel << ") F100=" << mean100 << "+-" << se100;
}

void grover_closed_form(Check &c) {
  const std::pair<unsigned, std::size_t> cases[] = {{2, 1}, {3, 2}, {4, 3}, {5, 4}};
  for (auto [n, k] : cases) {
    const std::string marked(n, '1');
    const auto e = sim::grover_success_probability(n, marked, k, sim::NoiseModel{}, 1000, 1);
    const double closed = sim::grover_closed_form(n, k);
    c.expect(std::abs(e.mean - closed) <= std::max(3 * e.std_error, 1e-12), "n=" + std::to_string(n));
    c.detail << "(" << n << "," << k << ")=" << e.mean << " ";
  }
  c.expect(std::abs(sim::grover_closed_form(3, 2) - 0.9453) < 5e-5, "(3,2) -> 0.9453");
  c.expect(std::abs(sim::grover_closed_form(2, 1) - 1.0) < 1e-15, "(2,1) -> 1.0");
}

void grover_collapse(Check &c) {
  const unsigned n = 5;
  const std::size_t k = sim::optimal_grover_iterations(n);
  std::vector<SweepPoint> sweep;
  for (double e2 : {0.0, 1e-3, 2e-3, 4e-3, 8e-3, 1.6e-2, 3.2e-2, 6.4e-2}) {
    sweep.push_back({e2, sim::grover_success_probability(n, "11111", k, sim::NoiseModel{{0, 0, e2}}, 2000, 42)});
  }
  const bool monotone = statistically_non_increasing(sweep);
  const auto crossing = threshold_crossing(sweep, 0.15);
  c.expect(k == 4, "optimal k = 4");
  c.expect(monotone, "success non-increasing in eps2 (3 sigma)");
  c.expect(crossing.has_value(), "success crosses 0.15");
  c.detail << "k=" << k << " crossing eps2=" << (crossing ? *crossing : NAN);
}

void determinism_round_trips(Check &c) {
  const char *sim_text = R"({"hardware": "sc-2020",
      "simulation": {"mode": "grover", "n": 4, "noise": {"eps2": 0.004}, "eps2_sweep": [0.001, 0.05],
                     "n_traj": 300, "seed": 42}})";
  const auto s1 = run_simulate(parse_scenario(sim_text), 1).doc.dump(2);
  const auto s2 = run_simulate(parse_scenario(sim_text), 4).doc.dump(2);
  c.expect(s1 == s2, "simulate report byte-identical");
  const char *est_text = R"({"hardware": "sc-2020", "algorithm": {"kind": "shor", "size_n": 2048}})";
  const Scenario est = parse_scenario(est_text);
  c.expect(run_estimate(est).doc.dump(2) == run_estimate(parse_scenario(est_text)).doc.dump(2),
           "estimate report byte-identical");

  const std::string enc = to_json(est).dump(2);
  c.expect(parse_scenario(enc) == est && to_json(parse_scenario(enc)).dump(2) == enc, "scenario round-trip");

  bool circuits = true;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    sim::Circuit circ = sim::random_circuit(7, 9, seed);
    circ.add(sim::GateKind::RZ, 3, 0.1 * double(seed) + 1.0 / 3.0).add(sim::GateKind::IDLE, 1);
    circuits &= sim::circuit_from_text(sim::to_text(circ)) == circ;
  }
  c.expect(circuits, "circuit round-trip");

  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const OpCounts counts{std::pow(10.0, 12 * u(rng)), std::pow(10.0, 12 * u(rng)), std::pow(10.0, 15 * u(rng))};
    const auto ch = static_cast<Channel>(rng() % 3);
    const double target = std::exp(-30 * u(rng)) * 0.999;
    const double eps = required_error_rate(counts, target, ch);
    ErrorBudget b;
    (ch == Channel::idle ? b.eps0 : ch == Channel::one_qubit ? b.eps1 : b.eps2) = eps;
    const double back = std::exp(log_fidelity(b, counts));
    worst = std::max(worst, std::abs(back - target) / target);
  }
  c.expect(worst <= 1e-12, "fidelity/required-rate inversion");
  c.detail << "inversion worst rel=" << worst;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check &)>>> criteria{
      {"shor requirement", shor_requirement},
      {"grover requirement", grover_requirement},
      {"chemistry requirement", chemistry_requirement},
      {"syndrome arithmetic", syndrome_arithmetic},
      {"qec law", qec_law},
      {"floor behavior", floor_behavior},
      {"fidelity law vs simulator", empirical_validation},
      {"grover closed form", grover_closed_form},
      {"noisy grover collapse", grover_collapse},
      {"determinism and round-trips", determinism_round_trips},
  };
  int failed = 0;
  int index = 0;
  for (const auto &[name, fn] : criteria) {
    ++index;
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception &e) {
      c.ok = false;
      c.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %-28s %8.2fs  %s\n", c.ok ? "PASS" : "FAIL", index, name.c_str(), secs,
                c.detail.str().c_str());
    failed += !c.ok;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
