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

// Report generation behind the command-line tool. Every run produces a
// machine document (ordered JSON) and a human table built from the same
// values. Numbers in tables use 4 significant digits in scientific notation;
// machine documents keep full precision.

#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qfeas/algorithms.hpp"
#include "qfeas/engineering.hpp"
#include "qfeas/errors.hpp"
#include "qfeas/presets.hpp"
#include "qfeas/qec.hpp"
#include "qfeas/scenario.hpp"
#include "qfeas/serialize.hpp"
#include "qfeas/sim/fit.hpp"
#include "qfeas/sim/grover.hpp"
#include "qfeas/sim/noise.hpp"
#include "qfeas/sim/random_circuit.hpp"

namespace qfeas {

inline constexpr int kExitFeasible = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitNoCodePlan = 3;

inline constexpr std::string_view kReportFormat = "qfeas-report";
inline constexpr int kReportVersion = 1;

struct Report {
  ojson doc;
  std::string table;
  int exit_code = kExitFeasible;
};

inline std::string sci(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

namespace detail {

inline ojson header(std::string_view command) {
  return ojson{{"format", std::string(kReportFormat)},
               {"version", kReportVersion},
               {"command", std::string(command)}};
}

class Table {
 public:
  void section(std::string_view title) {
    if (!out_.str().empty()) out_ << '\n';
    out_ << title << '\n';
  }
  void row(std::string_view key, const std::string &value) {
    out_ << "  " << key;
    for (std::size_t i = key.size(); i < 30; ++i) out_ << ' ';
    out_ << value << '\n';
  }
  void row(std::string_view key, double value) { row(key, sci(value)); }
  void line(const std::string &s) { out_ << "  " << s << '\n'; }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

}  // namespace detail

/// Feasibility and full-stack budgets for the scenario's algorithm.
/// Exit code: 0 feasible, 2 infeasible, 3 when no QEC plan exists.
inline Report run_estimate(const Scenario &scenario) {
  if (!scenario.algorithm) throw ValidationError("estimate needs an algorithm block");
  const AlgorithmSpec &spec = *scenario.algorithm;
  const HardwareProfile &hw = scenario.hardware;

  Report rep;
  rep.doc = detail::header("estimate");
  rep.doc["scenario"] = to_json(scenario);
  const FeasibilityReport feas = assess(spec, hw);
  rep.doc["feasibility"] = to_json(feas);
  // Requirement rounded down to its decade, the convention of order-of-magnitude quotes.
  const double decade = feas.required_eps2 > 0.0
                            ? std::pow(10.0, std::floor(std::log10(feas.required_eps2)))
                            : 0.0;
  const double gap_decade = decade > 0.0 ? hw.budget.eps2 / decade : INFINITY;
  rep.doc["required_eps2_decade"] = decade;
  rep.doc["gap_factor_decade"] = gap_decade;
  rep.exit_code = feas.verdict == Verdict::feasible ? kExitFeasible : kExitInfeasible;

  std::optional<ScalingReport> scaling;
  std::string qec_error;
  std::string status = std::string(to_string(feas.verdict));
  try {
    scaling = full_stack_report(spec, hw, scenario.qec, scenario.cryo, scenario.engineering);
    rep.doc["scaling"] = to_json(*scaling);
  } catch (const AboveThreshold &e) {
    qec_error = e.what();
    status = "above_threshold";
    rep.exit_code = kExitNoCodePlan;
    rep.doc["scaling"] = nullptr;
  } catch (const FloorUnreachable &e) {
    qec_error = e.what();
    status = "floor_unreachable";
    rep.exit_code = kExitNoCodePlan;
    rep.doc["scaling"] = nullptr;
  }
  rep.doc["status"] = status;
  rep.doc["error"] = qec_error;
  rep.doc["exit_code"] = rep.exit_code;

  detail::Table t;
  char size[32];
  std::snprintf(size, sizeof size, "%.10g", spec.size_n);
  t.section("algorithm: " + std::string(to_string(spec.kind)) + " n=" + size +
            " on " + hw.name);
  t.row("two-qubit gates N2", feas.two_qubit_count);
  t.row("target fidelity", spec.target_fidelity);
  t.row("hardware eps2", hw.budget.eps2);
  t.row("required eps2", feas.required_eps2);
  t.row("gap factor", feas.gap_factor);
  t.row("required eps2 (decade)", decade);
  t.row("gap vs decade requirement", gap_decade);
  t.row("log fidelity on hardware", feas.achieved_log_fidelity);
  t.row("fidelity on hardware", LogProbability::from_log(feas.achieved_log_fidelity).value);
  t.row("sequential runtime [s]", feas.sequential_runtime);
  t.row("sequential runtime [years]", feas.sequential_runtime / kSecondsPerYear);
  t.row("verdict", std::string(to_string(feas.verdict)));
  if (scaling) {
    const ScalingReport &s = *scaling;
    t.section("error correction");
    t.row("target eps_L per operation", s.target_logical_error);
    t.row("physical per logical n_c", std::to_string(s.qec.n_c));
    t.row("logical error eps_L", s.qec.eps_L);
    t.row("error floor", s.qec.floor);
    t.row("logical qubits", s.logical_qubits);
    t.row("physical qubits", s.qec.n_total);
    t.row("logical runtime [s]", s.logical_runtime);
    t.section("engineering");
    t.row("syndrome rate [bit/s]", s.syndrome_rate);
    t.row("gigabit ethernet links", s.syndrome_ethernet_links);
    t.row("decoder [op/s]", s.decoder_ops);
    t.row("fabrication yield", s.yield_probability.value);
    t.row("log fabrication yield", s.yield_probability.log_value);
    t.row("chip area [m^2]", s.chip_area);
    t.row("cooling load [W]", s.cooling_load);
    t.row("fridges", s.fridge_count);
    t.row("wall power [W]", s.total_wall_power);
    t.row("control lines", s.wire_count);
    for (const auto &w : s.wiring_sensitivity) {
      t.row("  lines @ " + sci(w.lines_per_qubit) + "/qubit",
            sci(w.wire_count) + (w.over_budget ? "  over budget" : ""));
    }
    for (const auto &n : s.notes) t.line("note: " + n);
  } else {
    t.section("error correction");
    t.line("no code plan: " + qec_error);
  }
  rep.table = t.str();
  return rep;
}

struct SweepPoint {
  double eps2 = 0.0;
  sim::FidelityEstimate estimate;
};

/// Linear interpolation (in log eps2 when both ends are positive) of the first
/// downward crossing of `threshold`.
inline std::optional<double> threshold_crossing(const std::vector<SweepPoint> &sweep,
                                                double threshold) {
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    const double y0 = sweep[i - 1].estimate.mean, y1 = sweep[i].estimate.mean;
    if (y0 >= threshold && y1 < threshold) {
      const double f = (y0 - threshold) / (y0 - y1);
      const double x0 = sweep[i - 1].eps2, x1 = sweep[i].eps2;
      if (x0 > 0.0 && x1 > 0.0) {
        return std::exp(std::log(x0) + f * (std::log(x1) - std::log(x0)));
      }
      return x0 + f * (x1 - x0);
    }
  }
  return std::nullopt;
}

/// No step increases by more than `sigmas` combined standard errors.
inline bool statistically_non_increasing(const std::vector<SweepPoint> &sweep, double sigmas = 3.0) {
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    const auto &a = sweep[i - 1].estimate, &b = sweep[i].estimate;
    const double band = sigmas * std::hypot(a.std_error, b.std_error);
    if (b.mean - a.mean > band) return false;
  }
  return true;
}

inline std::string fit_table_csv(const std::vector<sim::RateObservation> &rows) {
  std::string out = "n0,n1,n2,log_fidelity,std_error\n";
  char buf[160];
  for (const auto &r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.counts.n0, r.counts.n1,
                  r.counts.n2, r.log_fidelity, r.std_error);
    out += buf;
  }
  return out;
}

/// Reads the CSV written by fit_table_csv(). The std_error column is optional;
/// blank lines and '#' comments are skipped; the header line is required.
inline std::vector<sim::RateObservation> parse_fit_table(std::string_view text) {
  std::vector<sim::RateObservation> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  bool has_se = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) {
      const auto b = c.find_first_not_of(" \t");
      const auto e = c.find_last_not_of(" \t");
      cells.push_back(b == std::string::npos ? "" : c.substr(b, e - b + 1));
    }
    if (!header_seen) {
      const bool base = cells.size() >= 4 && cells[0] == "n0" && cells[1] == "n1" &&
                        cells[2] == "n2" && cells[3] == "log_fidelity";
      has_se = cells.size() == 5 && cells[4] == "std_error";
      if (!base || (cells.size() != 4 && !has_se)) {
        throw ParseError("expected header n0,n1,n2,log_fidelity[,std_error]", line_no, 1);
      }
      header_seen = true;
      continue;
    }
    if (cells.size() != (has_se ? 5u : 4u)) throw ParseError("wrong number of columns", line_no, 1);
    double v[5] = {0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::size_t used = 0;
      try {
        v[i] = std::stod(cells[i], &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used == 0 || used != cells[i].size()) {
        throw ParseError("bad number '" + cells[i] + "'", line_no, 1);
      }
    }
    sim::RateObservation r;
    r.counts = OpCounts{v[0], v[1], v[2]};
    r.log_fidelity = v[3];
    r.std_error = v[4];
    try {
      r.counts.validate();
    } catch (const ValidationError &e) {
      throw ParseError(e.what(), line_no, 1);
    }
    rows.push_back(r);
  }
  if (!header_seen) throw ParseError("empty fit table");
  return rows;
}

namespace detail {

inline void fit_section(Table &t, const sim::RateFit &fit, const ErrorBudget *injected) {
  static constexpr const char *names[3] = {"eps0", "eps1", "eps2"};
  const double inj[3] = {injected ? injected->eps0 : 0.0, injected ? injected->eps1 : 0.0,
                         injected ? injected->eps2 : 0.0};
  t.section("fit of -ln F = eps0 N0 + eps1 N1 + eps2 N2");
  for (std::size_t c = 0; c < 3; ++c) {
    const auto &cf = fit.channels[c];
    if (!cf.fitted) continue;
    std::string v = sci(cf.rate) + " +- " + sci(cf.std_error) + "  [" + sci(cf.ci_low) + ", " +
                    sci(cf.ci_high) + "]";
    if (injected && inj[c] > 0.0) v += "  rel.err " + sci(std::fabs(cf.rate - inj[c]) / inj[c]);
    t.row(names[c], v);
  }
  t.row("degrees of freedom", std::to_string(fit.dof));
}

}  // namespace detail

/// Least-squares rates from a (counts, log F) table.
inline Report run_fit(const std::vector<sim::RateObservation> &rows, double confidence = 0.95) {
  const sim::RateFit fit = sim::fit_error_rates(rows, confidence);
  Report rep;
  rep.doc = detail::header("fit");
  ojson table = ojson::array();
  for (const auto &r : rows) {
    table.push_back(ojson{{"counts", to_json(r.counts)},
                          {"log_fidelity", r.log_fidelity},
                          {"std_error", r.std_error}});
  }
  rep.doc["observations"] = table;
  rep.doc["fit"] = to_json(fit);
  rep.doc["exit_code"] = kExitFeasible;
  detail::Table t;
  detail::fit_section(t, fit, nullptr);
  rep.table = t.str();
  return rep;
}

/// Monte-Carlo runs described by the scenario's simulation block.
inline Report run_simulate(const Scenario &scenario, unsigned threads = 0) {
  if (!scenario.simulation) throw ValidationError("simulate needs a simulation block");
  const SimulationBlock &sb = *scenario.simulation;
  sb.validate();
  const ErrorBudget injected = sb.noise.apply(scenario.hardware.budget);
  injected.validate();
  const sim::NoiseModel noise{injected};

  Report rep;
  rep.doc = detail::header("simulate");
  rep.doc["scenario"] = to_json(scenario);
  rep.doc["mode"] = std::string(to_string(sb.mode));
  rep.doc["noise"] = to_json(injected);
  detail::Table t;
  t.section("simulation (" + std::string(to_string(sb.mode)) + "), n=" + std::to_string(sb.n) +
            ", " + std::to_string(sb.n_traj) + " trajectories, seed " + std::to_string(sb.seed));
  t.row("eps0 / eps1 / eps2", sci(injected.eps0) + " / " + sci(injected.eps1) + " / " + sci(injected.eps2));

  switch (sb.mode) {
    case SimulationMode::fidelity: {
      const sim::Circuit c = sim::random_circuit(sb.n, sb.depth, sb.circuit_seed);
      const OpCounts counts = c.counts();
      const auto est = sim::estimate_fidelity(c, noise, sb.n_traj, sb.seed, threads);
      const double predicted_log = log_fidelity(injected, counts);
      const double no_insertion = std::pow(1.0 - injected.eps0, counts.n0) *
                                  std::pow(1.0 - injected.eps1, counts.n1) *
                                  std::pow(1.0 - injected.eps2, counts.n2);
      rep.doc["counts"] = to_json(counts);
      rep.doc["estimate"] = to_json(est);
      rep.doc["measured_log_fidelity"] = std::log(est.mean);
      rep.doc["predicted_log_fidelity"] = predicted_log;
      rep.doc["no_insertion_probability"] = no_insertion;
      t.row("N0 / N1 / N2", sci(counts.n0) + " / " + sci(counts.n1) + " / " + sci(counts.n2));
      t.row("mean fidelity", sci(est.mean) + " +- " + sci(est.std_error));
      t.row("measured ln F", std::log(est.mean));
      t.row("predicted ln F", predicted_log);
      t.row("P(no error inserted)", no_insertion);
      break;
    }
    case SimulationMode::fit: {
      std::vector<sim::RateObservation> rows;
      ojson table = ojson::array();
      for (std::size_t i = 0; i < sb.two_qubit_counts.size(); ++i) {
        const sim::Circuit c =
            sim::random_circuit_with_two_qubit_count(sb.n, sb.two_qubit_counts[i], sb.circuit_seed + i);
        const auto est =
            sim::estimate_fidelity(c, noise, sb.n_traj, sb.seed + i * sb.n_traj, threads);
        sim::RateObservation r;
        r.counts = c.counts();
        r.log_fidelity = std::log(est.mean);
        r.std_error = est.mean > 0.0 ? est.std_error / est.mean : 0.0;
        rows.push_back(r);
        table.push_back(ojson{{"counts", to_json(r.counts)},
                              {"estimate", to_json(est)},
                              {"log_fidelity", r.log_fidelity},
                              {"log_fidelity_std_error", r.std_error}});
      }
      // Fit the channels that carry injected noise and appear in the circuits.
      const sim::ChannelSet present = sim::channels_present(rows);
      sim::ChannelSet channels{injected.eps0 > 0.0 && present[0], injected.eps1 > 0.0 && present[1],
                               injected.eps2 > 0.0 && present[2]};
      if (!channels[0] && !channels[1] && !channels[2]) channels[2] = true;
      const sim::RateFit fit = sim::fit_error_rates(rows, channels);
      rep.doc["observations"] = table;
      rep.doc["fit"] = to_json(fit);
      ojson rel = ojson::object();
      const double inj[3] = {injected.eps0, injected.eps1, injected.eps2};
      static constexpr const char *names[3] = {"idle", "one_qubit", "two_qubit"};
      for (std::size_t c = 0; c < 3; ++c) {
        if (fit.channels[c].fitted && inj[c] > 0.0)
          rel[names[c]] = std::fabs(fit.channels[c].rate - inj[c]) / inj[c];
      }
      rep.doc["relative_error"] = rel;
      rep.doc["table_csv"] = fit_table_csv(rows);
      for (const auto &r : rows) {
        t.row("N2=" + sci(r.counts.n2), "ln F = " + sci(r.log_fidelity) + " +- " + sci(r.std_error));
      }
      detail::fit_section(t, fit, &injected);
      t.section("raw table (csv)");
      std::istringstream csv(fit_table_csv(rows));
      for (std::string l; std::getline(csv, l);) t.line(l);
      break;
    }
    case SimulationMode::grover: {
      const std::string marked = sb.marked_or_default();
      const std::size_t k = sb.iterations.value_or(sim::optimal_grover_iterations(sb.n));
      const sim::Circuit c = sim::build_grover_circuit(sb.n, marked, k);
      const double closed = sim::grover_closed_form(sb.n, k);
      const auto est = sim::grover_success_probability(sb.n, marked, k, noise, sb.n_traj, sb.seed, threads);
      rep.doc["marked"] = marked;
      rep.doc["iterations"] = k;
      rep.doc["counts"] = to_json(c.counts());
      rep.doc["closed_form"] = closed;
      rep.doc["success"] = to_json(est);
      t.row("marked / iterations", marked + " / " + std::to_string(k));
      t.row("N1 / N2", sci(c.counts().n1) + " / " + sci(c.counts().n2));
      t.row("closed-form success", closed);
      t.row("success probability", sci(est.mean) + " +- " + sci(est.std_error));
      if (!sb.eps2_sweep.empty()) {
        std::vector<SweepPoint> sweep;
        ojson rows = ojson::array();
        for (double e2 : sb.eps2_sweep) {
          ErrorBudget b = injected;
          b.eps2 = e2;
          SweepPoint p{e2, sim::grover_success_probability(sb.n, marked, k, sim::NoiseModel{b},
                                                          sb.n_traj, sb.seed, threads)};
          rows.push_back(ojson{{"eps2", e2}, {"success", to_json(p.estimate)}});
          sweep.push_back(p);
        }
        const auto crossing = threshold_crossing(sweep, sb.success_threshold);
        const bool monotone = statistically_non_increasing(sweep);
        rep.doc["sweep"] = rows;
        rep.doc["success_threshold"] = sb.success_threshold;
        rep.doc["crossing_eps2"] = crossing ? ojson(*crossing) : ojson(nullptr);
        rep.doc["sweep_monotone"] = monotone;
        t.section("eps2 sweep");
        for (const auto &p : sweep) {
          t.row("eps2=" + sci(p.eps2), sci(p.estimate.mean) + " +- " + sci(p.estimate.std_error));
        }
        t.row("success crosses " + sci(sb.success_threshold),
              crossing ? "at eps2 ~ " + sci(*crossing) : std::string("not within sweep"));
        t.row("non-increasing (3 sigma)", monotone ? "yes" : "no");
      }
      break;
    }
  }
  rep.doc["exit_code"] = kExitFeasible;
  rep.table = t.str();
  return rep;
}

/// The preset table as a report.
inline Report run_presets() {
  Report rep;
  rep.doc = detail::header("presets");
  rep.doc["preset_version"] = kPresetVersion;
  ojson list = ojson::array();
  detail::Table t;
  t.section("hardware presets (version " + std::to_string(kPresetVersion) + ")");
  for (const auto &p : presets()) {
    list.push_back(to_json(p));
    t.row(p.name, "eps0 " + sci(p.budget.eps0) + "  eps1 " + sci(p.budget.eps1) + "  eps2 " +
                      sci(p.budget.eps2) + "  T2 " + sci(p.t2) + " s");
  }
  rep.doc["presets"] = list;
  rep.table = t.str();
  return rep;
}

}  // namespace qfeas
