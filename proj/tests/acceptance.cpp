// Copyright 2026 The SLQ Authors
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

// Acceptance report: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "model_suite.hpp"
#include "slq/config.hpp"
#include "slq/gates.hpp"
#include "slq/liouville.hpp"
#include "slq/scenarios.hpp"
#include "slq/teleportation.hpp"

using namespace slq;
using namespace slq::teleport;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / (n - 1));
  return v;
}

std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(std::exp(std::log(a) + (std::log(b) - std::log(a)) * i / (n - 1)));
  return v;
}

ComplexMatrix kinetics_propagated(double big0, double big1, double t) {
  const auto ops = build_epr_model(EprModel::independent(big0, big1), Basis::bell);
  ComplexVector e = ComplexVector::Zero(4);
  e(0) = 1.0;
  return propagate_fixed(build_superoperator(ops.h0, ops.r), DensityMatrix::pure(e), t).matrix();
}

Outcome closed_form_kinetics() {
  const auto ops = build_epr_model(EprModel::independent(0.1, 0.1), Basis::bell);
  const Superoperator l = build_superoperator(ops.h0, ops.r);
  ComplexVector e = ComplexVector::Zero(4);
  e(0) = 1.0;
  const DensityMatrix b1 = DensityMatrix::pure(e);
  double worst = 0.0;
  for (double t : linspace(0.0, 50.0, 501)) {
    const auto rho = propagate_fixed(l, b1, t);
    const auto want = bell_populations_closed_form(0.1, 0.1, t);
    for (int i = 0; i < 4; ++i) {
      worst = std::max(worst, std::abs(rho.population(i) - want[static_cast<std::size_t>(i)]));
    }
  }
  const auto one = propagate_fixed(l, b1, 1.0);
  const std::array<double, 4> quoted{0.8269, 0.0824, 0.0824, 0.0082};
  double quoted_gap = 0.0;
  for (int i = 0; i < 4; ++i) {
    quoted_gap = std::max(quoted_gap, std::abs(one.population(i) - quoted[static_cast<std::size_t>(i)]));
  }
  return {worst <= 1e-9 && quoted_gap <= 1e-4,
          "max|prop-closed|=" + fmt("%.2e", worst) + " t=1 (" + fmt("%.4f", one.population(0)) +
              ", " + fmt("%.4f", one.population(1)) + ", " + fmt("%.4f", one.population(2)) + ", " +
              fmt("%.4f", one.population(3)) + ")"};
}

Outcome long_time_limits() {
  const double both = kinetics_propagated(0.1, 0.1, 1e3 / 0.1)(0, 0).real();
  const double one_zero = kinetics_propagated(0.1, 0.0, 1e3 / 0.1)(0, 0).real();
  const double cf_both = entanglement_fidelity(0.1, 0.1, 1e4);
  const double cf_zero = entanglement_fidelity(0.0, 0.2, 1e3 / 0.2);
  const double gap = std::max({std::abs(both - 0.25), std::abs(cf_both - 0.25),
                               std::abs(one_zero - 0.5), std::abs(cf_zero - 0.5)});
  return {gap <= 1e-6, "F_e(inf)=" + fmt("%.9f", both) + " / " + fmt("%.9f", one_zero) +
                           " max dev " + fmt("%.1e", gap)};
}

Outcome teleportation_fidelity_check() {
  std::mt19937_64 rng(15);
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> rate(0.0, 0.5), time(0.0, 20.0);
  double worst = 0.0, worst_limit = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    ComplexVector v(2);
    v << Complex(n(rng), n(rng)), Complex(n(rng), n(rng));
    v.normalize();
    const PureQubitState psi(v(0), v(1));
    const double g0 = rate(rng) + 1e-3, g1 = rate(rng) + 1e-3, t = time(rng);
    const double pipeline = teleport::teleport(psi, bell_populations_closed_form(g0, g1, t)).overlap(v);
    worst = std::max(worst, std::abs(teleportation_fidelity(psi, g0, g1, t) - pipeline));
    const double late = 1e3 / std::min(g0, g1);
    worst_limit = std::max(worst_limit, std::abs(teleportation_fidelity(psi, g0, g1, late) - 0.5));
  }
  return {worst <= 1e-12 && worst_limit <= 1e-6,
          "max|closed-pipeline|=" + fmt("%.1e", worst) + " max|F(inf)-1/2|=" + fmt("%.1e", worst_limit)};
}

Outcome collective_bath() {
  const auto grid = linspace(0.0, 50.0, 501);
  double drift = 0.0;
  for (int start : {1, 4}) {
    const auto states = bell_basis_trace(EprModel::collective(0.1, 0.1), start, grid);
    const double p0 = states.front().population(3);
    for (const auto& s : states) drift = std::max(drift, std::abs(s.population(3) - p0));
  }
  // Matched per-qubit strengths. The collective stationary B1 population is
  // 1/3 (B4 is sealed off), the independent one 1/4, so decay is compared
  // as the remaining fraction (F - F_inf) / (1 - F_inf).
  EprModel separate;
  separate.g0a = separate.g0b = separate.g1a = separate.g1b = 0.1;
  const auto shared = bell_fidelity_trace(EprModel::collective(0.1, 0.1), 1, grid);
  const auto apart = bell_fidelity_trace(separate, 1, grid);
  bool faster = true;
  double crossover = -1.0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double rc = (shared[k].second - 1.0 / 3.0) / (2.0 / 3.0);
    const double ri = (apart[k].second - 0.25) / 0.75;
    if (!(rc < ri)) faster = false;
    if (crossover < 0 && shared[k].second >= apart[k].second) crossover = grid[k];
  }
  return {drift <= 1e-10 && faster,
          "B4 drift " + fmt("%.1e", drift) + "; remaining-fraction strictly smaller on (0,50]: " +
              (faster ? "yes" : "no") + "; raw F curves cross at t=" + fmt("%.1f", crossover)};
}

Outcome regimes() {
  const auto grid = linspace(0.0, 10.0, 201);
  EprModel m;
  m.g0a = m.g0b = m.g1a = m.g1b = 0.1;
  m.eps_a = m.eps_b = 1.0;
  m.j_a = m.j_b = 0.5;
  std::array<std::vector<std::pair<double, double>>, 4> f;
  for (int i = 0; i < 4; ++i) f[i] = bell_fidelity_trace(m, i + 1, grid);
  bool coherent = true;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (f[3][k].second > f[3][k - 1].second + 1e-12) coherent = false;
    for (int i = 0; i < 3; ++i) {
      if (f[i][k].second > f[3][k].second + 1e-12) coherent = false;
    }
  }
  m.eps_a = m.eps_b = 0.1;
  m.j_a = m.j_b = 0.05;
  bool overdamped = true;
  for (int i = 0; i < 4; ++i) {
    const auto g = bell_fidelity_trace(m, i + 1, grid);
    for (std::size_t k = 1; k < grid.size(); ++k) {
      if (g[k].second > g[k - 1].second + 1e-12) overdamped = false;
    }
  }
  return {coherent && overdamped, std::string("coherent bound+monotone: ") + (coherent ? "yes" : "no") +
                                      "; overdamped monotone: " + (overdamped ? "yes" : "no")};
}

Outcome ideal_cnot() {
  ComplexMatrix product = ComplexMatrix::Identity(4, 4);
  for (const auto& op : gates::cnot_sequence()) product = op.unitary() * product;
  const Complex phase = (gates::ideal_cnot().adjoint() * product).trace() / 4.0;
  const double oracle_gap = (product - phase * gates::ideal_cnot()).cwiseAbs().maxCoeff();

  const auto schedule = gates::cnot_schedule({});
  const Propagator p = schedule_propagator(schedule, {});
  double worst = 1.0;
  for (const auto& psi : gates::sixteen_input_states()) {
    const ComplexVector target = gates::ideal_cnot() * psi;
    worst = std::min(worst, (target.adjoint() * p.apply(psi * psi.adjoint()) * target)(0, 0).real());
  }
  const double duration = gates::schedule_duration(schedule);
  return {worst >= 1.0 - 1e-9 && std::abs(duration - 2.5 * pi) <= 1e-12 && oracle_gap <= 1e-12 &&
              std::abs(std::abs(phase) - 1.0) <= 1e-12,
          "min per-state F=" + fmt("%.12f", worst) + " duration/pi=" + fmt("%.12f", duration / pi) +
              " product-vs-CNOT " + fmt("%.1e", oracle_gap)};
}

Outcome saturation() {
  const auto schedule = gates::cnot_schedule({});
  bool ok = true;
  std::string detail;
  for (unsigned axis : {gates::kGamma0, gates::kGamma1, gates::kGamma2}) {
    const auto m = gates::gate_metrics(schedule, gates::noise_on_axis(axis, 10.0));
    const bool here = std::abs(m.error - 0.75) <= 0.02 && std::abs(1.0 - m.purity - 0.75) <= 0.02;
    ok = ok && here;
    detail += gates::axis_name(axis) + ": 1-F=" + fmt("%.3f", m.error) + " 1-P=" +
              fmt("%.3f", 1.0 - m.purity) + "  ";
  }
  return {ok, detail + "(target 0.75+-0.02)"};
}

struct Fit {
  double slope, intercept, residual;
};

Fit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sx += x[i], sy += y[i], sxx += x[i] * x[i], sxy += x[i] * y[i];
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double residual = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    residual = std::max(residual, std::abs(y[i] - (slope * x[i] + intercept)) / std::abs(y[i]));
  }
  return {slope, intercept, residual};
}

Outcome weak_slope() {
  const auto grid = logspace(1e-4, 1e-3, 10);
  std::string detail;
  Fit main{};
  for (unsigned axis : {gates::kGamma0, gates::kGamma1, gates::kGamma2}) {
    std::vector<double> e;
    for (const auto& row : gates::noise_sweep(axis, grid, {})) e.push_back(row.metrics.error);
    const Fit f = linear_fit(grid, e);
    if (axis == gates::kGamma0) main = f;
    detail += gates::axis_name(axis) + " slope " + fmt("%.2f", f.slope) + " resid " +
              fmt("%.1e", f.residual) + (axis == gates::kGamma0 ? " [tested]  " : "  ");
  }
  return {main.slope >= 5.0 && main.slope <= 20.0 && main.residual <= 0.05, detail};
}

Outcome additivity() {
  double worst = 0.0;
  for (const auto& row : gates::noise_sweep(gates::kGamma0 | gates::kGamma1 | gates::kGamma2,
                                            logspace(1e-5, 1e-3, 9), {})) {
    worst = std::max(worst, std::abs(row.metrics.error - row.error_sum) / row.metrics.error);
  }
  return {worst <= 0.05, "max |E(g,g,g) - sum E| / E(g,g,g) = " + fmt("%.4f", worst)};
}

Outcome coupling_shapes() {
  const gates::CouplingBase base;
  const auto large = linspace(8.0, 16.0, 9);
  const auto flat = gates::coupling_sweep(large, gates::Gamma2Model::constant, base);
  double spread = 0.0;
  for (const auto& r : flat) spread = std::max(spread, std::abs(r.error - flat.front().error));
  const double e8_e16 = flat.front().error - flat.back().error;

  const auto grid = logspace(0.01, 16.0, 61);
  const auto quad = gates::coupling_sweep(grid, gates::Gamma2Model::quadratic, base);
  std::size_t arg = 0;
  for (std::size_t k = 1; k < quad.size(); ++k) {
    if (quad[k].error < quad[arg].error) arg = k;
  }
  bool rising = arg > 0 && arg + 1 < quad.size();
  for (std::size_t k = arg + 1; k < quad.size(); ++k) {
    if (quad[k].error <= quad[k - 1].error) rising = false;
  }

  double tiny_min = 1.0, tiny_max = 0.0;
  for (auto model : {gates::Gamma2Model::constant, gates::Gamma2Model::linear, gates::Gamma2Model::quadratic}) {
    const double e = gates::coupling_sweep({0.01}, model, base).front().error;
    tiny_min = std::min(tiny_min, e), tiny_max = std::max(tiny_max, e);
  }
  const double vanishing = gates::coupling_sweep({1e-4}, gates::Gamma2Model::constant, base).front().error;
  const bool tiny = tiny_max - tiny_min <= 1e-3 && tiny_min >= 0.5 && vanishing >= 0.74;

  return {e8_e16 <= 1e-3 && spread <= 1e-3 && rising && tiny,
          "constant: E(8)-E(16)=" + fmt("%.1e", e8_e16) + " spread[8,16]=" + fmt("%.1e", spread) +
              "; quadratic argmin g0=" + fmt("%.2f", quad[arg].g0) + " rising after: " +
              (rising ? "yes" : "no") + "; E(0.01)=" + fmt("%.3f", tiny_min) + " E(1e-4)=" +
              fmt("%.3f", vanishing)};
}

Outcome oracle_equivalence() {
  using namespace slq::cli;
  std::string detail;
  bool ok = true;
  for (const std::string bench : {"epr", "gate-xy"}) {
    const RunConfig cfg = parse_config({}, {{"scenario", "mc-validate"}, {"benchmark", bench},
                                            {"trajectories", "10000"}, {"seed", "0"}});
    const ScenarioResult r = run_scenario(cfg);
    int inside = 0, total = 0;
    for (const auto& row : r.table.rows) {
      if (std::stod(row[0]) == 0.0) continue;
      ++total;
      if (std::abs(std::stod(row[5])) <= 3.0) ++inside;
    }
    const double frac = static_cast<double>(inside) / total;
    ok = ok && frac >= 0.95;
    detail += bench + ": " + std::to_string(inside) + "/" + std::to_string(total) +
              " within 3 se (dt=" + fmt("%.4g", r.summary.at("dt")) + ")  ";
  }
  return {ok, detail};
}

Outcome generator_invariants() {
  double trace = 0, herm = 0, fixed = 0, lind = 0;
  std::mt19937_64 rng(44);
  std::normal_distribution<double> n;
  const auto suite = test::model_suite();
  for (const auto& model : suite) {
    const Superoperator l =
        build_superoperator(model.h0, build_correlation_tensor(model.channels, 4));
    Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(16);
    for (int a = 0; a < 4; ++a) row += l.mat.row(a * 5);
    trace = std::max(trace, row.cwiseAbs().maxCoeff());
    for (int k = 0; k < 5; ++k) {
      ComplexMatrix g(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = Complex(n(rng), n(rng));
      const ComplexMatrix out = l.apply(g + g.adjoint());
      herm = std::max(herm, (out - out.adjoint()).cwiseAbs().maxCoeff());
    }
    fixed = std::max(fixed, l.apply(ComplexMatrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff());
    lind = std::max(lind, (l.mat - lindblad_superoperator(model.h0, model.channels).mat).cwiseAbs().maxCoeff());
  }
  return {trace <= 1e-12 && herm <= 1e-12 && fixed <= 1e-10 && lind <= 1e-12,
          std::to_string(suite.size()) + " models: trace " + fmt("%.1e", trace) + " herm " +
              fmt("%.1e", herm) + " fixed-point " + fmt("%.1e", fixed) + " lindblad " + fmt("%.1e", lind)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double time_limit;  // seconds; 0 = none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed-form kinetics", closed_form_kinetics, 1.0},
      {2, "long-time limits", long_time_limits, 0.0},
      {3, "teleportation fidelity", teleportation_fidelity_check, 0.0},
      {4, "collective bath", collective_bath, 0.0},
      {5, "coherent/overdamped regimes", regimes, 5.0},
      {6, "ideal CNOT", ideal_cnot, 0.0},
      {7, "strong-noise saturation", saturation, 10.0},
      {8, "weak-noise slope", weak_slope, 0.0},
      {9, "additivity", additivity, 0.0},
      {10, "g0-sweep shapes", coupling_shapes, 0.0},
      {11, "oracle equivalence", oracle_equivalence, 120.0},
      {12, "generator invariants", generator_invariants, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit == 0.0 || secs < c.time_limit;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s  criterion %2d  %-28s %s  [%.2f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs,
                c.time_limit > 0 ? (in_time ? " within limit" : " OVER LIMIT") : "");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
