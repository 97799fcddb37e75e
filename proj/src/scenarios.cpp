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

#include "slq/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "slq/gates.hpp"
#include "slq/stochastic.hpp"
#include "slq/teleportation.hpp"

#ifndef SLQ_VERSION
#define SLQ_VERSION "0.0.0"
#endif

namespace slq::cli {

namespace {

using Row = std::vector<std::string>;

Row numbers(std::initializer_list<double> values) {
  Row r;
  r.reserve(values.size());
  for (double v : values) r.push_back(format_number(v));
  return r;
}

std::vector<double> time_grid(double t_max, int steps) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) return {0.0};
  for (int i = 0; i < steps; ++i) out.push_back(t_max * i / (steps - 1));
  return out;
}

std::vector<double> value_grid(const RunConfig& cfg, const std::string& lo_key,
                               const std::string& hi_key) {
  const double lo = cfg.real(lo_key);
  const double hi = cfg.real(hi_key);
  const int n = cfg.integer("steps");
  const bool log = cfg.text("grid") == "log";
  if (hi < lo) {
    throw ConfigError(kExitBadValue, hi_key, "key '" + hi_key + "' must not be below '" + lo_key + "'");
  }
  if (log && !(lo > 0.0)) {
    throw ConfigError(kExitBadValue, lo_key, "key '" + lo_key + "' must be positive on a log grid");
  }
  if (n == 1) return {lo};
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / (n - 1);
    out.push_back(log ? std::exp(std::log(lo) + s * (std::log(hi) - std::log(lo)))
                      : lo + s * (hi - lo));
  }
  // Land exactly on the requested end points.
  out.front() = lo;
  out.back() = hi;
  return out;
}

gates::FieldStrengths field_strengths(const RunConfig& cfg) {
  return {cfg.real("eps0"), cfg.real("j0"), cfg.real("g0")};
}

gates::GateNoiseSpec gate_noise(const RunConfig& cfg) {
  return {cfg.real("gamma0"), cfg.real("gamma1"), cfg.real("gamma2")};
}

ScenarioResult teleport_fidelity(const RunConfig& cfg) {
  const double big0 = cfg.real("gamma0");
  const double big1 = cfg.real("gamma1");
  const double theta = cfg.real("psi-theta");
  const double phi = cfg.real("psi-phi");
  const teleport::PureQubitState psi(std::cos(theta / 2),
                                     std::polar(std::sin(theta / 2), phi));
  ScenarioResult out;
  out.table.columns = {"t", "F_B1", "F_B2", "F_B3", "F_B4", "F_e", "F_tele"};
  for (double t : time_grid(cfg.real("t-max"), cfg.integer("steps"))) {
    const auto p = teleport::bell_populations_closed_form(big0, big1, t);
    out.table.rows.push_back(numbers({t, p[0], p[1], p[2], p[3],
                                      teleport::entanglement_fidelity(big0, big1, t),
                                      teleport::teleportation_fidelity(psi, big0, big1, t)}));
  }
  if (const auto tc = teleport::critical_time(big0, big1)) out.summary["critical_time"] = *tc;
  return out;
}

ScenarioResult bell_trace(const RunConfig& cfg) {
  teleport::EprModel m;
  m.eps_a = cfg.real("eps-a");
  m.eps_b = cfg.real("eps-b");
  m.j_a = cfg.real("j-a");
  m.j_b = cfg.real("j-b");
  if (cfg.text("bath") == "independent") {
    m.g0a = cfg.real("gamma0-a");
    m.g0b = cfg.real("gamma0-b");
    m.g1a = cfg.real("gamma1-a");
    m.g1b = cfg.real("gamma1-b");
  } else {
    m.bath = teleport::Bath::collective;
    m.g0 = cfg.real("gamma0");
    m.g1 = cfg.real("gamma1");
  }
  const auto grid = time_grid(cfg.real("t-max"), cfg.integer("steps"));
  std::array<std::vector<std::pair<double, double>>, 4> traces;
  for (int i = 0; i < 4; ++i) traces[i] = teleport::bell_fidelity_trace(m, i + 1, grid);

  ScenarioResult out;
  out.table.columns = {"t", "F_B1", "F_B2", "F_B3", "F_B4"};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out.table.rows.push_back(numbers({grid[k], traces[0][k].second, traces[1][k].second,
                                      traces[2][k].second, traces[3][k].second}));
  }
  return out;
}

ScenarioResult collective_bath(const RunConfig& cfg) {
  const double g0 = cfg.real("gamma0");
  const double g1 = cfg.real("gamma1");
  const int bell = std::stoi(cfg.text("bell-state"));
  const auto grid = time_grid(cfg.real("t-max"), cfg.integer("steps"));

  const auto shared = teleport::bell_basis_trace(teleport::EprModel::collective(g0, g1), bell, grid);
  teleport::EprModel separate;
  separate.g0a = separate.g0b = g0;
  separate.g1a = separate.g1b = g1;
  const auto apart = teleport::bell_fidelity_trace(separate, bell, grid);

  ScenarioResult out;
  out.table.columns = {"t", "P_B1", "P_B2", "P_B3", "P_B4", "F_independent"};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto& rho = shared[k];
    out.table.rows.push_back(numbers({grid[k], rho.population(0), rho.population(1),
                                      rho.population(2), rho.population(3), apart[k].second}));
  }
  return out;
}

ScenarioResult cnot_time_resolved(const RunConfig& cfg) {
  const std::string& input = cfg.text("input");
  const int index = (input[0] - '0') * 2 + (input[1] - '0');
  const auto samples =
      gates::time_resolved_run(index, gate_noise(cfg), field_strengths(cfg), cfg.integer("steps"));
  ScenarioResult out;
  out.table.columns = {"t", "P00", "P01", "P10", "P11"};
  for (const auto& s : samples) {
    const auto& p = s.populations;
    out.table.rows.push_back(numbers({s.time, p[0], p[1], p[2], p[3]}));
  }
  return out;
}

ScenarioResult cnot_noise_sweep(const RunConfig& cfg) {
  const std::string& axis = cfg.text("axis");
  const auto schedule = gates::cnot_schedule(field_strengths(cfg));
  ScenarioResult out;
  out.table.columns = {"gamma", "F", "P", "E"};
  for (double gamma : value_grid(cfg, "gamma-min", "gamma-max")) {
    gates::GateNoiseSpec noise = gate_noise(cfg);
    (axis == "gamma0" ? noise.g0 : axis == "gamma1" ? noise.g1 : noise.g2) = gamma;
    const auto m = gates::gate_metrics(schedule, noise);
    out.table.rows.push_back(numbers({gamma, m.fidelity, m.purity, m.error}));
  }
  return out;
}

ScenarioResult cnot_additivity(const RunConfig& cfg) {
  const std::string& combo = cfg.text("combo");
  unsigned axis = 0;
  if (combo.find("gamma0") != std::string::npos || combo == "all") axis |= gates::kGamma0;
  if (combo.find("gamma1") != std::string::npos || combo == "all") axis |= gates::kGamma1;
  if (combo.find("gamma2") != std::string::npos || combo == "all") axis |= gates::kGamma2;
  ScenarioResult out;
  out.table.columns = {"gamma", "E_combined", "E_sum", "rel_gap"};
  for (const auto& row :
       gates::noise_sweep(axis, value_grid(cfg, "gamma-min", "gamma-max"), field_strengths(cfg))) {
    const double gap =
        row.metrics.error > 0.0 ? (row.metrics.error - row.error_sum) / row.metrics.error : 0.0;
    out.table.rows.push_back(numbers({row.gamma, row.metrics.error, row.error_sum, gap}));
  }
  return out;
}

ScenarioResult cnot_g0_sweep(const RunConfig& cfg) {
  const std::string& name = cfg.text("g0-model");
  const gates::Gamma2Model model = name == "constant" ? gates::Gamma2Model::constant
                                   : name == "linear" ? gates::Gamma2Model::linear
                                                      : gates::Gamma2Model::quadratic;
  gates::CouplingBase base;
  base.gamma0 = cfg.real("gamma0");
  base.gamma1 = cfg.real("gamma1");
  base.gamma2_scale = cfg.real("gamma2-scale");
  base.eps0 = cfg.real("eps0");
  base.j0 = cfg.real("j0");
  ScenarioResult out;
  out.table.columns = {"g0", "gamma2", "E"};
  for (const auto& row : gates::coupling_sweep(value_grid(cfg, "g0-min", "g0-max"), model, base)) {
    out.table.rows.push_back(numbers({row.g0, row.gamma2, row.error}));
  }
  return out;
}

// Step count: a multiple of `samples` with dt at or below the request.
TrajectoryConfig trajectory_setup(const RunConfig& cfg, double t_final, const Hamiltonian& h0,
                                  const std::vector<FluctuationChannel>& channels) {
  const int samples = cfg.integer("samples");
  double dt = cfg.real("dt");
  TrajectoryConfig tc;
  tc.t_final = t_final;
  if (dt == 0.0) {
    dt = std::min(0.005, default_dt(t_final, h0, channels));
    const int per_sample = static_cast<int>(std::ceil(t_final / (dt * samples) - 1e-9));
    tc.dt = t_final / (static_cast<double>(per_sample) * samples);
  } else {
    const double steps = t_final / dt;
    const long long whole = std::llround(steps);
    if (std::abs(steps - static_cast<double>(whole)) > 1e-9 * steps || whole % samples != 0) {
      throw ConfigError(kExitBadValue, "dt",
                        "key 'dt' must divide the end time into a multiple of 'samples' steps");
    }
    tc.dt = t_final / static_cast<double>(whole);
  }
  tc.n_trajectories = cfg.integer("trajectories");
  tc.master_seed = cfg.seed;
  tc.record_every = tc.n_steps() / samples;
  tc.threads = cfg.integer("threads");
  try {
    validate_trajectory_config(tc, h0, channels);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(kExitBadValue, "dt", e.what());
  }
  if (tc.n_trajectories < 100) {
    throw ConfigError(kExitBadValue, "trajectories", "key 'trajectories' must be at least 100");
  }
  return tc;
}

ScenarioResult mc_validate(const RunConfig& cfg) {
  const double gamma = cfg.real("gamma");
  const bool epr = cfg.text("benchmark") == "epr";

  std::optional<Hamiltonian> h0;
  std::vector<FluctuationChannel> channels;
  std::optional<DensityMatrix> rho0;
  std::optional<ComplexMatrix> basis;
  std::vector<std::string> labels;
  double t_final = 0.0;
  if (epr) {
    teleport::EprModel m;
    m.eps_a = m.eps_b = cfg.real("eps");
    m.j_a = m.j_b = cfg.real("j");
    m.g0a = m.g0b = m.g1a = m.g1b = gamma;
    h0.emplace(teleport::epr_hamiltonian(m, teleport::Basis::standard));
    channels = teleport::epr_channels(m, teleport::Basis::standard);
    rho0.emplace(DensityMatrix::pure(bell_transform().col(0)));
    basis = bell_transform();
    labels = {"P_B1", "P_B2", "P_B3", "P_B4"};
    t_final = cfg.real("t-max");
  } else {
    ControlSegment seg;
    seg.g = -1.0;
    seg.duration = std::numbers::pi / 2;
    h0.emplace(segment_hamiltonian(seg));
    channels = gates::gate_channels({0.0, 0.0, gamma});
    ComplexVector psi = ComplexVector::Zero(4);
    psi(1) = 1.0;
    rho0.emplace(DensityMatrix::pure(psi));
    labels = {"P00", "P01", "P10", "P11"};
    t_final = seg.duration;
  }

  const TrajectoryConfig tc = trajectory_setup(cfg, t_final, *h0, channels);
  const MonteCarloResult mc = monte_carlo_average(*h0, channels, *rho0, tc, basis);
  const Superoperator l =
      build_superoperator(*h0, build_correlation_tensor(channels, static_cast<int>(h0->dim())));

  ScenarioResult out;
  out.table.columns = {"t", "observable", "master_eq", "mc_mean", "mc_stderr", "z_score"};
  double worst = 0.0;
  for (std::size_t k = 0; k < mc.times.size(); ++k) {
    ComplexMatrix exact = propagate_fixed(l, *rho0, mc.times[k]).matrix();
    if (basis) exact = change_basis(exact, *basis);
    for (int i = 0; i < 4; ++i) {
      const double me = exact(i, i).real();
      const double mean = mc.mean[k](i, i).real();
      const double se = mc.stderr_re[k](i, i);
      const double z = (mean - me) / std::max(se, 1e-12);
      if (k > 0) worst = std::max(worst, std::abs(z));
      Row row{format_number(mc.times[k]), labels[static_cast<std::size_t>(i)]};
      for (double v : {me, mean, se, z}) row.push_back(format_number(v));
      out.table.rows.push_back(std::move(row));
    }
  }
  out.summary["dt"] = tc.dt;
  out.summary["max_abs_z"] = worst;
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

ScenarioResult run_scenario(const RunConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::teleport_fidelity: return teleport_fidelity(cfg);
    case Scenario::bell_trace: return bell_trace(cfg);
    case Scenario::collective_bath: return collective_bath(cfg);
    case Scenario::cnot_time_resolved: return cnot_time_resolved(cfg);
    case Scenario::cnot_noise_sweep: return cnot_noise_sweep(cfg);
    case Scenario::cnot_additivity: return cnot_additivity(cfg);
    case Scenario::cnot_g0_sweep: return cnot_g0_sweep(cfg);
    case Scenario::mc_validate: return mc_validate(cfg);
  }
  throw std::logic_error("unhandled scenario");
}

std::string render_csv(const Table& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(table.columns);
  for (const auto& r : table.rows) line(r);
  return out;
}

std::string render_sidecar(const RunConfig& cfg, const ScenarioResult& result) {
  nlohmann::ordered_json doc;
  doc["artifact"] = cfg.output_path;
  doc["version"] = version();
  doc["scenario"] = scenario_name(cfg.scenario);
  doc["seed"] = cfg.seed;
  doc["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : resolved_values(cfg)) doc["config"][k] = v;
  doc["columns"] = result.table.columns;
  doc["rows"] = result.table.rows.size();
  if (!result.summary.empty()) {
    doc["summary"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : result.summary) doc["summary"][k] = v;
  }
  return doc.dump(2) + "\n";
}

void write_outputs(const RunConfig& cfg, const ScenarioResult& result) {
  write_atomic(cfg.output_path, render_csv(result.table));
  write_atomic(cfg.output_path + ".json", render_sidecar(cfg, result));
}

const char* version() { return SLQ_VERSION; }

}  // namespace slq::cli
