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

#include "slq/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace slq::cli {

namespace {

const std::map<Scenario, std::string>& names() {
  static const std::map<Scenario, std::string> table{
      {Scenario::teleport_fidelity, "teleport-fidelity"},
      {Scenario::bell_trace, "bell-trace"},
      {Scenario::collective_bath, "collective-bath"},
      {Scenario::cnot_time_resolved, "cnot-time-resolved"},
      {Scenario::cnot_noise_sweep, "cnot-noise-sweep"},
      {Scenario::cnot_additivity, "cnot-additivity"},
      {Scenario::cnot_g0_sweep, "cnot-g0-sweep"},
      {Scenario::mc_validate, "mc-validate"},
  };
  return table;
}

KeySpec key(std::string name, std::string def, ValueKind kind, std::string help,
            std::vector<std::string> choices = {}) {
  return {std::move(name), std::move(def), kind, std::move(choices), std::move(help)};
}

std::vector<KeySpec> field_keys() {
  return {key("eps0", "1", ValueKind::positive_real, "single-qubit bias strength"),
          key("j0", "1", ValueKind::positive_real, "single-qubit tunnelling strength"),
          key("g0", "1", ValueKind::positive_real, "inter-qubit XY coupling strength")};
}

std::vector<KeySpec> gate_noise_keys() {
  return {key("gamma0", "0", ValueKind::nonneg_real, "diagonal (common-bath) noise strength"),
          key("gamma1", "0", ValueKind::nonneg_real, "off-diagonal (common-bath) noise strength"),
          key("gamma2", "0", ValueKind::nonneg_real, "XY coupling noise strength")};
}

std::vector<KeySpec> sweep_grid_keys(const std::string& lo, const std::string& hi,
                                     const std::string& steps) {
  return {key("gamma-min", lo, ValueKind::nonneg_real, "first grid value"),
          key("gamma-max", hi, ValueKind::nonneg_real, "last grid value"),
          key("steps", steps, ValueKind::positive_int, "number of grid points"),
          key("grid", "log", ValueKind::choice, "grid spacing", {"log", "linear"})};
}

template <typename... Lists>
std::vector<KeySpec> join(Lists... lists) {
  std::vector<KeySpec> out;
  (out.insert(out.end(), lists.begin(), lists.end()), ...);
  return out;
}

std::optional<double> to_double(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<long long> to_int(const std::string& s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void validate_value(const KeySpec& spec, const std::string& value) {
  auto bad = [&](const std::string& why) {
    throw ConfigError(kExitBadValue, spec.name, "invalid value '" + value + "' for key '" +
                                                    spec.name + "': " + why);
  };
  switch (spec.kind) {
    case ValueKind::real:
      if (!to_double(value)) bad("expected a finite number");
      break;
    case ValueKind::nonneg_real: {
      const auto v = to_double(value);
      if (!v) bad("expected a finite number");
      if (*v < 0.0) {
        const bool is_noise = spec.name.rfind("gamma", 0) == 0;
        bad(is_noise ? "negative noise strength" : "must be non-negative");
      }
      break;
    }
    case ValueKind::positive_real: {
      const auto v = to_double(value);
      if (!v) bad("expected a finite number");
      if (!(*v > 0.0)) bad("must be positive");
      break;
    }
    case ValueKind::positive_int: {
      const auto v = to_int(value);
      if (!v) bad("expected an integer");
      if (*v < 1 || *v > 100000000) bad("must be a positive integer");
      break;
    }
    case ValueKind::nonneg_int: {
      const auto v = to_int(value);
      if (!v) bad("expected an integer");
      if (*v < 0) bad("must be non-negative");
      break;
    }
    case ValueKind::choice:
      if (std::find(spec.choices.begin(), spec.choices.end(), value) == spec.choices.end()) {
        std::string list;
        for (const auto& c : spec.choices) list += (list.empty() ? "" : ", ") + c;
        bad("expected one of " + list);
      }
      break;
  }
}

std::uint64_t parse_seed(const std::string& value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
    throw ConfigError(kExitBadValue, "seed",
                      "invalid value '" + value + "' for key 'seed': expected an unsigned 64-bit integer");
  }
  return v;
}

}  // namespace

std::string scenario_name(Scenario s) { return names().at(s); }

std::optional<Scenario> parse_scenario(const std::string& name) {
  for (const auto& [s, n] : names()) {
    if (n == name) return s;
  }
  return std::nullopt;
}

const std::vector<Scenario>& all_scenarios() {
  static const std::vector<Scenario> list = [] {
    std::vector<Scenario> v;
    for (const auto& [s, n] : names()) v.push_back(s);
    return v;
  }();
  return list;
}

const std::vector<KeySpec>& common_keys() {
  static const std::vector<KeySpec> keys{
      key("scenario", "", ValueKind::choice, "scenario to run"),
      key("out", "", ValueKind::choice, "output CSV path (default <scenario>.csv)"),
      key("seed", "0", ValueKind::nonneg_int, "master seed for stochastic scenarios"),
  };
  return keys;
}

const std::vector<KeySpec>& scenario_keys(Scenario s) {
  static const std::map<Scenario, std::vector<KeySpec>> table{
      {Scenario::teleport_fidelity,
       {key("gamma0", "0.1", ValueKind::nonneg_real, "total diagonal rate Gamma0 = g0a + g0b"),
        key("gamma1", "0.1", ValueKind::nonneg_real, "total off-diagonal rate Gamma1 = g1a + g1b"),
        key("t-max", "10", ValueKind::positive_real, "end of the time grid"),
        key("steps", "101", ValueKind::positive_int, "number of time points"),
        key("psi-theta", "1.5707963267948966", ValueKind::real,
            "teleported state polar angle: c0 = cos(theta/2)"),
        key("psi-phi", "0", ValueKind::real,
            "teleported state phase: c1 = exp(i phi) sin(theta/2)")}},
      {Scenario::bell_trace,
       {key("eps-a", "1", ValueKind::real, "bias of qubit a"),
        key("eps-b", "1", ValueKind::real, "bias of qubit b"),
        key("j-a", "0.5", ValueKind::real, "off-diagonal element of qubit a"),
        key("j-b", "0.5", ValueKind::real, "off-diagonal element of qubit b"),
        key("bath", "independent", ValueKind::choice, "bath structure",
            {"independent", "collective"}),
        key("gamma0-a", "0.1", ValueKind::nonneg_real, "diagonal noise on qubit a (independent)"),
        key("gamma0-b", "0.1", ValueKind::nonneg_real, "diagonal noise on qubit b (independent)"),
        key("gamma1-a", "0.1", ValueKind::nonneg_real, "off-diagonal noise on qubit a (independent)"),
        key("gamma1-b", "0.1", ValueKind::nonneg_real, "off-diagonal noise on qubit b (independent)"),
        key("gamma0", "0.1", ValueKind::nonneg_real, "shared diagonal noise (collective)"),
        key("gamma1", "0.1", ValueKind::nonneg_real, "shared off-diagonal noise (collective)"),
        key("t-max", "10", ValueKind::positive_real, "end of the time grid"),
        key("steps", "201", ValueKind::positive_int, "number of time points")}},
      {Scenario::collective_bath,
       {key("gamma0", "0.1", ValueKind::nonneg_real, "shared diagonal noise"),
        key("gamma1", "0.1", ValueKind::nonneg_real, "shared off-diagonal noise"),
        key("bell-state", "1", ValueKind::choice, "initial Bell state", {"1", "2", "3", "4"}),
        key("t-max", "10", ValueKind::positive_real, "end of the time grid"),
        key("steps", "101", ValueKind::positive_int, "number of time points")}},
      {Scenario::cnot_time_resolved,
       join(field_keys(), gate_noise_keys(),
            std::vector<KeySpec>{
                key("input", "11", ValueKind::choice, "basis input state", {"00", "01", "10", "11"}),
                key("steps", "20", ValueKind::positive_int, "samples per schedule segment")})},
      {Scenario::cnot_noise_sweep,
       join(field_keys(), gate_noise_keys(),
            std::vector<KeySpec>{key("axis", "gamma0", ValueKind::choice, "swept noise component",
                                     {"gamma0", "gamma1", "gamma2"})},
            sweep_grid_keys("0.0001", "10", "41"))},
      {Scenario::cnot_additivity,
       join(field_keys(),
            std::vector<KeySpec>{key("combo", "all", ValueKind::choice, "noise components switched on together",
                                     {"gamma0+gamma1", "gamma1+gamma2", "gamma0+gamma2", "all"})},
            sweep_grid_keys("0.0001", "0.1", "31"))},
      {Scenario::cnot_g0_sweep,
       {key("eps0", "1", ValueKind::positive_real, "single-qubit bias strength"),
        key("j0", "1", ValueKind::positive_real, "single-qubit tunnelling strength"),
        key("gamma0", "0.001", ValueKind::nonneg_real, "diagonal noise strength"),
        key("gamma1", "0.001", ValueKind::nonneg_real, "off-diagonal noise strength"),
        key("gamma2-scale", "0.001", ValueKind::nonneg_real, "prefactor c of the gamma2 model"),
        key("g0-model", "constant", ValueKind::choice, "gamma2 dependence on g0",
            {"constant", "linear", "quadratic"}),
        key("g0-min", "0.01", ValueKind::positive_real, "first coupling strength"),
        key("g0-max", "16", ValueKind::positive_real, "last coupling strength"),
        key("steps", "41", ValueKind::positive_int, "number of grid points"),
        key("grid", "log", ValueKind::choice, "grid spacing", {"log", "linear"})}},
      {Scenario::mc_validate,
       {key("benchmark", "epr", ValueKind::choice, "model to validate", {"epr", "gate-xy"}),
        key("eps", "0", ValueKind::real, "bias on both qubits (epr)"),
        key("j", "0", ValueKind::real, "off-diagonal element on both qubits (epr)"),
        key("gamma", "0.05", ValueKind::nonneg_real,
            "per-channel strength (epr) or gamma2 (gate-xy)"),
        key("trajectories", "10000", ValueKind::positive_int, "number of trajectories"),
        key("dt", "0", ValueKind::nonneg_real, "trajectory step; 0 picks 0.005 clipped to the stability bound"),
        key("t-max", "1", ValueKind::positive_real, "end time (epr); gate-xy uses its segment length"),
        key("samples", "10", ValueKind::positive_int, "recorded times after t = 0"),
        key("threads", "1", ValueKind::positive_int, "worker threads (results do not depend on it)")}},
  };
  return table.at(s);
}

std::vector<std::string> all_key_names() {
  std::set<std::string> names_set;
  for (const auto& k : common_keys()) names_set.insert(k.name);
  for (Scenario s : all_scenarios())
    for (const auto& k : scenario_keys(s)) names_set.insert(k.name);
  return {names_set.begin(), names_set.end()};
}

double RunConfig::real(const std::string& k) const { return *to_double(parameters.at(k)); }

int RunConfig::integer(const std::string& k) const {
  return static_cast<int>(*to_int(parameters.at(k)));
}

const std::string& RunConfig::text(const std::string& k) const { return parameters.at(k); }

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(kExitMissing, "config", "cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();

  std::map<std::string, std::string> out;
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(kExitBadValue, "config", "malformed JSON sidecar '" + path + "': " + e.what());
    }
    if (!doc.contains("config") || !doc["config"].is_object()) {
      throw ConfigError(kExitMissing, "config", "JSON sidecar '" + path + "' has no config object");
    }
    for (const auto& [k, v] : doc["config"].items()) {
      out[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    return out;
  }

  std::istringstream lines(content);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(kExitBadValue, "config",
                        path + ":" + std::to_string(number) + ": expected 'key = value'");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

RunConfig parse_config(const std::map<std::string, std::string>& file_values,
                       const std::map<std::string, std::string>& flag_values) {
  std::map<std::string, std::string> merged = file_values;
  for (const auto& [k, v] : flag_values) merged[k] = v;

  const auto it = merged.find("scenario");
  if (it == merged.end() || it->second.empty()) {
    throw ConfigError(kExitMissing, "scenario", "missing required key 'scenario'");
  }
  const auto scenario = parse_scenario(it->second);
  if (!scenario) {
    std::string list;
    for (Scenario s : all_scenarios()) list += (list.empty() ? "" : ", ") + scenario_name(s);
    throw ConfigError(kExitBadValue, "scenario",
                      "invalid value '" + it->second + "' for key 'scenario': expected one of " + list);
  }

  RunConfig cfg{*scenario, {}, scenario_name(*scenario) + ".csv", 0};
  const auto& keys = scenario_keys(*scenario);
  for (const auto& [k, v] : merged) {
    if (k == "scenario") continue;
    if (k == "out") {
      if (v.empty()) throw ConfigError(kExitBadValue, "out", "key 'out' must not be empty");
      cfg.output_path = v;
      continue;
    }
    if (k == "seed") {
      cfg.seed = parse_seed(v);
      continue;
    }
    const auto spec = std::find_if(keys.begin(), keys.end(),
                                   [&](const KeySpec& s) { return s.name == k; });
    if (spec == keys.end()) {
      throw ConfigError(kExitUnknownKey, k,
                        "unknown key '" + k + "' for scenario " + scenario_name(*scenario));
    }
    validate_value(*spec, v);
    cfg.parameters[k] = v;
  }
  for (const auto& spec : keys) {
    if (!cfg.parameters.count(spec.name)) cfg.parameters[spec.name] = spec.default_value;
  }
  return cfg;
}

std::map<std::string, std::string> resolved_values(const RunConfig& cfg) {
  std::map<std::string, std::string> out = cfg.parameters;
  out["scenario"] = scenario_name(cfg.scenario);
  out["out"] = cfg.output_path;
  out["seed"] = std::to_string(cfg.seed);
  return out;
}

}  // namespace slq::cli
