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

// slq: run one simulation scenario and write <out> plus <out>.json.
//
//   slq cnot-noise-sweep --axis gamma1 --out e.csv
//   slq --config run.cfg --gamma0 0.05
//   slq --config e.csv.json          # replay a previous run
//
// Exit codes: 0 ok, 2 unknown key or flag, 3 numerical validation failure,
// 4 malformed or out-of-range value, 5 missing input, 1 anything else.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "slq/config.hpp"
#include "slq/core.hpp"
#include "slq/scenarios.hpp"

namespace {

std::string key_help(const std::string& name) {
  using namespace slq::cli;
  for (const auto& k : common_keys())
    if (k.name == name) return k.help;
  for (Scenario s : all_scenarios()) {
    for (const auto& k : scenario_keys(s)) {
      if (k.name == name) return k.help;
    }
  }
  return {};
}

std::string scenario_list() {
  std::string out = "Scenarios and their keys (defaults):\n";
  for (auto s : slq::cli::all_scenarios()) {
    out += "  " + slq::cli::scenario_name(s) + "\n";
    for (const auto& k : slq::cli::scenario_keys(s)) {
      out += "      " + k.name + " = " + k.default_value + "\n";
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace slq::cli;

  CLI::App app{"Averaged open-system dynamics of qubits under classical white noise"};
  app.footer(scenario_list());
  app.set_version_flag("--version", std::string(version()));

  std::string positional;
  std::string config_path;
  app.add_option("scenario_name", positional, "scenario (same as --scenario)");
  app.add_option("--config", config_path, "key = value file or JSON sidecar");

  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> options;
  for (const auto& name : all_key_names()) {
    options[name] = app.add_option_function<std::string>(
        "--" + name, [&flag_values, name](const std::string& v) { flag_values[name] = v; },
        key_help(name));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "slq: " << e.what() << "\n";
    return kExitUnknownKey;
  }

  try {
    std::map<std::string, std::string> file_values;
    if (!config_path.empty()) file_values = read_config_file(config_path);
    if (!positional.empty()) {
      if (flag_values.count("scenario") && flag_values["scenario"] != positional) {
        throw ConfigError(kExitBadValue, "scenario", "conflicting scenario names");
      }
      flag_values["scenario"] = positional;
    }
    const RunConfig cfg = parse_config(file_values, flag_values);
    const ScenarioResult result = run_scenario(cfg);
    write_outputs(cfg, result);
    std::cout << cfg.output_path << ": " << result.table.rows.size() << " rows\n";
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "slq: config error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const slq::NumericalValidationError& e) {
    std::cerr << "slq: numerical validation failed: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "slq: invalid parameter: " << e.what() << "\n";
    return kExitBadValue;
  } catch (const std::exception& e) {
    std::cerr << "slq: " << e.what() << "\n";
    return 1;
  }
}
