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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnknownKey = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitBadValue = 4;
inline constexpr int kExitMissing = 5;

enum class Scenario {
  teleport_fidelity,
  bell_trace,
  collective_bath,
  cnot_time_resolved,
  cnot_noise_sweep,
  cnot_additivity,
  cnot_g0_sweep,
  mc_validate,
};

std::string scenario_name(Scenario s);
std::optional<Scenario> parse_scenario(const std::string& name);
const std::vector<Scenario>& all_scenarios();

/// A configuration problem. `exit_code` is one of kExitUnknownKey,
/// kExitBadValue or kExitMissing.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int exit_code, std::string key, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code), key_(std::move(key)) {}

  int exit_code() const { return exit_code_; }
  const std::string& key() const { return key_; }

 private:
  int exit_code_;
  std::string key_;
};

enum class ValueKind {
  real,          // any finite number
  nonneg_real,   // noise strengths, times
  positive_real, // field strengths, durations
  positive_int,
  nonneg_int,
  choice,
};

struct KeySpec {
  std::string name;
  std::string default_value;
  ValueKind kind;
  std::vector<std::string> choices;  // for ValueKind::choice
  std::string help;
};

/// Keys accepted by every scenario: scenario, out, seed.
const std::vector<KeySpec>& common_keys();
/// Scenario-specific keys with their defaults.
const std::vector<KeySpec>& scenario_keys(Scenario s);

/// Every key name accepted by at least one scenario.
std::vector<std::string> all_key_names();

/// Fully resolved and validated run configuration.
struct RunConfig {
  Scenario scenario;
  std::map<std::string, std::string> parameters;  // scenario keys only, defaults filled
  std::string output_path;
  std::uint64_t seed = 0;

  double real(const std::string& key) const;
  int integer(const std::string& key) const;
  const std::string& text(const std::string& key) const;
};

/// Reads `key = value` lines ('#' starts a comment). A file whose first
/// non-blank character is '{' is read as a JSON run sidecar, taking the
/// values from its "config" object.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Merges file values with flag values (flags win), rejects keys the
/// scenario does not accept, fills defaults and validates every value.
RunConfig parse_config(const std::map<std::string, std::string>& file_values,
                       const std::map<std::string, std::string>& flag_values);

/// Resolved key/value pairs including scenario, out and seed.
std::map<std::string, std::string> resolved_values(const RunConfig& cfg);

}  // namespace slq::cli
