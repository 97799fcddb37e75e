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

#include <map>
#include <string>
#include <vector>

#include "slq/config.hpp"

namespace slq::cli {

/// Pre-formatted CSV table.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct ScenarioResult {
  Table table;
  /// Scalar by-products written to the sidecar only (e.g. critical_time).
  std::map<std::string, double> summary;
};

/// %.12g; the only number format used in outputs.
std::string format_number(double v);

/// Runs the configured scenario. Invalid parameter combinations throw
/// ConfigError; failed state validation throws NumericalValidationError.
ScenarioResult run_scenario(const RunConfig& cfg);

std::string render_csv(const Table& table);

/// JSON record of the resolved configuration; read_config_file accepts it
/// back and reproduces the same CSV.
std::string render_sidecar(const RunConfig& cfg, const ScenarioResult& result);

/// Writes cfg.output_path and cfg.output_path + ".json", each through a
/// temporary file and a rename.
void write_outputs(const RunConfig& cfg, const ScenarioResult& result);

const char* version();

}  // namespace slq::cli
