// Copyright 2026 The qdiscord Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdiscord/discord.hpp"
#include "qdiscord/qcore.hpp"

namespace qdiscord {

// State files are JSON objects {"dims": [...], "re": [[...]], "im": [[...]]}
// with the matrix split into real and imaginary d x d arrays, row-major,
// subsystem 1 most significant. Parsing validates the full DensityMatrix
// contract and reports the violated invariant by name.
DensityMatrix load_state_file(const std::string& path);
void save_state_file(const std::string& path, const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);
nlohmann::ordered_json state_to_json(const DensityMatrix& rho);

/// Partition label in concatenated-digit style for N <= 9 ("1", "23") and
/// comma-separated for N >= 10 ("1,12").
std::string partition_label(const Partition& p);
Partition parse_partition_label(const std::string& label, int n_parties);

/// One partition's results inside a run report.
struct GammaReportEntry {
  std::string partition;
  double value = 0.0;
  std::vector<double> restart_values;
  long evaluations = 0;
  std::vector<double> best_angles;
  std::optional<double> wall_ms;  // present only when timing was requested
};

/// Machine-readable record of one compute run: input descriptor, config
/// echo, per-partition results and the minimum. Round-trips losslessly
/// through JSON.
struct RunReport {
  std::string input_kind;  // "family" | "state-file"
  std::string input_value;
  std::vector<int> dims;
  std::uint64_t seed = 0;
  std::optional<int> restarts;  // empty = automatic (16 / 48)
  int max_iterations = 2000;
  double objective_tolerance = 1e-9;
  double initial_step = 0.3;
  std::vector<GammaReportEntry> partitions;
  double genuine_value = 0.0;
  std::string argmin_partition;
};

RunReport make_run_report(const std::string& input_kind,
                          const std::string& input_value,
                          const std::vector<int>& dims,
                          const OptimizerConfig& cfg,
                          const std::vector<GammaDiscordResult>& results,
                          const std::vector<double>* wall_ms);

nlohmann::ordered_json report_to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

std::string report_to_csv(const RunReport& report);
std::string report_to_table(const RunReport& report);

/// RFC-style CSV field quoting (quotes fields containing comma, quote or
/// newline).
std::string csv_escape(const std::string& field);

}  // namespace qdiscord
