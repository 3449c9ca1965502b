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

#include "qdiscord/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qdiscord {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

DensityMatrix state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("re") ||
      !j.contains("im")) {
    throw std::invalid_argument(
        "state file: expected an object with keys dims, re, im");
  }
  std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  long d = 1;
  for (int dk : dims) d *= dk;

  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() ||
      static_cast<long>(re.size()) != d || static_cast<long>(im.size()) != d) {
    throw std::invalid_argument(
        "state file: re/im must be d x d arrays matching dims");
  }
  Matrix m(d, d);
  for (long r = 0; r < d; ++r) {
    const auto& re_row = re.at(r);
    const auto& im_row = im.at(r);
    if (static_cast<long>(re_row.size()) != d ||
        static_cast<long>(im_row.size()) != d) {
      throw std::invalid_argument(
          "state file: re/im must be d x d arrays matching dims");
    }
    for (long c = 0; c < d; ++c) {
      m(r, c) = Cmplx(re_row.at(c).get<double>(), im_row.at(c).get<double>());
    }
  }
  return DensityMatrix(std::move(dims), std::move(m));
}

nlohmann::ordered_json state_to_json(const DensityMatrix& rho) {
  nlohmann::ordered_json j;
  j["dims"] = rho.dims();
  const long d = rho.dim();
  nlohmann::ordered_json re = nlohmann::ordered_json::array();
  nlohmann::ordered_json im = nlohmann::ordered_json::array();
  for (long r = 0; r < d; ++r) {
    nlohmann::ordered_json re_row = nlohmann::ordered_json::array();
    nlohmann::ordered_json im_row = nlohmann::ordered_json::array();
    for (long c = 0; c < d; ++c) {
      re_row.push_back(rho.matrix()(r, c).real());
      im_row.push_back(rho.matrix()(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

DensityMatrix load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open state file '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("state file '" + path +
                                "' is not valid JSON: " + e.what());
  }
  return state_from_json(j);
}

void save_state_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write state file '" + path + "'");
  }
  out << state_to_json(rho).dump(2) << "\n";
}

std::string partition_label(const Partition& p) {
  std::ostringstream out;
  const char* sep = p.n_parties() >= 10 ? "," : "";
  bool first = true;
  for (int k : p.indices()) {
    if (!first) out << sep;
    out << k;
    first = false;
  }
  return out.str();
}

Partition parse_partition_label(const std::string& label, int n_parties) {
  if (label.empty()) {
    throw std::invalid_argument("partition label is empty");
  }
  std::vector<int> indices;
  if (label.find(',') != std::string::npos) {
    std::stringstream ss(label);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) {
        throw std::invalid_argument("partition label '" + label +
                                    "' has an empty component");
      }
      indices.push_back(std::stoi(part));
    }
  } else if (n_parties <= 9) {
    for (char c : label) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("partition label '" + label +
                                    "' must be digits 1..9");
      }
      indices.push_back(c - '0');
    }
  } else {
    throw std::invalid_argument(
        "partition labels for 10 or more parties must be comma-separated");
  }
  return Partition(std::move(indices), n_parties);
}

RunReport make_run_report(const std::string& input_kind,
                          const std::string& input_value,
                          const std::vector<int>& dims,
                          const OptimizerConfig& cfg,
                          const std::vector<GammaDiscordResult>& results,
                          const std::vector<double>* wall_ms) {
  RunReport report;
  report.input_kind = input_kind;
  report.input_value = input_value;
  report.dims = dims;
  report.seed = cfg.master_seed;
  report.restarts = cfg.restarts;
  report.max_iterations = cfg.max_iterations;
  report.objective_tolerance = cfg.objective_tolerance;
  report.initial_step = cfg.initial_step;

  std::size_t best = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const GammaDiscordResult& g = results[i];
    GammaReportEntry entry;
    entry.partition = partition_label(g.gamma);
    entry.value = g.value;
    entry.restart_values = g.restart_values;
    entry.evaluations = g.evaluations;
    entry.best_angles = g.best_params;
    if (wall_ms != nullptr) entry.wall_ms = (*wall_ms)[i];
    report.partitions.push_back(std::move(entry));
    if (g.value < results[best].value) best = i;
  }
  report.genuine_value = results[best].value;
  report.argmin_partition = partition_label(results[best].gamma);
  return report;
}

nlohmann::ordered_json report_to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["input"] = {{"kind", report.input_kind}, {"value", report.input_value}};
  j["dims"] = report.dims;
  nlohmann::ordered_json cfg;
  cfg["seed"] = report.seed;
  if (report.restarts.has_value()) {
    cfg["restarts"] = *report.restarts;
  } else {
    cfg["restarts"] = nullptr;
  }
  cfg["max_iterations"] = report.max_iterations;
  cfg["objective_tolerance"] = report.objective_tolerance;
  cfg["initial_step"] = report.initial_step;
  j["config"] = std::move(cfg);

  nlohmann::ordered_json parts = nlohmann::ordered_json::array();
  for (const GammaReportEntry& g : report.partitions) {
    nlohmann::ordered_json entry;
    entry["partition"] = g.partition;
    entry["value"] = g.value;
    entry["restart_values"] = g.restart_values;
    entry["evaluations"] = g.evaluations;
    entry["best_angles"] = g.best_angles;
    if (g.wall_ms.has_value()) entry["wall_ms"] = *g.wall_ms;
    parts.push_back(std::move(entry));
  }
  j["partitions"] = std::move(parts);
  j["genuine_value"] = report.genuine_value;
  j["argmin_partition"] = report.argmin_partition;
  return j;
}

RunReport report_from_json(const nlohmann::json& j) {
  RunReport report;
  report.input_kind = j.at("input").at("kind").get<std::string>();
  report.input_value = j.at("input").at("value").get<std::string>();
  report.dims = j.at("dims").get<std::vector<int>>();
  const auto& cfg = j.at("config");
  report.seed = cfg.at("seed").get<std::uint64_t>();
  if (!cfg.at("restarts").is_null()) {
    report.restarts = cfg.at("restarts").get<int>();
  }
  report.max_iterations = cfg.at("max_iterations").get<int>();
  report.objective_tolerance = cfg.at("objective_tolerance").get<double>();
  report.initial_step = cfg.at("initial_step").get<double>();
  for (const auto& p : j.at("partitions")) {
    GammaReportEntry entry;
    entry.partition = p.at("partition").get<std::string>();
    entry.value = p.at("value").get<double>();
    entry.restart_values = p.at("restart_values").get<std::vector<double>>();
    entry.evaluations = p.at("evaluations").get<long>();
    entry.best_angles = p.at("best_angles").get<std::vector<double>>();
    if (p.contains("wall_ms")) entry.wall_ms = p.at("wall_ms").get<double>();
    report.partitions.push_back(std::move(entry));
  }
  report.genuine_value = j.at("genuine_value").get<double>();
  report.argmin_partition = j.at("argmin_partition").get<std::string>();
  return report;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string report_to_csv(const RunReport& report) {
  std::ostringstream out;
  out << "partition,value,restart_min,restart_max,evaluations\n";
  for (const GammaReportEntry& g : report.partitions) {
    const auto [lo, hi] = std::minmax_element(g.restart_values.begin(),
                                              g.restart_values.end());
    out << csv_escape(g.partition) << "," << format_double(g.value) << ","
        << format_double(*lo) << "," << format_double(*hi) << ","
        << g.evaluations << "\n";
  }
  return out.str();
}

std::string report_to_table(const RunReport& report) {
  std::ostringstream out;
  out << "input: " << report.input_kind << " " << report.input_value << "\n";
  out << "dims:";
  for (int d : report.dims) out << " " << d;
  out << "\nseed: " << report.seed;
  if (report.restarts.has_value()) {
    out << "  restarts: " << *report.restarts;
  } else {
    out << "  restarts: auto";
  }
  out << "  max-iters: " << report.max_iterations
      << "  tol: " << report.objective_tolerance << "\n\n";
  out << std::left << std::setw(12) << "partition" << std::right
      << std::setw(16) << "value (bits)" << std::setw(16) << "spread"
      << std::setw(12) << "evals";
  bool any_time = false;
  for (const auto& g : report.partitions) any_time |= g.wall_ms.has_value();
  if (any_time) out << std::setw(12) << "wall (ms)";
  out << "\n";
  for (const GammaReportEntry& g : report.partitions) {
    const auto [lo, hi] = std::minmax_element(g.restart_values.begin(),
                                              g.restart_values.end());
    out << std::left << std::setw(12) << g.partition << std::right
        << std::setw(16) << std::fixed << std::setprecision(9) << g.value
        << std::setw(16) << std::scientific << std::setprecision(2)
        << (*hi - *lo) << std::setw(12) << g.evaluations;
    if (g.wall_ms.has_value()) {
      out << std::setw(12) << std::fixed << std::setprecision(1) << *g.wall_ms;
    }
    out << "\n";
    out.unsetf(std::ios::floatfield);
  }
  out << "\ngenuine discord: " << std::fixed << std::setprecision(9)
      << report.genuine_value << " bits (argmin partition "
      << report.argmin_partition << ")\n";
  return out.str();
}

}  // namespace qdiscord
