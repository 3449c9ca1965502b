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

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdiscord/discord.hpp"
#include "qdiscord/io.hpp"
#include "qdiscord/states.hpp"

namespace {

using namespace qdiscord;

struct InputOptions {
  std::string state_path;
  std::string family_spec;
};

struct RunOptions {
  std::optional<int> restarts;
  int max_iters = 2000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string format = "table";
  std::string out_path;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* state = cmd->add_option("--state", in.state_path,
                                "density-matrix JSON file (dims/re/im)");
  auto* family = cmd->add_option(
      "--family", in.family_spec,
      "state family, e.g. bell, ghz:n=3, werner:z=0.7, random:2x2,rank=4");
  state->excludes(family);
  family->excludes(state);
}

void add_run_options(CLI::App* cmd, RunOptions& run) {
  cmd->add_option("--restarts", run.restarts,
                  "optimizer restarts per partition (default: 16, or 48 for "
                  "measured dimension >= 4)");
  cmd->add_option("--max-iters", run.max_iters,
                  "max simplex iterations per restart");
  cmd->add_option("--tol", run.tol, "objective convergence tolerance");
  cmd->add_option("--seed", run.seed, "master seed for all randomness");
  cmd->add_option("--format", run.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--out", run.out_path, "write output to a file");
}

// Loads the state; for random families the master seed doubles as the
// state seed unless the spec pins one.
std::pair<DensityMatrix, std::pair<std::string, std::string>> resolve_input(
    const InputOptions& in, std::uint64_t seed) {
  if (!in.state_path.empty()) {
    return {load_state_file(in.state_path), {"state-file", in.state_path}};
  }
  if (!in.family_spec.empty()) {
    StateFamilySpec spec = parse_family_spec(in.family_spec);
    if (!spec.seed.has_value()) spec.seed = seed;
    return {make_state(spec), {"family", in.family_spec}};
  }
  throw std::invalid_argument("exactly one of --state or --family is required");
}

OptimizerConfig make_config(const RunOptions& run) {
  OptimizerConfig cfg;
  cfg.restarts = run.restarts;
  cfg.max_iterations = run.max_iters;
  cfg.objective_tolerance = run.tol;
  cfg.master_seed = run.seed;
  cfg.validate();
  return cfg;
}

void emit(const std::string& text, const RunOptions& run) {
  if (run.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(run.out_path);
    if (!out) {
      throw std::runtime_error("cannot write output file '" + run.out_path +
                               "'");
    }
    out << text;
  }
}

std::string render_report(const RunReport& report, const RunOptions& run) {
  if (run.format == "json") return report_to_json(report).dump(2) + "\n";
  if (run.format == "csv") return report_to_csv(report);
  return report_to_table(report);
}

int cmd_compute(const InputOptions& in, const RunOptions& run,
                const std::string& partition_label_arg, bool timings) {
  auto [rho, descriptor] = resolve_input(in, run.seed);
  const OptimizerConfig cfg = make_config(run);

  std::vector<Partition> partitions;
  if (!partition_label_arg.empty()) {
    partitions.push_back(
        parse_partition_label(partition_label_arg, rho.n_parties()));
  } else {
    partitions = Partition::all_proper(rho.n_parties());
  }

  std::vector<GammaDiscordResult> results;
  std::vector<double> wall_ms;
  for (const Partition& gamma : partitions) {
    const auto t0 = std::chrono::steady_clock::now();
    results.push_back(gamma_discord(rho, gamma, cfg));
    const auto t1 = std::chrono::steady_clock::now();
    wall_ms.push_back(
        std::chrono::duration<double, std::milli>(t1 - t0).count());
  }

  const RunReport report =
      make_run_report(descriptor.first, descriptor.second, rho.dims(), cfg,
                      results, timings ? &wall_ms : nullptr);
  emit(render_report(report, run), run);
  return 0;
}

int cmd_sweep(const std::string& family_arg, const RunOptions& run,
              double from, double to, int steps) {
  StateFamilySpec spec = parse_family_spec(family_arg);
  std::string param;
  if (!sweep_parameter(spec, param)) {
    throw std::invalid_argument("family '" + spec.family +
                                "' has no sweepable parameter");
  }
  if (steps < 1) throw std::invalid_argument("--steps must be >= 1");
  if (!spec.seed.has_value()) spec.seed = run.seed;
  const OptimizerConfig cfg = make_config(run);

  std::ostringstream csv;
  bool header_done = false;
  for (int t = 0; t < steps; ++t) {
    const double value =
        steps == 1 ? from : from + (to - from) * t / double(steps - 1);
    spec.params[param] = value;
    const DensityMatrix rho = make_state(spec);
    const DiscordReport report = genuine_discord(rho, cfg);
    if (!header_done) {
      csv << param;
      for (const auto& g : report.per_gamma) {
        csv << "," << csv_escape("D_" + partition_label(g.gamma));
      }
      csv << ",genuine\n";
      header_done = true;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    csv << buf;
    for (const auto& g : report.per_gamma) {
      std::snprintf(buf, sizeof(buf), "%.17g", g.value);
      csv << "," << buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", report.genuine_value);
    csv << "," << buf << "\n";
  }
  emit(csv.str(), run);
  return 0;
}

int cmd_classify(const InputOptions& in, const RunOptions& run,
                 double classical_tol) {
  auto [rho, descriptor] = resolve_input(in, run.seed);
  const OptimizerConfig cfg = make_config(run);
  const ClassicalityResult result = is_classical(rho, cfg, classical_tol);

  std::ostringstream out;
  if (run.format == "json") {
    nlohmann::ordered_json j;
    j["input"] = {{"kind", descriptor.first}, {"value", descriptor.second}};
    j["classical"] = result.classical;
    j["genuine_value"] = result.genuine_value;
    j["tolerance"] = classical_tol;
    if (result.witness.has_value()) {
      j["witness"] = {{"partition", partition_label(result.witness->gamma)},
                      {"basis_angles", result.witness->params}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << (result.classical ? "classical" : "nonclassical")
        << " (genuine discord " << result.genuine_value << " bits, tolerance "
        << classical_tol << ")\n";
    if (result.witness.has_value()) {
      out << "witness partition: " << partition_label(result.witness->gamma)
          << "\nwitness basis angles:";
      for (double a : result.witness->params) out << " " << a;
      out << "\n";
    }
  }
  emit(out.str(), run);
  return result.classical ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genuine multipartite quantum discord of finite-dimensional "
               "density matrices"};
  app.require_subcommand(1);

  InputOptions compute_in;
  RunOptions compute_run;
  std::string compute_partition;
  bool compute_all = false;
  bool compute_timings = false;
  auto* compute = app.add_subcommand(
      "compute", "per-partition and genuine discord of one state");
  add_input_options(compute, compute_in);
  add_run_options(compute, compute_run);
  compute->add_option("--partition", compute_partition,
                      "restrict to one partition label, e.g. 1 or 23");
  compute->add_flag("--all-partitions", compute_all,
                    "measure every partition (default)");
  compute->add_flag("--timings", compute_timings,
                    "include per-partition wall time in the report (makes "
                    "reports non-reproducible byte-for-byte)");

  std::string sweep_family;
  RunOptions sweep_run;
  double sweep_from = 0.0, sweep_to = 1.0;
  int sweep_steps = 11;
  auto* sweep = app.add_subcommand(
      "sweep", "genuine discord along a one-parameter family, CSV output");
  sweep->add_option("--family", sweep_family, "sweepable family (werner, "
                    "depolarized-ghz)")->required();
  add_run_options(sweep, sweep_run);
  sweep->add_option("--from", sweep_from, "first parameter value");
  sweep->add_option("--to", sweep_to, "last parameter value");
  sweep->add_option("--steps", sweep_steps, "number of grid points");

  InputOptions classify_in;
  RunOptions classify_run;
  double classify_tol = 1e-5;
  auto* classify = app.add_subcommand(
      "classify", "decide whether a state is genuinely classical");
  add_input_options(classify, classify_in);
  add_run_options(classify, classify_run);
  classify->add_option("--classical-tol", classify_tol,
                       "discord threshold for classicality");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      return cmd_compute(compute_in, compute_run, compute_partition,
                         compute_timings);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_family, sweep_run, sweep_from, sweep_to,
                       sweep_steps);
    }
    if (classify->parsed()) {
      return cmd_classify(classify_in, classify_run, classify_tol);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
