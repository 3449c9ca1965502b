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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qdiscord/measurement.hpp"
#include "qdiscord/qcore.hpp"

namespace qdiscord {

// Reported discord values in [kReportClipFloor, 0) are certified numerical
// noise (the exact quantity is non-negative) and are clipped to 0; anything
// below the floor raises a numerical-integrity error.
inline constexpr double kReportClipFloor = -1e-7;

/// Settings for the multistart derivative-free minimization over
/// measurement bases.
struct OptimizerConfig {
  /// Restarts per minimization. Unset means automatic: 16, raised to 48
  /// when the measured subsystem has dimension >= 4 (the angle chart then
  /// has 12+ parameters and a single simplex stalls measurably).
  std::optional<int> restarts;
  int max_iterations = 2000;
  double objective_tolerance = 1e-9;
  /// Initial simplex edge length, radians.
  double initial_step = 0.3;
  std::uint64_t master_seed = 0;

  int effective_restarts(int measured_dim) const;
  void validate() const;
};

/// Outcome of one multistart minimization.
struct MinimizeResult {
  double best_value = 0.0;
  MeasurementParams best_params;
  /// Final value of each restart, in restart order.
  std::vector<double> restart_values;
  /// Total objective evaluations across restarts.
  long evaluations = 0;
  /// Smallest raw objective value seen during the whole search, including
  /// intermediate simplex points (non-negativity audit).
  double min_objective_seen = 0.0;
};

/// Multistart Nelder-Mead descent over measurement-basis angles for an
/// m-dimensional measured subsystem. Restart i draws its starting point
/// from a stream seeded with derive_seed(cfg.master_seed, i): theta =
/// arcsin(sqrt(u)) (Haar-adjacent for two-level rotations) and phi uniform
/// in [0, 2pi). The result is deterministic for a fixed master seed, with
/// exact-value ties broken by the lowest restart index.
MinimizeResult minimize_over_bases(
    const std::function<double(const MeasurementParams&)>& objective, int m,
    const OptimizerConfig& cfg);

/// Single-measurement discord objective
///   S(rho || Phi_full(rho)) - S(rho_gamma || Phi_reduced(rho_gamma)),
/// evaluated through the dephasing identity S(rho || Phi(rho)) =
/// S(Phi(rho)) - S(rho), which is exact for projective dephasing and free
/// of support-boundary noise. Non-negative (up to eigensolver noise) for
/// every measurement, not only at the optimum.
double gamma_discord_objective(const DensityMatrix& rho,
                               const Partition& gamma,
                               const ProjectiveMeasurement& meas);

/// Discord of one partition: the objective minimized over measurement
/// bases on the factors in gamma.
struct GammaDiscordResult {
  Partition gamma;
  /// Minimum over restarts, clipped to 0 inside [-1e-7, 0). Equals
  /// min(restart_values).
  double value = 0.0;
  MeasurementParams best_params;
  ProjectiveMeasurement best_basis;
  std::vector<double> restart_values;
  long evaluations = 0;
  double min_objective_seen = 0.0;
};

GammaDiscordResult gamma_discord(const DensityMatrix& rho,
                                 const Partition& gamma,
                                 const OptimizerConfig& cfg);

/// Genuine multipartite discord: gamma_discord for every nonempty proper
/// subset (2^N - 2 of them, both gamma and its complement counted), and the
/// minimum over them.
struct DiscordReport {
  std::vector<GammaDiscordResult> per_gamma;
  double genuine_value = 0.0;
  Partition argmin_gamma;
};

DiscordReport genuine_discord(const DensityMatrix& rho,
                              const OptimizerConfig& cfg);

/// Two-party symmetric discord: min over measuring factor 1 or factor 2.
/// Coincides with genuine_discord for N = 2 (identical seeds give identical
/// values).
double symmetric_discord(const DensityMatrix& rho, const OptimizerConfig& cfg);

/// Measurement-induced mutual information J = S(rho_A) - sum_j p_j
/// S(rho_{A|j}) for a measurement on factor 2 of a two-factor state.
double measured_mutual_information(const DensityMatrix& rho,
                                   const ProjectiveMeasurement& meas_on_b);

/// Classical correlations: J maximized over measurement bases on factor 2
/// (run as minimization of the negation through the same optimizer).
double classical_correlations_oz(const DensityMatrix& rho,
                                 const OptimizerConfig& cfg);

/// Two-party discord, mutual information minus classical correlations;
/// clipped to 0 inside [-1e-7, 0) at reporting.
double oz_discord(const DensityMatrix& rho, const OptimizerConfig& cfg);

struct ClassicalWitness {
  Partition gamma;
  MeasurementParams params;
  ProjectiveMeasurement basis;
};

struct ClassicalityResult {
  bool classical = false;
  double genuine_value = 0.0;
  /// A partition + basis whose dephasing leaves the state fixed entrywise
  /// within 10*sqrt(tol). Present when such a verified witness exists among
  /// the per-partition minimizers; a state can test classical by value while
  /// no candidate passes verification (degenerate optima), in which case the
  /// witness is empty.
  std::optional<ClassicalWitness> witness;
  DiscordReport report;
};

/// A state is genuinely classical when its genuine discord is <= tol: some
/// local dephasing leaves it undisturbed.
ClassicalityResult is_classical(const DensityMatrix& rho,
                                const OptimizerConfig& cfg, double tol = 1e-5);

}  // namespace qdiscord
