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

#include "qdiscord/discord.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "qdiscord/entropy.hpp"
#include "qdiscord/rng.hpp"

namespace qdiscord {

namespace {

double clip_reported(double value, const char* what) {
  if (value < kReportClipFloor) {
    std::ostringstream msg;
    msg << "numerical-integrity: " << what << " = " << value
        << " is below the certified noise floor " << kReportClipFloor;
    throw std::runtime_error(msg.str());
  }
  return value < 0.0 ? 0.0 : value;
}

// Per-partition objective evaluator. The state is permuted once so the
// measured factors occupy the most significant digits; each evaluation then
// only touches the m x m grid of r x r blocks. With basis B, the channel
// output is block-diagonal in the rotated frame, so
//   S(Phi_full(rho))    = entropy of the union of block spectra,
//   S(Phi_reduced(rho_gamma)) = H(block traces),
// and the objective is the documented entropy-difference form.
class GammaObjective {
 public:
  GammaObjective(const DensityMatrix& rho, const Partition& gamma) {
    const auto perm = gamma_front_permutation(gamma);
    const DensityMatrix front = permute_systems(rho, perm);
    m_ = 1;
    for (int k : gamma.indices()) m_ *= rho.dims()[k - 1];
    r_ = front.dim() / m_;
    front_ = front.matrix();
    s_rho_ = von_neumann_entropy(rho);
    s_rho_gamma_ = von_neumann_entropy(partial_trace(rho, gamma));
  }

  int measured_dim() const { return m_; }

  double evaluate_basis(const Matrix& basis) const {
    double s_phi = 0.0;
    double h_p = 0.0;
    Matrix block(r_, r_);
    Eigen::SelfAdjointEigenSolver<Matrix> solver;
    for (int k = 0; k < m_; ++k) {
      block.setZero();
      for (int a = 0; a < m_; ++a) {
        const Cmplx ca = std::conj(basis(a, k));
        for (int b = 0; b < m_; ++b) {
          block.noalias() +=
              (ca * basis(b, k)) * front_.block(a * r_, b * r_, r_, r_);
        }
      }
      const double p = block.trace().real();
      if (p > kOutcomeProbCutoff) h_p -= p * std::log2(p);
      solver.compute(block, Eigen::EigenvaluesOnly);
      for (int i = 0; i < r_; ++i) {
        const double lambda = solver.eigenvalues()(i);
        if (lambda > 0.0) {
          s_phi -= lambda * std::log2(lambda);
        } else if (lambda < kEntropyEigClip) {
          std::ostringstream msg;
          msg << "numerical-integrity: dephased block eigenvalue " << lambda
              << " below " << kEntropyEigClip;
          throw std::runtime_error(msg.str());
        }
      }
    }
    return (s_phi - s_rho_) - (h_p - s_rho_gamma_);
  }

  double evaluate_params(const MeasurementParams& params) const {
    return evaluate_basis(basis_from_params(m_, params).basis());
  }

 private:
  int m_ = 0;
  int r_ = 0;
  Matrix front_;
  double s_rho_ = 0.0;
  double s_rho_gamma_ = 0.0;
};

struct SimplexOutcome {
  double best_value;
  std::vector<double> best_point;
};

// Nelder-Mead with the standard coefficients (reflect 1, expand 2,
// contract 0.5, shrink 0.5), stopping when the simplex value spread falls
// below `tolerance` or after `max_iterations` transforms.
SimplexOutcome nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& start, double step, int max_iterations,
    double tolerance) {
  const int n = static_cast<int>(start.size());
  std::vector<std::vector<double>> pts(n + 1, start);
  std::vector<double> fv(n + 1);
  for (int i = 1; i <= n; ++i) pts[i][i - 1] += step;
  for (int i = 0; i <= n; ++i) fv[i] = f(pts[i]);

  auto sort_simplex = [&]() {
    std::vector<int> idx(n + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> pts2(n + 1);
    std::vector<double> fv2(n + 1);
    for (int i = 0; i <= n; ++i) {
      pts2[i] = std::move(pts[idx[i]]);
      fv2[i] = fv[idx[i]];
    }
    pts = std::move(pts2);
    fv = std::move(fv2);
  };

  std::vector<double> centroid(n), candidate(n);
  for (int iter = 0; iter < max_iterations; ++iter) {
    sort_simplex();
    if (fv[n] - fv[0] <= tolerance) break;

    for (int k = 0; k < n; ++k) {
      double c = 0.0;
      for (int i = 0; i < n; ++i) c += pts[i][k];
      centroid[k] = c / n;
    }

    for (int k = 0; k < n; ++k) candidate[k] = 2.0 * centroid[k] - pts[n][k];
    const double fr = f(candidate);

    if (fr < fv[0]) {
      std::vector<double> expanded(n);
      for (int k = 0; k < n; ++k) {
        expanded[k] = centroid[k] + 2.0 * (candidate[k] - centroid[k]);
      }
      const double fe = f(expanded);
      if (fe < fr) {
        pts[n] = std::move(expanded);
        fv[n] = fe;
      } else {
        pts[n] = candidate;
        fv[n] = fr;
      }
    } else if (fr < fv[n - 1]) {
      pts[n] = candidate;
      fv[n] = fr;
    } else {
      const bool outside = fr < fv[n];
      std::vector<double> contracted(n);
      if (outside) {
        for (int k = 0; k < n; ++k) {
          contracted[k] = centroid[k] + 0.5 * (candidate[k] - centroid[k]);
        }
      } else {
        for (int k = 0; k < n; ++k) {
          contracted[k] = centroid[k] + 0.5 * (pts[n][k] - centroid[k]);
        }
      }
      const double fc = f(contracted);
      if (fc < (outside ? fr : fv[n])) {
        pts[n] = std::move(contracted);
        fv[n] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          for (int k = 0; k < n; ++k) {
            pts[i][k] = pts[0][k] + 0.5 * (pts[i][k] - pts[0][k]);
          }
          fv[i] = f(pts[i]);
        }
      }
    }
  }

  sort_simplex();
  return SimplexOutcome{fv[0], pts[0]};
}

}  // namespace

int OptimizerConfig::effective_restarts(int measured_dim) const {
  if (restarts.has_value()) return *restarts;
  return measured_dim >= 4 ? 48 : 16;
}

void OptimizerConfig::validate() const {
  if (restarts.has_value() && *restarts < 1) {
    throw std::invalid_argument("OptimizerConfig: restarts must be >= 1");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("OptimizerConfig: max_iterations must be >= 1");
  }
  if (objective_tolerance <= 0.0 || initial_step <= 0.0) {
    throw std::invalid_argument(
        "OptimizerConfig: tolerances and step must be positive");
  }
}

MinimizeResult minimize_over_bases(
    const std::function<double(const MeasurementParams&)>& objective, int m,
    const OptimizerConfig& cfg) {
  cfg.validate();
  if (m < 2) {
    throw std::invalid_argument("minimize_over_bases: dimension must be >= 2");
  }
  const int n = measurement_param_count(m);
  const int restarts = cfg.effective_restarts(m);

  MinimizeResult result;
  result.min_objective_seen = std::numeric_limits<double>::infinity();
  result.restart_values.reserve(restarts);

  auto counted = [&](const std::vector<double>& x) {
    const double v = objective(x);
    ++result.evaluations;
    if (v < result.min_objective_seen) result.min_objective_seen = v;
    return v;
  };

  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < restarts; ++i) {
    Rng rng(derive_seed(cfg.master_seed, static_cast<std::uint64_t>(i)));
    std::vector<double> x0(n);
    for (int pair = 0; pair < n / 2; ++pair) {
      x0[2 * pair] = std::asin(std::sqrt(rng.uniform()));
      x0[2 * pair + 1] = 2.0 * M_PI * rng.uniform();
    }
    const SimplexOutcome out = nelder_mead(
        counted, x0, cfg.initial_step, cfg.max_iterations,
        cfg.objective_tolerance);
    result.restart_values.push_back(out.best_value);
    if (out.best_value < best) {
      best = out.best_value;
      result.best_params = out.best_point;
    }
  }
  result.best_value = best;
  return result;
}

double gamma_discord_objective(const DensityMatrix& rho,
                               const Partition& gamma,
                               const ProjectiveMeasurement& meas) {
  GammaObjective objective(rho, gamma);
  if (meas.dim() != objective.measured_dim()) {
    std::ostringstream msg;
    msg << "gamma_discord_objective: measurement dim " << meas.dim()
        << " does not match measured-subsystem dim "
        << objective.measured_dim();
    throw std::invalid_argument(msg.str());
  }
  return objective.evaluate_basis(meas.basis());
}

GammaDiscordResult gamma_discord(const DensityMatrix& rho,
                                 const Partition& gamma,
                                 const OptimizerConfig& cfg) {
  const GammaObjective objective(rho, gamma);
  MinimizeResult res = minimize_over_bases(
      [&](const MeasurementParams& x) { return objective.evaluate_params(x); },
      objective.measured_dim(), cfg);

  // Clip at the reporting boundary. clip(min(raw)) == min(clipped) here
  // (clipping only collapses the [-1e-7, 0) band onto 0, and a negative
  // raw minimum means the clipped minimum is that same restart's 0), so
  // value == min(restart_values) and the returned params still attain the
  // reported value under the same reporting rule.
  std::vector<double> clipped = res.restart_values;
  for (double& v : clipped) v = clip_reported(v, "gamma-discord restart value");
  const double value = clip_reported(res.best_value, "gamma-discord value");

  return GammaDiscordResult{gamma,
                            value,
                            res.best_params,
                            basis_from_params(objective.measured_dim(),
                                              res.best_params),
                            std::move(clipped),
                            res.evaluations,
                            res.min_objective_seen};
}

DiscordReport genuine_discord(const DensityMatrix& rho,
                              const OptimizerConfig& cfg) {
  if (rho.n_parties() < 2) {
    throw std::invalid_argument(
        "genuine_discord: state must have at least 2 parties");
  }
  const auto partitions = Partition::all_proper(rho.n_parties());
  std::vector<GammaDiscordResult> per_gamma;
  per_gamma.reserve(partitions.size());
  for (const Partition& gamma : partitions) {
    per_gamma.push_back(gamma_discord(rho, gamma, cfg));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < per_gamma.size(); ++i) {
    if (per_gamma[i].value < per_gamma[best].value) best = i;
  }
  const double genuine = per_gamma[best].value;
  const Partition argmin = per_gamma[best].gamma;
  return DiscordReport{std::move(per_gamma), genuine, argmin};
}

double symmetric_discord(const DensityMatrix& rho,
                         const OptimizerConfig& cfg) {
  if (rho.n_parties() != 2) {
    throw std::invalid_argument(
        "symmetric_discord: state must have exactly 2 factors");
  }
  return genuine_discord(rho, cfg).genuine_value;
}

double measured_mutual_information(const DensityMatrix& rho,
                                   const ProjectiveMeasurement& meas_on_b) {
  if (rho.n_parties() != 2) {
    throw std::invalid_argument(
        "measured_mutual_information: state must have exactly 2 factors");
  }
  const DensityMatrix rho_a = partial_trace(rho, Partition({1}, 2));
  const auto outcomes =
      measurement_statistics(rho, Partition({2}, 2), meas_on_b);
  double conditional = 0.0;
  for (const MeasurementOutcome& o : outcomes) {
    if (o.conditional.has_value()) {
      conditional += o.probability * von_neumann_entropy(*o.conditional);
    }
  }
  return von_neumann_entropy(rho_a) - conditional;
}

double classical_correlations_oz(const DensityMatrix& rho,
                                 const OptimizerConfig& cfg) {
  if (rho.n_parties() != 2) {
    throw std::invalid_argument(
        "classical_correlations_oz: state must have exactly 2 factors");
  }
  const int m = rho.dims()[1];
  const MinimizeResult res = minimize_over_bases(
      [&](const MeasurementParams& x) {
        return -measured_mutual_information(rho, basis_from_params(m, x));
      },
      m, cfg);
  return -res.best_value;
}

double oz_discord(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  const double value =
      mutual_information(rho) - classical_correlations_oz(rho, cfg);
  return clip_reported(value, "two-party discord");
}

ClassicalityResult is_classical(const DensityMatrix& rho,
                                const OptimizerConfig& cfg, double tol) {
  if (tol <= 0.0) {
    throw std::invalid_argument("is_classical: tolerance must be positive");
  }
  DiscordReport report = genuine_discord(rho, cfg);
  const bool classical = report.genuine_value <= tol;

  std::optional<ClassicalWitness> witness;
  if (classical) {
    const double fixed_point_tol = 10.0 * std::sqrt(tol);
    // argmin first, then the remaining sub-threshold partitions in order
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < report.per_gamma.size(); ++i) {
      if (report.per_gamma[i].gamma == report.argmin_gamma) {
        candidates.push_back(i);
      }
    }
    for (std::size_t i = 0; i < report.per_gamma.size(); ++i) {
      if (!(report.per_gamma[i].gamma == report.argmin_gamma)) {
        candidates.push_back(i);
      }
    }
    for (std::size_t i : candidates) {
      const GammaDiscordResult& g = report.per_gamma[i];
      if (g.value > tol) continue;
      const DensityMatrix dephased =
          apply_channel_full(rho, g.gamma, g.best_basis);
      const double deviation =
          (rho.matrix() - dephased.matrix()).cwiseAbs().maxCoeff();
      if (deviation <= fixed_point_tol) {
        witness = ClassicalWitness{g.gamma, g.best_params, g.best_basis};
        break;
      }
    }
  }
  return ClassicalityResult{classical, report.genuine_value,
                            std::move(witness), std::move(report)};
}

}  // namespace qdiscord
