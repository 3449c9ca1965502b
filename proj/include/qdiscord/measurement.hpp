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
#include <vector>

#include "qdiscord/qcore.hpp"

namespace qdiscord {

inline constexpr double kBasisOrthoTol = 1e-10;

// Outcomes with probability at or below this are flagged and excluded from
// conditional-entropy sums (the 0 log 0 convention lifted to outcomes).
inline constexpr double kOutcomeProbCutoff = 1e-12;

/// A complete set of rank-1 orthogonal projectors {|b_j><b_j|} on an
/// m-dimensional subsystem, represented by the orthonormal basis whose
/// columns are the measurement vectors. Columns must be orthonormal within
/// 1e-10; completeness sum_j |b_j><b_j| = I follows for a square basis.
class ProjectiveMeasurement {
 public:
  explicit ProjectiveMeasurement(Matrix basis);

  int dim() const { return static_cast<int>(basis_.rows()); }
  const Matrix& basis() const { return basis_; }

 private:
  Matrix basis_;
};

/// Real angles parametrizing a measurement basis: for each index pair
/// (i < j) in lexicographic order, one (theta, phi) pair of a two-level
/// rotation, interleaved as [theta_01, phi_01, theta_02, phi_02, ...].
/// Length is exactly m(m-1): a minimal chart of the bases modulo the
/// per-column phases that rank-1 projectors ignore.
using MeasurementParams = std::vector<double>;

constexpr int measurement_param_count(int m) { return m * (m - 1); }

/// Basis as the ordered product of two-level rotations applied to the
/// identity: start from I and right-multiply, for each pair (i < j) in
/// lexicographic order, the rotation acting on columns i, j as
///   col_i <- cos(theta) col_i + e^{+i phi} sin(theta) col_j
///   col_j <- -e^{-i phi} sin(theta) col_i + cos(theta) col_j.
/// All-zero params give the computational basis.
ProjectiveMeasurement basis_from_params(int m, const MeasurementParams& params);

/// Non-selective measurement on the factors in `gamma`, identity elsewhere:
///   rho -> sum_k (I ⊗ Pi_k) rho (I ⊗ Pi_k),
/// realized by permuting gamma to the front, erasing the off-diagonal
/// blocks in the measurement basis, and permuting back. Trace-preserving
/// and idempotent.
DensityMatrix apply_channel_full(const DensityMatrix& rho,
                                 const Partition& gamma,
                                 const ProjectiveMeasurement& meas);

/// The same dephasing acting on the measured subsystem alone:
///   rho_gamma -> sum_k Pi_k rho_gamma Pi_k,
/// diagonal in the measurement basis.
DensityMatrix apply_channel_reduced(const DensityMatrix& rho_gamma,
                                    const ProjectiveMeasurement& meas);

struct MeasurementOutcome {
  double probability = 0.0;
  /// Normalized post-measurement state on the unmeasured factors
  /// (ascending original order); empty when probability <= 1e-12.
  std::optional<DensityMatrix> conditional;
};

/// Outcome probabilities p_j = Tr[(I ⊗ Pi_j) rho] and the conditional
/// states of the unmeasured factors. Probabilities sum to 1.
std::vector<MeasurementOutcome> measurement_statistics(
    const DensityMatrix& rho, const Partition& gamma,
    const ProjectiveMeasurement& meas);

/// Gather permutation that moves the factors of `gamma` to the front
/// (ascending), followed by the complement (ascending).
std::vector<int> gamma_front_permutation(const Partition& gamma);

}  // namespace qdiscord
