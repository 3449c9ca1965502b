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

#include "qdiscord/measurement.hpp"

#include <cmath>
#include <sstream>

namespace qdiscord {

namespace {

int measured_dimension(const DensityMatrix& rho, const Partition& gamma) {
  if (gamma.n_parties() != rho.n_parties()) {
    throw std::invalid_argument(
        "measurement: partition refers to a different party count");
  }
  int m = 1;
  for (int k : gamma.indices()) m *= rho.dims()[k - 1];
  return m;
}

}  // namespace

ProjectiveMeasurement::ProjectiveMeasurement(Matrix basis)
    : basis_(std::move(basis)) {
  if (basis_.rows() != basis_.cols() || basis_.rows() < 2) {
    throw std::invalid_argument(
        "ProjectiveMeasurement: basis must be square with dim >= 2");
  }
  if (!basis_.allFinite()) {
    throw std::invalid_argument(
        "ProjectiveMeasurement: basis entries must be finite");
  }
  const Matrix gram = basis_.adjoint() * basis_;
  const double dev =
      (gram - Matrix::Identity(basis_.rows(), basis_.cols())).cwiseAbs().maxCoeff();
  if (dev > kBasisOrthoTol) {
    std::ostringstream msg;
    msg << "ProjectiveMeasurement: columns not orthonormal, |B^dag B - I| = "
        << dev;
    throw std::invalid_argument(msg.str());
  }
}

ProjectiveMeasurement basis_from_params(int m,
                                        const MeasurementParams& params) {
  if (m < 2) {
    throw std::invalid_argument("basis_from_params: dimension must be >= 2");
  }
  if (static_cast<int>(params.size()) != measurement_param_count(m)) {
    std::ostringstream msg;
    msg << "basis_from_params: expected " << measurement_param_count(m)
        << " angles for dim " << m << ", got " << params.size();
    throw std::invalid_argument(msg.str());
  }
  Matrix basis = Matrix::Identity(m, m);
  int p = 0;
  for (int i = 0; i < m - 1; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const double theta = params[p];
      const double phi = params[p + 1];
      p += 2;
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const Cmplx sp = std::polar(s, phi);  // e^{+i phi} sin(theta)
      for (int r = 0; r < m; ++r) {
        const Cmplx bi = basis(r, i);
        const Cmplx bj = basis(r, j);
        basis(r, i) = c * bi + sp * bj;
        basis(r, j) = -std::conj(sp) * bi + c * bj;
      }
    }
  }
  return ProjectiveMeasurement(std::move(basis));
}

std::vector<int> gamma_front_permutation(const Partition& gamma) {
  std::vector<int> perm = gamma.indices();
  const Partition rest = gamma.complement();
  perm.insert(perm.end(), rest.indices().begin(), rest.indices().end());
  return perm;
}

DensityMatrix apply_channel_full(const DensityMatrix& rho,
                                 const Partition& gamma,
                                 const ProjectiveMeasurement& meas) {
  const int m = measured_dimension(rho, gamma);
  if (meas.dim() != m) {
    std::ostringstream msg;
    msg << "apply_channel_full: measurement dim " << meas.dim()
        << " does not match measured-subsystem dim " << m;
    throw std::invalid_argument(msg.str());
  }
  const auto perm = gamma_front_permutation(gamma);
  const DensityMatrix front = permute_systems(rho, perm);
  const int r = front.dim() / m;

  // Rotate the measured factor into the measurement basis, erase the
  // off-diagonal m x m block structure, rotate back.
  const Matrix u = tensor_product(meas.basis(), Matrix::Identity(r, r));
  const Matrix rotated = u.adjoint() * front.matrix() * u;
  Matrix dephased = Matrix::Zero(front.dim(), front.dim());
  for (int k = 0; k < m; ++k) {
    dephased.block(k * r, k * r, r, r) = rotated.block(k * r, k * r, r, r);
  }
  Matrix result = u * dephased * u.adjoint();
  DensityMatrix out_front(front.dims(), std::move(result));
  return permute_systems(out_front, inverse_permutation(perm));
}

DensityMatrix apply_channel_reduced(const DensityMatrix& rho_gamma,
                                    const ProjectiveMeasurement& meas) {
  if (meas.dim() != rho_gamma.dim()) {
    std::ostringstream msg;
    msg << "apply_channel_reduced: measurement dim " << meas.dim()
        << " does not match state dim " << rho_gamma.dim();
    throw std::invalid_argument(msg.str());
  }
  const Matrix& b = meas.basis();
  const Matrix rotated = b.adjoint() * rho_gamma.matrix() * b;
  const Matrix result = b * rotated.diagonal().asDiagonal() * b.adjoint();
  return DensityMatrix(rho_gamma.dims(), result);
}

std::vector<MeasurementOutcome> measurement_statistics(
    const DensityMatrix& rho, const Partition& gamma,
    const ProjectiveMeasurement& meas) {
  const int m = measured_dimension(rho, gamma);
  if (meas.dim() != m) {
    std::ostringstream msg;
    msg << "measurement_statistics: measurement dim " << meas.dim()
        << " does not match measured-subsystem dim " << m;
    throw std::invalid_argument(msg.str());
  }
  const auto perm = gamma_front_permutation(gamma);
  const DensityMatrix front = permute_systems(rho, perm);
  const int r = front.dim() / m;

  std::vector<int> rest_dims;
  for (int k = gamma.size(); k < rho.n_parties(); ++k) {
    rest_dims.push_back(front.dims()[k]);
  }

  const Matrix u = tensor_product(meas.basis(), Matrix::Identity(r, r));
  const Matrix rotated = u.adjoint() * front.matrix() * u;

  std::vector<MeasurementOutcome> outcomes(m);
  for (int k = 0; k < m; ++k) {
    const Matrix block = rotated.block(k * r, k * r, r, r);
    const double p = block.trace().real();
    outcomes[k].probability = p;
    if (p > kOutcomeProbCutoff) {
      outcomes[k].conditional = DensityMatrix(rest_dims, block / p);
    }
  }
  return outcomes;
}

}  // namespace qdiscord
