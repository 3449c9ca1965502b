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

#include "qdiscord/entropy.hpp"

#include <cmath>
#include <sstream>

namespace qdiscord {

namespace {

// -lambda log2 lambda with the clipping window applied; throws when the
// value is too negative to be eigensolver noise.
double entropy_term(double lambda) {
  if (lambda <= 0.0) {
    if (lambda < kEntropyEigClip) {
      std::ostringstream msg;
      msg << "entropy: eigenvalue " << lambda << " below " << kEntropyEigClip
          << ", input is not a state";
      throw std::invalid_argument(msg.str());
    }
    return 0.0;
  }
  return -lambda * std::log2(lambda);
}

}  // namespace

double shannon_entropy(const std::vector<double>& p) {
  double sum = 0.0;
  double h = 0.0;
  for (double pj : p) {
    if (pj < -1e-12) {
      std::ostringstream msg;
      msg << "shannon_entropy: negative probability " << pj;
      throw std::invalid_argument(msg.str());
    }
    const double clipped = pj < 0.0 ? 0.0 : pj;
    sum += clipped;
    if (clipped > 0.0) h -= clipped * std::log2(clipped);
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "shannon_entropy: probabilities sum to " << sum << ", not 1";
    throw std::invalid_argument(msg.str());
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix(),
                                               Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (long i = 0; i < solver.eigenvalues().size(); ++i) {
    h += entropy_term(solver.eigenvalues()(i));
  }
  return h;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dims() != sigma.dims()) {
    throw std::invalid_argument(
        "relative_entropy: dimension lists must match");
  }
  const Spectrum er = hermitian_eig(rho.matrix());
  const Spectrum es = hermitian_eig(sigma.matrix());
  const long d = rho.dim();

  // overlap(i, j) = |<u_i|v_j>|^2
  const Matrix cross = er.eigenvectors.adjoint() * es.eigenvectors;

  double value = 0.0;
  for (long i = 0; i < d; ++i) {
    value -= entropy_term(er.eigenvalues(i));  // +lambda log2 lambda
  }
  for (long j = 0; j < d; ++j) {
    // weight of rho on sigma's j-th eigenvector
    double weight = 0.0;
    for (long i = 0; i < d; ++i) {
      const double lambda = std::max(er.eigenvalues(i), 0.0);
      weight += lambda * std::norm(cross(i, j));
    }
    const double mu = es.eigenvalues(j);
    if (mu < kSigmaSupportCutoff) {
      if (weight > kRhoWeightCutoff) return kInfiniteEntropy;
      continue;
    }
    value -= weight * std::log2(mu);
  }
  return value;
}

double mutual_information(const DensityMatrix& rho) {
  if (rho.n_parties() != 2) {
    throw std::invalid_argument(
        "mutual_information: state must have exactly 2 factors");
  }
  const DensityMatrix rho_a = partial_trace(rho, Partition({1}, 2));
  const DensityMatrix rho_b = partial_trace(rho, Partition({2}, 2));
  return von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) -
         von_neumann_entropy(rho);
}

}  // namespace qdiscord
