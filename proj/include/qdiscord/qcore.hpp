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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qdiscord {

using Cmplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Global index convention: subsystem 1 is the most significant factor.
// For local dimensions d_1..d_N, a joint basis index decomposes as
//   i = sum_k i_k * prod_{l>k} d_l,
// i.e. tensor_product(a, b) places `a` on the high digits. Every operation
// in this library (partial traces, permutations, channel embeddings, file
// formats) uses this one convention.

// State validation thresholds. Inputs worse than these are rejected;
// anything better is silently symmetrized (spectral clipping for entropies
// lives in entropy.hpp).
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdFloor = -1e-8;

/// A nonempty proper subset of the subsystem indices {1..N}, identifying
/// which tensor factors are measured. Indices are 1-based and kept sorted.
class Partition {
 public:
  Partition(std::vector<int> indices, int n_parties);

  const std::vector<int>& indices() const { return indices_; }
  int n_parties() const { return n_parties_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool contains(int subsystem) const;

  /// The complementary subset {1..N} \ indices (also nonempty and proper).
  Partition complement() const;

  /// All 2^N - 2 nonempty proper subsets, ordered by (size, lexicographic):
  /// for N = 3 that is 1, 2, 3, 12, 13, 23.
  static std::vector<Partition> all_proper(int n_parties);

  bool operator==(const Partition& other) const {
    return n_parties_ == other.n_parties_ && indices_ == other.indices_;
  }

 private:
  std::vector<int> indices_;
  int n_parties_;
};

/// An N-partite quantum state: local dimensions plus the dense matrix.
/// Construction validates Hermiticity (<= 1e-10 entrywise deviation), unit
/// trace (<= 1e-10) and positive semidefiniteness (min eigenvalue >= -1e-8),
/// then stores the symmetrized matrix (M + M^dag)/2.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<int> dims, Matrix matrix);

  const std::vector<int>& dims() const { return dims_; }
  int n_parties() const { return static_cast<int>(dims_.size()); }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }

 private:
  std::vector<int> dims_;
  Matrix matrix_;
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending,
/// eigenvector columns in matching order.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

/// Kronecker product with `a` on the most significant digits.
Matrix tensor_product(const Matrix& a, const Matrix& b);

/// Tensor product of states; dims are concatenated.
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the factors in `keep` (ascending index order), obtained
/// by tracing out the complement. Mixed-radix index contraction; works for
/// non-contiguous subsets.
DensityMatrix partial_trace(const DensityMatrix& rho, const Partition& keep);

/// Reorder tensor factors. `perm` is a permutation of 1..N in gather form:
/// output factor k is input factor perm[k-1]. permute_systems(rho, perm)
/// followed by the inverse permutation is an exact round trip.
DensityMatrix permute_systems(const DensityMatrix& rho,
                              const std::vector<int>& perm);

/// Inverse of a gather permutation.
std::vector<int> inverse_permutation(const std::vector<int>& perm);

/// Hermitian eigendecomposition. The input is symmetrized as (M + M^dag)/2
/// before decomposing; non-square input throws.
Spectrum hermitian_eig(const Matrix& m);

}  // namespace qdiscord
