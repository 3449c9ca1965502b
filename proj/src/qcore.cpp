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

#include "qdiscord/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace qdiscord {

namespace {

// stride[k] = prod_{l>k} dims[l]; subsystem 1 (index 0 here) is most
// significant, so index = sum_k digit_k * stride[k].
std::vector<long> index_strides(const std::vector<int>& dims) {
  std::vector<long> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) {
    strides[k] = strides[k + 1] * dims[k + 1];
  }
  return strides;
}

long dims_product(const std::vector<int>& dims) {
  long d = 1;
  for (int dk : dims) d *= dk;
  return d;
}

// Flat offsets contributed by every joint value of the factors listed in
// `subset` (1-based, ascending). Enumerates the subset's mixed-radix digits
// and maps each combination to its offset in the full index space.
std::vector<long> subset_offsets(const std::vector<int>& subset,
                                 const std::vector<int>& dims,
                                 const std::vector<long>& strides) {
  std::vector<int> sub_dims;
  sub_dims.reserve(subset.size());
  for (int k : subset) sub_dims.push_back(dims[k - 1]);
  const long count = dims_product(sub_dims);

  std::vector<long> offsets(count, 0);
  for (long flat = 0; flat < count; ++flat) {
    long rem = flat;
    long offset = 0;
    for (int pos = static_cast<int>(subset.size()) - 1; pos >= 0; --pos) {
      const long digit = rem % sub_dims[pos];
      rem /= sub_dims[pos];
      offset += digit * strides[subset[pos] - 1];
    }
    offsets[flat] = offset;
  }
  return offsets;
}

}  // namespace

Partition::Partition(std::vector<int> indices, int n_parties)
    : indices_(std::move(indices)), n_parties_(n_parties) {
  if (n_parties_ < 2) {
    throw std::invalid_argument(
        "Partition: need at least 2 parties, got " + std::to_string(n_parties_));
  }
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("Partition: duplicate subsystem index");
  }
  if (indices_.empty() ||
      static_cast<int>(indices_.size()) >= n_parties_) {
    throw std::invalid_argument(
        "Partition: subset must be nonempty and proper (1 <= size <= N-1)");
  }
  if (indices_.front() < 1 || indices_.back() > n_parties_) {
    throw std::invalid_argument("Partition: subsystem index out of range 1..N");
  }
}

bool Partition::contains(int subsystem) const {
  return std::binary_search(indices_.begin(), indices_.end(), subsystem);
}

Partition Partition::complement() const {
  std::vector<int> rest;
  rest.reserve(n_parties_ - indices_.size());
  for (int k = 1; k <= n_parties_; ++k) {
    if (!contains(k)) rest.push_back(k);
  }
  return Partition(std::move(rest), n_parties_);
}

std::vector<Partition> Partition::all_proper(int n_parties) {
  if (n_parties < 2) {
    throw std::invalid_argument(
        "Partition::all_proper: need at least 2 parties");
  }
  std::vector<Partition> out;
  for (int size = 1; size <= n_parties - 1; ++size) {
    // lexicographic combinations of the given size
    std::vector<int> combo(size);
    std::iota(combo.begin(), combo.end(), 1);
    while (true) {
      out.emplace_back(combo, n_parties);
      int pos = size - 1;
      while (pos >= 0 && combo[pos] == n_parties - size + 1 + pos) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (int q = pos + 1; q < size; ++q) combo[q] = combo[q - 1] + 1;
    }
  }
  return out;
}

DensityMatrix::DensityMatrix(std::vector<int> dims, Matrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  if (dims_.empty()) {
    throw std::invalid_argument("DensityMatrix: empty dimension list");
  }
  for (int d : dims_) {
    if (d < 2) {
      throw std::invalid_argument(
          "DensityMatrix: every local dimension must be >= 2");
    }
  }
  const long d = dims_product(dims_);
  if (matrix_.rows() != d || matrix_.cols() != d) {
    std::ostringstream msg;
    msg << "DensityMatrix: matrix is " << matrix_.rows() << "x"
        << matrix_.cols() << " but dims imply " << d << "x" << d;
    throw std::invalid_argument(msg.str());
  }
  if (!matrix_.allFinite()) {
    throw std::invalid_argument(
        "DensityMatrix: entries must be finite (no NaN/Inf)");
  }
  const double herm_dev = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian, max |M - M^dag| = " << herm_dev
        << " exceeds " << kHermitianTol;
    throw std::invalid_argument(msg.str());
  }
  const double trace_dev = std::abs(matrix_.trace() - Cmplx(1.0, 0.0));
  if (trace_dev > kTraceTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace deviates from 1 by " << trace_dev
        << " (tolerance " << kTraceTol << ")";
    throw std::invalid_argument(msg.str());
  }
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint().eval());

  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_,
                                               Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < kPsdFloor) {
    std::ostringstream msg;
    msg << "DensityMatrix: not positive semidefinite, min eigenvalue = "
        << min_eig << " below " << kPsdFloor;
    throw std::invalid_argument(msg.str());
  }
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(std::move(dims),
                       tensor_product(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Partition& keep) {
  if (keep.n_parties() != rho.n_parties()) {
    throw std::invalid_argument(
        "partial_trace: partition refers to a different party count");
  }
  const auto& dims = rho.dims();
  const auto strides = index_strides(dims);
  const Partition traced = keep.complement();

  std::vector<int> out_dims;
  for (int k : keep.indices()) out_dims.push_back(dims[k - 1]);

  const auto keep_offsets = subset_offsets(keep.indices(), dims, strides);
  const auto trace_offsets = subset_offsets(traced.indices(), dims, strides);
  const long od = static_cast<long>(keep_offsets.size());

  Matrix out = Matrix::Zero(od, od);
  const Matrix& m = rho.matrix();
  for (long r = 0; r < od; ++r) {
    for (long c = 0; c < od; ++c) {
      Cmplx acc(0.0, 0.0);
      for (long t : trace_offsets) {
        acc += m(keep_offsets[r] + t, keep_offsets[c] + t);
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix(std::move(out_dims), std::move(out));
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size(), 0);
  for (int k = 0; k < static_cast<int>(perm.size()); ++k) {
    inv[perm[k] - 1] = k + 1;
  }
  return inv;
}

DensityMatrix permute_systems(const DensityMatrix& rho,
                              const std::vector<int>& perm) {
  const int n = rho.n_parties();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument(
        "permute_systems: permutation length differs from party count");
  }
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 1 || p > n || seen[p - 1]) {
      throw std::invalid_argument(
          "permute_systems: not a permutation of 1..N");
    }
    seen[p - 1] = true;
  }

  const auto& dims = rho.dims();
  const auto old_strides = index_strides(dims);
  std::vector<int> out_dims(n);
  for (int k = 0; k < n; ++k) out_dims[k] = dims[perm[k] - 1];

  const long d = rho.dim();
  std::vector<long> to_old(d, 0);
  for (long flat = 0; flat < d; ++flat) {
    long rem = flat;
    long old_index = 0;
    for (int k = n - 1; k >= 0; --k) {
      const long digit = rem % out_dims[k];
      rem /= out_dims[k];
      old_index += digit * old_strides[perm[k] - 1];
    }
    to_old[flat] = old_index;
  }

  const Matrix& m = rho.matrix();
  Matrix out(d, d);
  for (long r = 0; r < d; ++r) {
    for (long c = 0; c < d; ++c) {
      out(r, c) = m(to_old[r], to_old[c]);
    }
  }
  return DensityMatrix(std::move(out_dims), std::move(out));
}

Spectrum hermitian_eig(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_eig: matrix must be square");
  }
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  // Eigen returns ascending order; flip to descending.
  const long d = m.rows();
  Spectrum spec;
  spec.eigenvalues.resize(d);
  spec.eigenvectors.resize(d, d);
  for (long i = 0; i < d; ++i) {
    spec.eigenvalues(i) = solver.eigenvalues()(d - 1 - i);
    spec.eigenvectors.col(i) = solver.eigenvectors().col(d - 1 - i);
  }
  return spec;
}

}  // namespace qdiscord
