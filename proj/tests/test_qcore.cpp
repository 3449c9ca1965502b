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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qdiscord/qcore.hpp"
#include "qdiscord/states.hpp"

using namespace qdiscord;

namespace {

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Matrix ket_projector(int dim, int k) {
  Matrix m = Matrix::Zero(dim, dim);
  m(k, k) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("tensor_product identity case") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(max_abs_diff(tensor_product(i2, i2), Matrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("tensor_product index bookkeeping: diag(1,0) x diag(0,1)") {
  const Matrix a = ket_projector(2, 0);
  const Matrix b = ket_projector(2, 1);
  Matrix expected = Matrix::Zero(4, 4);
  expected(1, 1) = 1.0;  // |01><01|, subsystem 1 most significant
  CHECK(max_abs_diff(tensor_product(a, b), expected) == 0.0);
}

TEST_CASE("tensor_product matches the quadruple-loop definition") {
  const DensityMatrix a = random_density(2, 2, 11);
  const DensityMatrix b = random_density(3, 3, 12);
  CHECK(max_abs_diff(tensor_product(a.matrix(), b.matrix()),
                     oracle::kron(a.matrix(), b.matrix())) < 1e-15);
}

TEST_CASE("|0><0| x I/2 traces back to |0><0|") {
  const DensityMatrix pure({2}, ket_projector(2, 0));
  const DensityMatrix mixed({2}, 0.5 * Matrix::Identity(2, 2));
  const DensityMatrix joint = tensor_product(pure, mixed);
  CHECK(std::abs(joint.matrix().trace().real() - 1.0) < 1e-14);
  const DensityMatrix back = partial_trace(joint, Partition({1}, 2));
  CHECK(max_abs_diff(back.matrix(), pure.matrix()) < 1e-14);
}

TEST_CASE("partial_trace of a product state returns the kept factor") {
  const DensityMatrix a = random_density(2, 2, 21);
  const DensityMatrix b = random_density(2, 2, 22);
  const DensityMatrix joint = tensor_product(a, b);
  CHECK(max_abs_diff(partial_trace(joint, Partition({1}, 2)).matrix(),
                     a.matrix()) < 1e-12);
  CHECK(max_abs_diff(partial_trace(joint, Partition({2}, 2)).matrix(),
                     b.matrix()) < 1e-12);
}

TEST_CASE("partial_trace of the Bell state is maximally mixed") {
  const DensityMatrix bell = make_state({.family = "bell"});
  const DensityMatrix reduced = partial_trace(bell, Partition({2}, 2));
  CHECK(max_abs_diff(reduced.matrix(), 0.5 * Matrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("partial_trace of GHZ over the third qubit") {
  const DensityMatrix ghz = make_state({.family = "ghz", .n_parties = 3});
  const DensityMatrix reduced = partial_trace(ghz, Partition({1, 2}, 3));
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 0.5;
  CHECK(max_abs_diff(reduced.matrix(), expected) < 1e-14);
}

TEST_CASE("partial_trace agrees with index-contraction oracle on 3 parties") {
  const DensityMatrix rho = random_density({2, 3, 2}, 12, 31);
  for (const Partition& keep : Partition::all_proper(3)) {
    const DensityMatrix mine = partial_trace(rho, keep);
    const Matrix ref =
        oracle::partial_trace(rho.matrix(), rho.dims(), keep.indices());
    CHECK(max_abs_diff(mine.matrix(), ref) < 1e-13);
  }
}

TEST_CASE("partial_trace preserves trace, hermiticity and positivity") {
  for (int s = 0; s < 6; ++s) {
    const DensityMatrix rho = random_density({2, 2, 2}, 4 + s, 40 + s);
    for (const Partition& keep : Partition::all_proper(3)) {
      // construction re-validates all three state invariants
      const DensityMatrix reduced = partial_trace(rho, keep);
      CHECK(std::abs(reduced.matrix().trace().real() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("partial_trace rejects a partition for the wrong party count") {
  const DensityMatrix rho = random_density({2, 2}, 4, 50);
  CHECK_THROWS_AS(partial_trace(rho, Partition({1}, 3)),
                  std::invalid_argument);
}

TEST_CASE("Partition rejects empty, full and out-of-range subsets") {
  CHECK_THROWS_AS(Partition({}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 2, 3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Partition({0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Partition({4}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 2}, 3), std::invalid_argument);
}

TEST_CASE("Partition enumeration matches the six three-party subsets") {
  const auto all = Partition::all_proper(3);
  REQUIRE(all.size() == 6);
  const std::vector<std::vector<int>> expected = {{1},    {2},    {3},
                                                  {1, 2}, {1, 3}, {2, 3}};
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].indices() == expected[i]);
  }
  CHECK(Partition::all_proper(4).size() == 14);
}

TEST_CASE("Partition complement") {
  const Partition gamma({1, 3}, 4);
  CHECK(gamma.complement().indices() == std::vector<int>{2, 4});
}

TEST_CASE("permute_systems identity and swap") {
  const DensityMatrix a = random_density(2, 2, 61);
  const DensityMatrix b = random_density(2, 2, 62);
  const DensityMatrix joint = tensor_product(a, b);
  CHECK(max_abs_diff(permute_systems(joint, {1, 2}).matrix(),
                     joint.matrix()) == 0.0);
  CHECK(max_abs_diff(permute_systems(joint, {2, 1}).matrix(),
                     tensor_product(b, a).matrix()) < 1e-14);
}

TEST_CASE("permute_systems round-trips exactly") {
  const DensityMatrix rho = random_density({2, 2, 2}, 8, 63);
  const std::vector<int> perm = {3, 1, 2};
  const DensityMatrix forward = permute_systems(rho, perm);
  const DensityMatrix back =
      permute_systems(forward, inverse_permutation(perm));
  CHECK(max_abs_diff(back.matrix(), rho.matrix()) == 0.0);
  CHECK(back.dims() == rho.dims());
}

TEST_CASE("permute_systems rejects non-permutations") {
  const DensityMatrix rho = random_density({2, 2}, 4, 64);
  CHECK_THROWS_AS(permute_systems(rho, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(permute_systems(rho, {1}), std::invalid_argument);
  CHECK_THROWS_AS(permute_systems(rho, {0, 1}), std::invalid_argument);
}

TEST_CASE("hermitian_eig on diag(0.25, 0.75) is descending") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 0.25;
  m(1, 1) = 0.75;
  const Spectrum spec = hermitian_eig(m);
  CHECK(spec.eigenvalues(0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(spec.eigenvalues(1) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("hermitian_eig of Pauli-X") {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  const Spectrum spec = hermitian_eig(x);
  CHECK(spec.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spec.eigenvalues(1) == doctest::Approx(-1.0).epsilon(1e-12));
  // eigenvectors are (|0> +- |1>)/sqrt(2) up to phase
  for (int k = 0; k < 2; ++k) {
    CHECK(std::abs(std::abs(spec.eigenvectors(0, k)) - 1.0 / std::sqrt(2.0)) <
          1e-12);
    CHECK(std::abs(std::abs(spec.eigenvectors(1, k)) - 1.0 / std::sqrt(2.0)) <
          1e-12);
  }
}

TEST_CASE("hermitian_eig reconstruction on a random 8x8") {
  const DensityMatrix rho = random_density(8, 8, 71);
  const Matrix m = rho.matrix();
  const Spectrum spec = hermitian_eig(m);
  const Matrix rebuilt = spec.eigenvectors *
                         spec.eigenvalues.asDiagonal().toDenseMatrix().cast<Cmplx>() *
                         spec.eigenvectors.adjoint();
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  CHECK(max_abs_diff(rebuilt, m) <= 1e-9 * scale);
  CHECK(max_abs_diff(spec.eigenvectors.adjoint() * spec.eigenvectors,
                     Matrix::Identity(8, 8)) < 1e-10);
}

TEST_CASE("hermitian_eig rejects non-square input") {
  CHECK_THROWS_AS(hermitian_eig(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("eigenvalues of a state sum to one") {
  const DensityMatrix rho = random_density({2, 2, 2}, 5, 72);
  CHECK(hermitian_eig(rho.matrix()).eigenvalues.sum() ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("index convention is globally consistent") {
  for (int s = 0; s < 8; ++s) {
    const DensityMatrix a = random_density(2, 2, 80 + s);
    const DensityMatrix b = random_density(3, 2 + s % 2, 90 + s);
    const DensityMatrix joint = tensor_product(a, b);
    CHECK(max_abs_diff(partial_trace(joint, Partition({1}, 2)).matrix(),
                       a.matrix()) < 1e-12);
  }
}

TEST_CASE("DensityMatrix validation names the violated invariant") {
  Matrix good = 0.5 * Matrix::Identity(2, 2);

  SUBCASE("dimension mismatch") {
    CHECK_THROWS_WITH_AS(DensityMatrix({2, 2}, good),
                         doctest::Contains("dims imply"),
                         std::invalid_argument);
  }
  SUBCASE("local dimension below 2") {
    CHECK_THROWS_WITH_AS(DensityMatrix({1, 2}, good),
                         doctest::Contains("local dimension"),
                         std::invalid_argument);
  }
  SUBCASE("non-Hermitian") {
    Matrix bad = good;
    bad(0, 1) = Cmplx(1e-6, 0.0);
    CHECK_THROWS_WITH_AS(DensityMatrix({2}, bad),
                         doctest::Contains("Hermitian"),
                         std::invalid_argument);
  }
  SUBCASE("trace away from one") {
    CHECK_THROWS_WITH_AS(DensityMatrix({2}, Matrix::Identity(2, 2)),
                         doctest::Contains("trace"), std::invalid_argument);
  }
  SUBCASE("negative eigenvalue") {
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 0) = 1.5;
    bad(1, 1) = -0.5;
    CHECK_THROWS_WITH_AS(DensityMatrix({2}, bad),
                         doctest::Contains("positive semidefinite"),
                         std::invalid_argument);
  }
  SUBCASE("non-finite entries") {
    Matrix bad = good;
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_WITH_AS(DensityMatrix({2}, bad),
                         doctest::Contains("finite"), std::invalid_argument);
  }
  SUBCASE("sub-tolerance asymmetry is accepted and symmetrized") {
    Matrix nearly = good;
    nearly(0, 1) = Cmplx(0.0, 1e-12);
    const DensityMatrix rho({2}, nearly);
    CHECK(max_abs_diff(rho.matrix(), rho.matrix().adjoint()) == 0.0);
  }
}
