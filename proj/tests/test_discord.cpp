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

#include <cmath>

#include "oracles.hpp"
#include "qdiscord/discord.hpp"
#include "qdiscord/entropy.hpp"
#include "qdiscord/states.hpp"

using namespace qdiscord;

namespace {

DensityMatrix classical_two_qubit() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = 0.5;
  return DensityMatrix({2, 2}, m);
}

// 1/2 (|0><0| x rho0 + |1><1| x rho1) with non-commuting rho0, rho1
DensityMatrix classical_quantum_state() {
  Matrix rho0(2, 2), rho1(2, 2);
  rho0 << 0.5, 0.4, 0.4, 0.5;  // (I + 0.8 X)/2
  rho1 << 0.9, 0.0, 0.0, 0.1;  // (I + 0.8 Z)/2
  Matrix m = Matrix::Zero(4, 4);
  m.block(0, 0, 2, 2) = 0.5 * rho0;
  m.block(2, 2, 2, 2) = 0.5 * rho1;
  return DensityMatrix({2, 2}, m);
}

OptimizerConfig quick_config(std::uint64_t seed, int restarts = 8) {
  OptimizerConfig cfg;
  cfg.master_seed = seed;
  cfg.restarts = restarts;
  return cfg;
}

}  // namespace

TEST_CASE("objective vanishes for a product state measured in its eigenbasis") {
  const DensityMatrix a = random_density(2, 2, 10);
  const DensityMatrix b = random_density(2, 2, 11);
  const DensityMatrix joint = tensor_product(a, b);
  const ProjectiveMeasurement meas(hermitian_eig(b.matrix()).eigenvectors);
  CHECK(std::abs(gamma_discord_objective(joint, Partition({2}, 2), meas)) <
        1e-10);
}

TEST_CASE("objective of the Bell state in the computational basis is 1") {
  const DensityMatrix bell = make_state({.family = "bell"});
  const auto comp = basis_from_params(2, {0.0, 0.0});
  CHECK(gamma_discord_objective(bell, Partition({2}, 2), comp) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("objective of GHZ measured on qubit 1 is 1") {
  const DensityMatrix ghz = make_state({.family = "ghz", .n_parties = 3});
  const auto comp = basis_from_params(2, {0.0, 0.0});
  CHECK(gamma_discord_objective(ghz, Partition({1}, 3), comp) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("objective agrees with the naive projector-sum oracle") {
  Rng rng(12);
  for (int s = 0; s < 5; ++s) {
    const DensityMatrix rho = random_density({2, 2, 2}, 8, 20 + s);
    for (const Partition& gamma : Partition::all_proper(3)) {
      const int m = 1 << gamma.size();
      const Matrix basis = oracle::haar_unitary(m, rng);
      const double mine =
          gamma_discord_objective(rho, gamma, ProjectiveMeasurement(basis));
      const double ref = oracle::gamma_objective(rho.matrix(), rho.dims(),
                                                 gamma.indices(), basis);
      CHECK(std::abs(mine - ref) < 1e-9);
    }
  }
}

TEST_CASE("objective rejects a mismatched measurement dimension") {
  const DensityMatrix ghz = make_state({.family = "ghz", .n_parties = 3});
  const auto comp4 = basis_from_params(4, MeasurementParams(12, 0.0));
  CHECK_THROWS_AS(gamma_discord_objective(ghz, Partition({1}, 3), comp4),
                  std::invalid_argument);
}

TEST_CASE("gamma_discord of a product 3-qubit state is zero for every gamma") {
  StateFamilySpec spec;
  spec.family = "product";
  spec.dims = {2, 2, 2};
  spec.seed = 30;
  const DensityMatrix rho = make_state(spec);
  for (const Partition& gamma : Partition::all_proper(3)) {
    const auto res = gamma_discord(rho, gamma, quick_config(31));
    CHECK(std::abs(res.value) <= 1e-6);
  }
}

TEST_CASE("gamma_discord of the Bell state matches the grid oracle") {
  const DensityMatrix bell = make_state({.family = "bell"});
  const auto res = gamma_discord(bell, Partition({1}, 2), quick_config(32));
  const auto grid = oracle::grid_minimize_qubit([&](double t, double p) {
    return oracle::gamma_objective(bell.matrix(), {2, 2}, {1},
                                   oracle::qubit_basis(t, p));
  });
  CHECK(std::abs(res.value - 1.0) <= 1e-4);
  CHECK(std::abs(grid.value - 1.0) <= 1e-4);
}

TEST_CASE("gamma_discord of the singlet is basis independent and equals 1") {
  StateFamilySpec spec;
  spec.family = "werner";
  spec.params["z"] = 1.0;
  const DensityMatrix singlet = make_state(spec);
  const auto res = gamma_discord(singlet, Partition({2}, 2), quick_config(33));
  CHECK(std::abs(res.value - 1.0) <= 1e-4);
  // objective is flat: random bases give the same value
  Rng rng(34);
  for (int t = 0; t < 10; ++t) {
    const ProjectiveMeasurement meas(oracle::haar_unitary(2, rng));
    CHECK(gamma_discord_objective(singlet, Partition({2}, 2), meas) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("gamma_discord result invariants") {
  const DensityMatrix rho = random_density({2, 2}, 4, 35);
  const auto res = gamma_discord(rho, Partition({2}, 2), quick_config(36));
  CHECK(res.value >= 0.0);
  CHECK(res.restart_values.size() == 8);
  CHECK(res.value ==
        *std::min_element(res.restart_values.begin(),
                          res.restart_values.end()));
  CHECK(res.evaluations > 0);
  CHECK(res.min_objective_seen >= -1e-7);

  // soundness: the returned basis attains the reported value under the
  // same reporting rule (values in [-1e-7, 0) count as 0)
  double attained = gamma_discord_objective(rho, res.gamma, res.best_basis);
  if (attained < 0.0) attained = 0.0;
  CHECK(std::abs(attained - res.value) <= 1e-10);
}

TEST_CASE("restart count defaults to 16, raised to 48 for measured dim 4") {
  OptimizerConfig cfg;
  CHECK(cfg.effective_restarts(2) == 16);
  CHECK(cfg.effective_restarts(4) == 48);
  cfg.restarts = 5;
  CHECK(cfg.effective_restarts(4) == 5);

  const DensityMatrix ghz = make_state({.family = "ghz", .n_parties = 3});
  OptimizerConfig def;
  def.master_seed = 1;
  const auto res12 = gamma_discord(ghz, Partition({1, 2}, 3), def);
  CHECK(res12.restart_values.size() == 48);
}

TEST_CASE("genuine_discord of a product state is zero") {
  StateFamilySpec spec;
  spec.family = "product";
  spec.dims = {2, 2, 2};
  spec.seed = 40;
  const auto report = genuine_discord(make_state(spec), quick_config(41));
  CHECK(report.genuine_value <= 1e-6);
  CHECK(report.per_gamma.size() == 6);
}

TEST_CASE("genuine_discord of a classical 3-qubit mixture is zero") {
  Matrix m = Matrix::Zero(8, 8);
  m(0, 0) = m(7, 7) = 0.5;
  const DensityMatrix rho({2, 2, 2}, m);
  const auto report = genuine_discord(rho, quick_config(42));
  CHECK(report.genuine_value <= 1e-6);
}

TEST_CASE("genuine_discord of GHZ is 1") {
  const DensityMatrix ghz = make_state({.family = "ghz", .n_parties = 3});
  const auto report = genuine_discord(ghz, quick_config(43));
  CHECK(std::abs(report.genuine_value - 1.0) <= 1e-3);
  for (const auto& g : report.per_gamma) {
    CHECK(std::abs(g.value - 1.0) <= 1e-3);
  }
}

TEST_CASE("genuine_discord covers every proper subset exactly once") {
  const DensityMatrix rho = random_density({2, 2, 2}, 8, 44);
  const auto report = genuine_discord(rho, quick_config(45, 2));
  REQUIRE(report.per_gamma.size() == 6);
  const auto expected = Partition::all_proper(3);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(report.per_gamma[i].gamma == expected[i]);
  }
  double best = report.per_gamma[0].value;
  for (const auto& g : report.per_gamma) best = std::min(best, g.value);
  CHECK(report.genuine_value == best);
}

TEST_CASE("genuine_discord rejects single-party input") {
  const DensityMatrix rho = random_density(2, 2, 46);
  CHECK_THROWS_AS(genuine_discord(rho, quick_config(47)),
                  std::invalid_argument);
}

TEST_CASE("symmetric_discord examples") {
  const DensityMatrix a = random_density(2, 2, 50);
  const DensityMatrix b = random_density(2, 2, 51);
  CHECK(symmetric_discord(tensor_product(a, b), quick_config(52)) <= 1e-6);

  const DensityMatrix bell = make_state({.family = "bell"});
  CHECK(std::abs(symmetric_discord(bell, quick_config(53)) - 1.0) <= 1e-4);

  CHECK_THROWS_AS(
      symmetric_discord(random_density({2, 2, 2}, 8, 54), quick_config(55)),
      std::invalid_argument);
}

TEST_CASE("classical-quantum state: measuring the classical side is free") {
  const DensityMatrix cq = classical_quantum_state();
  const auto res1 = gamma_discord(cq, Partition({1}, 2), quick_config(56));
  CHECK(res1.value <= 1e-6);
  CHECK(std::abs(symmetric_discord(cq, quick_config(56)) - res1.value) <=
        1e-9);
  // the quantum side costs something: grid oracle confirms a positive
  // minimum for gamma = {2}
  const auto grid = oracle::grid_minimize_qubit([&](double t, double p) {
    return oracle::gamma_objective(cq.matrix(), {2, 2}, {2},
                                   oracle::qubit_basis(t, p));
  });
  CHECK(grid.value > 1e-3);
}

TEST_CASE("symmetric equals genuine for two parties, identical seeds") {
  for (int s = 0; s < 5; ++s) {
    const DensityMatrix rho = random_density({2, 2}, 4, 60 + s);
    const auto cfg = quick_config(70 + s);
    CHECK(std::abs(symmetric_discord(rho, cfg) -
                   genuine_discord(rho, cfg).genuine_value) <= 1e-9);
  }
}

TEST_CASE("measured_mutual_information examples") {
  Rng rng(80);
  const DensityMatrix a = random_density(2, 2, 81);
  const DensityMatrix b = random_density(2, 2, 82);
  const DensityMatrix product = tensor_product(a, b);
  for (int t = 0; t < 5; ++t) {
    const ProjectiveMeasurement meas(oracle::haar_unitary(2, rng));
    CHECK(std::abs(measured_mutual_information(product, meas)) < 1e-10);
  }

  const auto comp = basis_from_params(2, {0.0, 0.0});
  CHECK(measured_mutual_information(make_state({.family = "bell"}), comp) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(measured_mutual_information(classical_two_qubit(), comp) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("measured MI equals its relative-entropy form") {
  Rng rng(83);
  for (int s = 0; s < 20; ++s) {
    const DensityMatrix rho = random_density({2, 2}, 4, 90 + s);
    const ProjectiveMeasurement meas(oracle::haar_unitary(2, rng));
    const double conditional_form = measured_mutual_information(rho, meas);

    const Partition b_side({2}, 2);
    const DensityMatrix dephased = apply_channel_full(rho, b_side, meas);
    const DensityMatrix rho_a = partial_trace(rho, Partition({1}, 2));
    const DensityMatrix rho_b_dephased =
        apply_channel_reduced(partial_trace(rho, b_side), meas);
    const double relative_form = relative_entropy(
        dephased, tensor_product(rho_a, rho_b_dephased));
    CHECK(std::abs(conditional_form - relative_form) <= 1e-8);
  }
}

TEST_CASE("classical_correlations_oz examples") {
  const DensityMatrix a = random_density(2, 2, 100);
  const DensityMatrix b = random_density(2, 2, 101);
  CHECK(std::abs(classical_correlations_oz(tensor_product(a, b),
                                           quick_config(102))) <= 1e-6);
  CHECK(std::abs(classical_correlations_oz(make_state({.family = "bell"}),
                                           quick_config(103)) -
                 1.0) <= 1e-4);
  CHECK(std::abs(classical_correlations_oz(classical_two_qubit(),
                                           quick_config(104)) -
                 1.0) <= 1e-4);
}

TEST_CASE("oz_discord examples") {
  const DensityMatrix a = random_density(2, 2, 110);
  const DensityMatrix b = random_density(2, 2, 111);
  CHECK(oz_discord(tensor_product(a, b), quick_config(112)) <= 1e-6);
  CHECK(std::abs(oz_discord(make_state({.family = "bell"}),
                            quick_config(113)) -
                 1.0) <= 1e-4);
  CHECK(oz_discord(classical_two_qubit(), quick_config(114)) <= 1e-6);
}

TEST_CASE("minimize_over_bases on a constant objective") {
  OptimizerConfig cfg = quick_config(120, 3);
  const auto res = minimize_over_bases(
      [](const MeasurementParams&) { return 2.5; }, 2, cfg);
  CHECK(res.best_value == 2.5);
  CHECK(res.restart_values == std::vector<double>{2.5, 2.5, 2.5});
  // initial simplex only: n+1 evaluations per restart
  CHECK(res.evaluations == 3 * 3);
}

TEST_CASE("minimize_over_bases finds the Bell minimum") {
  const DensityMatrix bell = make_state({.family = "bell"});
  OptimizerConfig cfg = quick_config(121);
  const auto res = minimize_over_bases(
      [&](const MeasurementParams& x) {
        return gamma_discord_objective(bell, Partition({2}, 2),
                                       basis_from_params(2, x));
      },
      2, cfg);
  const auto grid = oracle::grid_minimize_qubit([&](double t, double p) {
    return oracle::gamma_objective(bell.matrix(), {2, 2}, {2},
                                   oracle::qubit_basis(t, p));
  });
  CHECK(std::abs(res.best_value - grid.value) <= 1e-4);
}

TEST_CASE("minimize_over_bases is deterministic in the master seed") {
  const DensityMatrix rho = random_density({2, 2}, 4, 122);
  auto run = [&]() {
    return minimize_over_bases(
        [&](const MeasurementParams& x) {
          return gamma_discord_objective(rho, Partition({2}, 2),
                                         basis_from_params(2, x));
        },
        2, quick_config(123));
  };
  const auto first = run();
  const auto second = run();
  CHECK(first.best_value == second.best_value);
  CHECK(first.best_params == second.best_params);
  CHECK(first.restart_values == second.restart_values);
  CHECK(first.evaluations == second.evaluations);
}

TEST_CASE("non-negativity on a random sample") {
  for (int s = 0; s < 20; ++s) {
    const DensityMatrix rho = random_density({2, 2}, 1 + s % 4, 130 + s);
    const auto res =
        gamma_discord(rho, Partition({1 + s % 2}, 2), quick_config(140 + s, 4));
    CHECK(res.value >= 0.0);
    CHECK(res.min_objective_seen >= -1e-7);
  }
}

TEST_CASE("is_classical examples") {
  const auto classical = is_classical(classical_two_qubit(), quick_config(150));
  CHECK(classical.classical);
  REQUIRE(classical.witness.has_value());

  const auto bell =
      is_classical(make_state({.family = "bell"}), quick_config(151));
  CHECK_FALSE(bell.classical);
  CHECK_FALSE(bell.witness.has_value());

  StateFamilySpec spec;
  spec.family = "classical-diagonal";
  spec.dims = {2, 2, 2};
  spec.seed = 152;
  const auto diag = is_classical(make_state(spec), quick_config(153));
  CHECK(diag.classical);
  REQUIRE(diag.witness.has_value());
  // the witness dephasing really does fix the state
  const DensityMatrix rho = make_state(spec);
  const DensityMatrix fixed =
      apply_channel_full(rho, diag.witness->gamma, diag.witness->basis);
  CHECK((rho.matrix() - fixed.matrix()).cwiseAbs().maxCoeff() <=
        10.0 * std::sqrt(1e-5));
}

TEST_CASE("relabeling invariance on one 3-qubit state") {
  const DensityMatrix rho = random_density({2, 2, 2}, 8, 160);
  const std::vector<int> perm = {2, 3, 1};
  const DensityMatrix relabeled = permute_systems(rho, perm);
  const auto cfg = quick_config(161);
  const auto base = genuine_discord(rho, cfg);
  const auto moved = genuine_discord(relabeled, cfg);
  CHECK(std::abs(base.genuine_value - moved.genuine_value) <= 2e-3);
  // argmin partitions correspond under the permutation: factor perm[k]-1
  // of the original sits at slot k of the relabeled state
  std::vector<int> mapped;
  for (int k : moved.argmin_gamma.indices()) mapped.push_back(perm[k - 1]);
  std::sort(mapped.begin(), mapped.end());
  CHECK(mapped == base.argmin_gamma.indices());
}
