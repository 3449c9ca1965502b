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

#include "qdiscord/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qdiscord/rng.hpp"

namespace qdiscord {

namespace {

const std::vector<std::string> kFamilies = {
    "bell",   "ghz",    "w",      "werner",
    "product", "classical-diagonal", "random", "depolarized-ghz"};

long dims_product(const std::vector<int>& dims) {
  long d = 1;
  for (int dk : dims) d *= dk;
  return d;
}

DensityMatrix pure_state(const std::vector<int>& dims,
                         const Eigen::VectorXcd& psi) {
  return DensityMatrix(dims, psi * psi.adjoint());
}

DensityMatrix ghz_state(int n) {
  if (n < 2) {
    throw std::invalid_argument("make_state: ghz needs n >= 2 parties");
  }
  const long d = 1L << n;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d);
  psi(0) = psi(d - 1) = 1.0 / std::sqrt(2.0);
  return pure_state(std::vector<int>(n, 2), psi);
}

Matrix ginibre(int d, int rank, std::uint64_t seed) {
  Rng rng(seed);
  Matrix g(d, rank);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < rank; ++j) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      g(i, j) = Cmplx(re, im);
    }
  }
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return m;
}

double family_param(const StateFamilySpec& spec, const std::string& key,
                    double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

std::vector<int> dims_or_default(const StateFamilySpec& spec) {
  if (!spec.dims.empty()) return spec.dims;
  if (spec.n_parties.has_value()) return std::vector<int>(*spec.n_parties, 2);
  return {2, 2};
}

}  // namespace

StateFamilySpec parse_family_spec(const std::string& text) {
  StateFamilySpec spec;
  const auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  if (std::find(kFamilies.begin(), kFamilies.end(), spec.family) ==
      kFamilies.end()) {
    throw std::invalid_argument("unknown state family '" + spec.family + "'");
  }
  if (colon == std::string::npos) return spec;

  std::stringstream rest(text.substr(colon + 1));
  std::string token;
  auto parse_dims = [](const std::string& s) {
    std::vector<int> dims;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, 'x')) {
      dims.push_back(std::stoi(part));
    }
    return dims;
  };
  while (std::getline(rest, token, ',')) {
    if (token.empty()) continue;
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      if (token.find('x') != std::string::npos) {
        spec.dims = parse_dims(token);
      } else {
        spec.n_parties = std::stoi(token);
      }
      continue;
    }
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "n") {
      spec.n_parties = std::stoi(value);
    } else if (key == "dims") {
      spec.dims = parse_dims(value);
    } else if (key == "rank") {
      spec.rank = std::stoi(value);
    } else if (key == "seed") {
      spec.seed = std::stoull(value);
    } else if (key == "z" || key == "p") {
      spec.params[key] = std::stod(value);
    } else {
      throw std::invalid_argument("unknown family parameter '" + key + "'");
    }
  }
  return spec;
}

bool sweep_parameter(const StateFamilySpec& spec, std::string& param) {
  if (spec.family == "werner") {
    param = "z";
    return true;
  }
  if (spec.family == "depolarized-ghz") {
    param = "p";
    return true;
  }
  return false;
}

DensityMatrix make_state(const StateFamilySpec& spec) {
  const std::uint64_t seed = spec.seed.value_or(0);

  if (spec.family == "bell") {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
    psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
    return pure_state({2, 2}, psi);
  }

  if (spec.family == "ghz") {
    return ghz_state(spec.n_parties.value_or(3));
  }

  if (spec.family == "w") {
    const int n = spec.n_parties.value_or(3);
    if (n < 2) {
      throw std::invalid_argument("make_state: w needs n >= 2 parties");
    }
    const long d = 1L << n;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d);
    for (int k = 0; k < n; ++k) psi(1L << k) = 1.0 / std::sqrt(double(n));
    return pure_state(std::vector<int>(n, 2), psi);
  }

  if (spec.family == "werner") {
    const double z = family_param(spec, "z", 1.0);
    if (z < 0.0 || z > 1.0) {
      throw std::invalid_argument("make_state: werner needs z in [0, 1]");
    }
    Eigen::VectorXcd singlet = Eigen::VectorXcd::Zero(4);
    singlet(1) = 1.0 / std::sqrt(2.0);   // |01>
    singlet(2) = -1.0 / std::sqrt(2.0);  // |10>
    Matrix m = z * (singlet * singlet.adjoint()).eval() +
               (1.0 - z) * 0.25 * Matrix::Identity(4, 4);
    return DensityMatrix({2, 2}, std::move(m));
  }

  if (spec.family == "product") {
    const std::vector<int> dims = dims_or_default(spec);
    if (dims.size() < 2) {
      throw std::invalid_argument("make_state: product needs >= 2 factors");
    }
    DensityMatrix state = random_density(dims[0], dims[0], derive_seed(seed, 0));
    for (std::size_t k = 1; k < dims.size(); ++k) {
      state = tensor_product(
          state, random_density(dims[k], dims[k], derive_seed(seed, k)));
    }
    return state;
  }

  if (spec.family == "classical-diagonal") {
    const std::vector<int> dims = dims_or_default(spec);
    const long d = dims_product(dims);
    Rng rng(seed);
    Eigen::VectorXd p(d);
    double sum = 0.0;
    for (long i = 0; i < d; ++i) {
      p(i) = rng.uniform_open();
      sum += p(i);
    }
    p /= sum;
    Matrix m = Matrix::Zero(d, d);
    for (long i = 0; i < d; ++i) m(i, i) = p(i);
    return DensityMatrix(dims, std::move(m));
  }

  if (spec.family == "random") {
    const std::vector<int> dims = dims_or_default(spec);
    const long d = dims_product(dims);
    return random_density(dims, spec.rank.value_or(static_cast<int>(d)),
                          seed);
  }

  if (spec.family == "depolarized-ghz") {
    const double p = family_param(spec, "p", 0.0);
    return depolarize(ghz_state(spec.n_parties.value_or(3)), p);
  }

  throw std::invalid_argument("unknown state family '" + spec.family + "'");
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
  return random_density(std::vector<int>{d}, rank, seed);
}

DensityMatrix random_density(const std::vector<int>& dims, int rank,
                             std::uint64_t seed) {
  const long d = dims_product(dims);
  if (rank < 1 || rank > d) {
    std::ostringstream msg;
    msg << "random_density: rank " << rank << " out of range 1.." << d;
    throw std::invalid_argument(msg.str());
  }
  return DensityMatrix(dims, ginibre(static_cast<int>(d), rank, seed));
}

DensityMatrix depolarize(const DensityMatrix& rho, double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("depolarize: p must lie in [0, 1]");
  }
  const long d = rho.dim();
  Matrix m = (1.0 - p) * rho.matrix() +
             (p / static_cast<double>(d)) * Matrix::Identity(d, d);
  return DensityMatrix(rho.dims(), std::move(m));
}

}  // namespace qdiscord
