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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdiscord/qcore.hpp"

namespace qdiscord {

/// A named benchmark-state family with its parameters. Families:
///   bell               |Phi+> on two qubits
///   ghz                n-qubit GHZ (default n = 3)
///   w                  n-qubit W state (default n = 3)
///   werner             z |Psi-><Psi-| + (1-z) I/4, z in [0,1] (default 1)
///   product            tensor product of independent random factors
///   classical-diagonal random probability mixture of computational
///                      basis states
///   random             Ginibre-induced random state of given rank
///   depolarized-ghz    (1-p) GHZ_n + p I/d, p in [0,1]
/// Random families are bit-reproducible from (spec, seed).
struct StateFamilySpec {
  std::string family;
  std::optional<int> n_parties;        // ghz / w / depolarized-ghz
  std::vector<int> dims;               // product / classical-diagonal / random
  std::map<std::string, double> params;  // z, p
  std::optional<int> rank;             // random
  std::optional<std::uint64_t> seed;   // random families; default 0
};

/// Parse "name" or "name:key=value,..." (also accepts a bare dims token
/// such as "2x2x2" and a bare integer as the party count). Keys: n, dims,
/// z, p, rank, seed.
StateFamilySpec parse_family_spec(const std::string& text);

/// True for families with exactly one sweepable parameter (werner: z,
/// depolarized-ghz: p); `param` receives its name.
bool sweep_parameter(const StateFamilySpec& spec, std::string& param);

DensityMatrix make_state(const StateFamilySpec& spec);

/// Ginibre construction G G^dag / Tr(G G^dag) with G a seeded complex
/// Gaussian d x rank matrix; full rank when rank = d. The d-dimensional
/// overload yields a single-factor state; the dims overload splits the
/// same matrix across the given factors.
DensityMatrix random_density(int d, int rank, std::uint64_t seed);
DensityMatrix random_density(const std::vector<int>& dims, int rank,
                             std::uint64_t seed);

/// (1-p) rho + p I/d.
DensityMatrix depolarize(const DensityMatrix& rho, double p);

}  // namespace qdiscord
