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

#include <limits>
#include <vector>

#include "qdiscord/qcore.hpp"

namespace qdiscord {

// All entropies are in bits (base-2 logarithms). Entropy values are plain
// doubles; relative_entropy signals violated support with the IEEE +infinity
// sentinel (test with std::isinf).

// Eigenvalues in [kEntropyEigClip, 0) are treated as exact zeros before
// taking logarithms; eigensolvers routinely produce such values for
// rank-deficient states. Anything below the window is not a state.
inline constexpr double kEntropyEigClip = -1e-8;

// Support test for relative entropy: a sigma eigenvalue below
// kSigmaSupportCutoff counts as zero, and rho weight above kRhoWeightCutoff
// on such an eigenvector means the relative entropy is infinite.
inline constexpr double kSigmaSupportCutoff = 1e-12;
inline constexpr double kRhoWeightCutoff = 1e-10;

inline constexpr double kInfiniteEntropy =
    std::numeric_limits<double>::infinity();

/// Shannon entropy H(p) = -sum p_j log2 p_j with 0 log 0 = 0.
/// Entries may dip to -1e-12 (clipped to zero); the sum must be within
/// 1e-9 of 1, otherwise an error is thrown.
double shannon_entropy(const std::vector<double>& p);

/// Von Neumann entropy S(rho) = -Tr(rho log2 rho): Shannon entropy of the
/// eigenvalue spectrum after clipping the [-1e-8, 0) window to zero.
double von_neumann_entropy(const DensityMatrix& rho);

/// Quantum relative entropy S(rho || sigma) = Tr(rho log2 rho - rho log2
/// sigma). Returns kInfiniteEntropy when rho has weight > 1e-10 on an
/// eigenvector of sigma with eigenvalue < 1e-12. Dimension lists must match.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Quantum mutual information S(rho_A) + S(rho_B) - S(rho_AB) of a
/// two-factor state.
double mutual_information(const DensityMatrix& rho);

}  // namespace qdiscord
