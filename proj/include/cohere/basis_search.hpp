// Copyright 2026 The cohere Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Global minimization of basis-dependent objectives over product orthonormal
// bases. Each local unitary is written as an ordered product of two-level
// (Givens) rotations, one (theta, phi) pair per index pair p < q, so a d-level
// subsystem carries d(d-1) real angles. Column phases and column order are
// left free: every objective we minimize only sees the rank-1 projectors.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cohere/state.hpp"

namespace cohere {

struct BasisParameterization {
  Dims dims;
  /// angles[i] holds (theta, phi) for each pair (p, q), p < q, in
  /// lexicographic order; size d_i (d_i - 1).
  std::vector<std::vector<double>> angles;

  static BasisParameterization zeros(const Dims& dims);
};

std::size_t angle_count(std::size_t dim);

/// U = G_{01} G_{02} ... G_{d-2,d-1}; G_pq rotates rows p, q by
/// [[cos t, -e^{-i phi} sin t], [e^{i phi} sin t, cos t]].
Matrix givens_unitary(std::size_t dim, const std::vector<double>& angles);

/// Errors: BadAngleCount.
ProductBasis compose_basis(const BasisParameterization& params);

struct SearchConfig {
  std::size_t random_starts = 32;
  std::size_t max_iterations = 2000;  ///< coordinate line searches per start
  double tolerance = 1e-8;            ///< stop when a full cycle improves less
  std::uint64_t seed = 0x5eed;

  /// Errors: BadParameter.
  void check() const;
  SearchConfig scaled_starts(std::size_t factor) const;
};

struct BasisSearchResult {
  ProductBasis best_basis;
  double best_value = 0.0;
  std::size_t starts_used = 0;
  std::size_t best_start = 0;
  std::vector<double> start_values;
  bool converged = false;
  std::size_t iterations = 0;
};

using BasisObjective = std::function<double(const ProductBasis&)>;

struct LocalDescentResult {
  ProductBasis basis;
  double value = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
  /// Objective after every accepted or rejected line search; nonincreasing.
  std::vector<double> trace;
};

/// Coordinate search started at `start`: golden-section refinement along
/// each angle of the `subset` subsystems, then along the cycle's net
/// displacement, until a full cycle gains less than config.tolerance.
LocalDescentResult local_descent(const BasisObjective& objective, const ProductBasis& start,
                                 const Subsystems& subset, const SearchConfig& config);

/// Multistart minimization. Starts, in order: `reference`, `warm_starts`,
/// then config.random_starts Haar-random bases (subsystems outside `subset`
/// always keep the reference local). Ties keep the earliest start.
BasisSearchResult minimize_over_bases(const BasisObjective& objective, const ProductBasis& reference,
                                      const Subsystems& subset, const SearchConfig& config,
                                      const std::vector<ProductBasis>& warm_starts = {});

/// As above, with the reference defaulting to the computational basis and an
/// extra start built from the eigenbases of the single-subsystem marginals of
/// `state` (placed right after the reference).
BasisSearchResult minimize_over_bases(const BasisObjective& objective, const DensityMatrix& state,
                                      const Subsystems& subset, const SearchConfig& config,
                                      const std::vector<ProductBasis>& warm_starts = {},
                                      const std::optional<ProductBasis>& reference = std::nullopt);

/// Per subsystem: QR of a complex Ginibre matrix with the R diagonal made
/// positive, which is Haar distributed. Deterministic in `seed`.
ProductBasis haar_random_basis(const Dims& dims, std::uint64_t seed);

/// Product of the eigenbases of each single-subsystem marginal.
ProductBasis marginal_eigenbasis(const DensityMatrix& state);

/// Stateless 64-bit mixer used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace cohere
