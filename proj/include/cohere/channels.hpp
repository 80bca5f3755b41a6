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

// Incoherent channels and the coherence bookkeeping of distributing one
// subsystem (R) of a tripartite state from Alice (A, R) to Bob (B).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cohere/basis_search.hpp"
#include "cohere/report.hpp"
#include "cohere/state.hpp"

namespace cohere {

class KrausChannel {
 public:
  /// Errors: DimensionMismatch (empty list, non-square or unequal shapes),
  /// NotComplete (sum K^dag K != I within 1e-10).
  explicit KrausChannel(std::vector<Matrix> operators);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Matrix>& operators() const noexcept { return operators_; }

  double completeness_residual() const;
  /// Largest magnitude found outside the dominant entry of any Kraus column.
  /// Zero for a channel that maps basis vectors to multiples of basis vectors.
  double incoherence_residual() const;
  bool is_incoherent() const;

  static KrausChannel identity(std::size_t dim);
  static KrausChannel dephasing(std::size_t dim);

 private:
  std::vector<Matrix> operators_;
  std::size_t dim_ = 0;
};

/// sum_j (I (x) K_j (x) I) rho (...)^dag with K_j acting on `target`.
/// Errors: DimensionMismatch, IndexOutOfRange.
DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho, std::size_t target);

/// Random convex mixture of a diagonal-phase unitary, a permutation and the
/// full dephasing. Deterministic in `seed`. Errors: BadParameter (dim < 2).
KrausChannel random_incoherent_channel(std::size_t dim, std::uint64_t seed);

struct DistributionScenario {
  DensityMatrix initial;
  std::size_t a = 0;
  std::size_t b = 1;
  std::size_t r = 2;
  std::optional<KrausChannel> channel;  ///< acts on R; absent = noiseless
  std::optional<ProductBasis> basis;    ///< reference bases; computational if absent
};

/// Noiseless: C^{AR|B} - C^{A|BR} <= C^{R|AB} on the initial state, plus the
/// additivity identity behind it and, for pure inputs, the dephased-entropy
/// subadditivity S(AR~) <= S(A~) + S(R~). With a channel:
/// C^{AR|B}(rho_f) - C^{A|BR}(rho_i) <= C^{R|AB}(rho_f).
/// Errors: BadSubset, DimensionMismatch, NotIncoherent.
TheoremReport run_distribution(const DistributionScenario& scenario);

}  // namespace cohere
