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

// Coherence, discord and dissonance measures, all in bits.
//
// Minimized quantities (Q, Q^{A|B}, Theta^{A|B}, Theta) are upper estimates
// from a multistart search; every derived quantity (D, L, D^{A|B}) is then
// evaluated at the same witness basis so the terms stay mutually consistent.

#pragma once

#include <optional>
#include <vector>

#include "cohere/basis_search.hpp"
#include "cohere/state.hpp"

namespace cohere {

struct MeasureValue {
  double value = 0.0;
  std::optional<ProductBasis> witness;
  std::optional<BasisSearchResult> search;
};

/// C^K(rho) = S(delta^K_rho) - S(rho).
MeasureValue coherence(const DensityMatrix& rho, const ProductBasis& basis);

/// Q(rho) = min over product bases of S(full dephasing) - S(rho). `warm_starts`
/// are tried in addition to the computational and marginal-eigen bases.
MeasureValue discord(const DensityMatrix& rho, const SearchConfig& config,
                     const std::vector<ProductBasis>& warm_starts = {});

/// All four terms of the closed path C + L = Q + D, evaluated at one witness.
struct DiscordDecomposition {
  MeasureValue coherence;   ///< C^K
  MeasureValue discord;     ///< Q (witness: basis of chi_rho)
  MeasureValue dissonance;  ///< D^K = S(delta^K_chi) - S(chi)
  MeasureValue cost;        ///< L = S(delta^K_chi) - S(delta^K_rho)
  DensityMatrix chi;        ///< the best-found nearest classical state
};

/// `basis` is always included as a warm start, so Q <= C^K holds exactly.
DiscordDecomposition decompose(const DensityMatrix& rho, const ProductBasis& basis, const SearchConfig& config);

MeasureValue dissonance(const DensityMatrix& rho, const ProductBasis& basis, const SearchConfig& config);
MeasureValue entropic_cost(const DensityMatrix& rho, const ProductBasis& basis, const SearchConfig& config);

/// C^{M|rest}(rho) = S(sigma) - S(rho), sigma dephased on `measured` in `basis`.
/// Errors: BadSubset (empty, out of range, or every subsystem).
MeasureValue qi_coherence(const DensityMatrix& rho, const Subsystems& measured, const ProductBasis& basis);

/// Q^{M|rest}: qi_coherence minimized over the bases of `measured` only.
MeasureValue one_way_discord(const DensityMatrix& rho, const Subsystems& measured, const SearchConfig& config,
                             const std::vector<ProductBasis>& warm_starts = {});

struct OneWayDecomposition {
  MeasureValue coherence;   ///< C^{M|rest}
  MeasureValue discord;     ///< Q^{M|rest}
  MeasureValue dissonance;  ///< D^{M|rest} = S(sigma_omega) - S(omega)
  DensityMatrix omega;
};

OneWayDecomposition decompose_one_way(const DensityMatrix& rho, const Subsystems& measured,
                                      const ProductBasis& basis, const SearchConfig& config);

MeasureValue one_way_dissonance(const DensityMatrix& rho, const Subsystems& measured, const ProductBasis& basis,
                                const SearchConfig& config);

/// Theta^{M|rest}: mutual information lost under the best complete projective
/// measurement of `measured`, I(rho) - max_B I(rho_B).
MeasureValue zurek_discord(const DensityMatrix& rho, const Subsystems& measured, const SearchConfig& config,
                           const std::vector<ProductBasis>& warm_starts = {});

/// Theta: total correlation lost under the best product-basis measurement of
/// every subsystem, T(rho) - max_K T(delta^K rho). For two parties T is the
/// mutual information.
MeasureValue symmetric_discord(const DensityMatrix& rho, const SearchConfig& config,
                               const std::vector<ProductBasis>& warm_starts = {});

/// [Theta^{i|i+1..N}(rho^{i..N}) for i = 1..N-1]. `basis`, when given, seeds
/// each search with its restriction.
std::vector<MeasureValue> chain_discord_sum(const DensityMatrix& rho, const SearchConfig& config,
                                            const std::optional<ProductBasis>& basis = std::nullopt);

/// C of the single-subsystem marginal rho^k in the matching local basis.
double marginal_coherence(const DensityMatrix& rho, std::size_t k, const ProductBasis& basis);

}  // namespace cohere
