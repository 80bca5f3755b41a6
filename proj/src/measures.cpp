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

#include "cohere/measures.hpp"

#include <string>

#include "cohere/error.hpp"

namespace cohere {
namespace {

void require_basis(const DensityMatrix& rho, const ProductBasis& basis) {
  if (rho.dims() != basis.dims()) throw Error(ErrorKind::DimensionMismatch, "basis dims differ from state dims");
}

Subsystems measured_subset(const Subsystems& measured, std::size_t arity) {
  Subsystems m;
  try {
    m = checked_subset(measured, arity);
  } catch (const Error& e) {
    throw Error(ErrorKind::BadSubset, e.what());
  }
  if (m.size() == arity) throw Error(ErrorKind::BadSubset, "measured set must leave at least one subsystem");
  return m;
}

double dephased_entropy(const DensityMatrix& rho, const ProductBasis& basis, const Subsystems& subset) {
  return von_neumann_bits(dephased_in_frame(rho.matrix(), rho.dims(), basis, subset));
}

}  // namespace

MeasureValue coherence(const DensityMatrix& rho, const ProductBasis& basis) {
  require_basis(rho, basis);
  const double value = dephased_entropy(rho, basis, all_subsystems(rho.arity())) - entropy(rho);
  return {value, std::nullopt, std::nullopt};
}

double marginal_coherence(const DensityMatrix& rho, std::size_t k, const ProductBasis& basis) {
  require_basis(rho, basis);
  return coherence(partial_trace(rho, {k}), basis.restricted({k})).value;
}

MeasureValue discord(const DensityMatrix& rho, const SearchConfig& config,
                     const std::vector<ProductBasis>& warm_starts) {
  const Subsystems all = all_subsystems(rho.arity());
  const auto objective = [&](const ProductBasis& b) { return dephased_entropy(rho, b, all); };
  BasisSearchResult search = minimize_over_bases(objective, rho, all, config, warm_starts);
  const double value = search.best_value - entropy(rho);
  ProductBasis witness = search.best_basis;
  return {value, std::move(witness), std::move(search)};
}

DiscordDecomposition decompose(const DensityMatrix& rho, const ProductBasis& basis, const SearchConfig& config) {
  require_basis(rho, basis);
  const Subsystems all = all_subsystems(rho.arity());
  MeasureValue q = discord(rho, config, {basis});
  DensityMatrix chi = dephase(rho, *q.witness, all);

  const double s_chi = entropy(chi);
  const double s_delta_chi = dephased_entropy(chi, basis, all);
  const double s_delta_rho = dephased_entropy(rho, basis, all);

  MeasureValue c = coherence(rho, basis);
  MeasureValue d{s_delta_chi - s_chi, q.witness, std::nullopt};
  MeasureValue l{s_delta_chi - s_delta_rho, q.witness, std::nullopt};
  return {std::move(c), std::move(q), std::move(d), std::move(l), std::move(chi)};
}

MeasureValue dissonance(const DensityMatrix& rho, const ProductBasis& basis, const SearchConfig& config) {
  return decompose(rho, basis, config).dissonance;
}

MeasureValue entropic_cost(const DensityMatrix& rho, const ProductBasis& basis, const SearchConfig& config) {
  return decompose(rho, basis, config).cost;
}

MeasureValue qi_coherence(const DensityMatrix& rho, const Subsystems& measured_in, const ProductBasis& basis) {
  require_basis(rho, basis);
  const Subsystems measured = measured_subset(measured_in, rho.arity());
  return {dephased_entropy(rho, basis, measured) - entropy(rho), std::nullopt, std::nullopt};
}

MeasureValue one_way_discord(const DensityMatrix& rho, const Subsystems& measured_in, const SearchConfig& config,
                             const std::vector<ProductBasis>& warm_starts) {
  const Subsystems measured = measured_subset(measured_in, rho.arity());
  const auto objective = [&](const ProductBasis& b) { return dephased_entropy(rho, b, measured); };
  BasisSearchResult search = minimize_over_bases(objective, rho, measured, config, warm_starts);
  const double value = search.best_value - entropy(rho);
  ProductBasis witness = search.best_basis;
  return {value, std::move(witness), std::move(search)};
}

OneWayDecomposition decompose_one_way(const DensityMatrix& rho, const Subsystems& measured_in,
                                      const ProductBasis& basis, const SearchConfig& config) {
  require_basis(rho, basis);
  const Subsystems measured = measured_subset(measured_in, rho.arity());
  MeasureValue q = one_way_discord(rho, measured, config, {basis});
  DensityMatrix omega = dephase(rho, *q.witness, measured);
  MeasureValue d{dephased_entropy(omega, basis, measured) - entropy(omega), q.witness, std::nullopt};
  MeasureValue c = qi_coherence(rho, measured, basis);
  return {std::move(c), std::move(q), std::move(d), std::move(omega)};
}

MeasureValue one_way_dissonance(const DensityMatrix& rho, const Subsystems& measured, const ProductBasis& basis,
                                const SearchConfig& config) {
  return decompose_one_way(rho, measured, basis, config).dissonance;
}

MeasureValue zurek_discord(const DensityMatrix& rho, const Subsystems& measured_in, const SearchConfig& config,
                           const std::vector<ProductBasis>& warm_starts) {
  const Subsystems measured = measured_subset(measured_in, rho.arity());
  const double info = mutual_information(rho, measured);
  const auto objective = [&](const ProductBasis& b) {
    return info - mutual_information(dephased_in_frame(rho.matrix(), rho.dims(), b, measured), rho.dims(), measured);
  };
  BasisSearchResult search = minimize_over_bases(objective, rho, measured, config, warm_starts);
  const double value = search.best_value;
  ProductBasis witness = search.best_basis;
  return {value, std::move(witness), std::move(search)};
}

MeasureValue symmetric_discord(const DensityMatrix& rho, const SearchConfig& config,
                               const std::vector<ProductBasis>& warm_starts) {
  const Subsystems all = all_subsystems(rho.arity());
  const double total = total_correlation(rho);
  const auto objective = [&](const ProductBasis& b) {
    return total - total_correlation(dephased_in_frame(rho.matrix(), rho.dims(), b, all), rho.dims());
  };
  BasisSearchResult search = minimize_over_bases(objective, rho, all, config, warm_starts);
  const double value = search.best_value;
  ProductBasis witness = search.best_basis;
  return {value, std::move(witness), std::move(search)};
}

std::vector<MeasureValue> chain_discord_sum(const DensityMatrix& rho, const SearchConfig& config,
                                            const std::optional<ProductBasis>& basis) {
  if (basis) require_basis(rho, *basis);
  std::vector<MeasureValue> out;
  for (std::size_t i = 0; i + 1 < rho.arity(); ++i) {
    Subsystems tail;
    for (std::size_t k = i; k < rho.arity(); ++k) tail.push_back(k);
    const DensityMatrix reduced = partial_trace(rho, tail);
    std::vector<ProductBasis> warm;
    if (basis) warm.push_back(basis->restricted(tail));
    out.push_back(zurek_discord(reduced, {0}, config, warm));
  }
  return out;
}

}  // namespace cohere
