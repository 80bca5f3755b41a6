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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cohere/state.hpp"

namespace cohere {

/// |psi><psi| for a (not necessarily normalized) vector.
DensityMatrix pure_state(const Dims& dims, const Vector& psi);

struct NamedParams {
  std::optional<double> p;        ///< werner mixing weight
  std::optional<std::size_t> n;   ///< party count for ghz / w
  std::optional<Dims> dims;       ///< maximally_mixed shape
};

/// plus_plus, bell, datta, werner (p in [0,1]), ghz (n >= 2, default 3),
/// w (n >= 2, default 3), maximally_mixed (dims, default [2,2]).
/// Errors: UnknownName, BadParameter.
DensityMatrix named_state(std::string_view name, const NamedParams& params = {});

enum class EnsembleKind { HaarPure, InducedMixed, ProductPure, Classical };

std::string_view to_string(EnsembleKind kind);
/// Accepts haar_pure / haar, induced_mixed / induced, product_pure / product,
/// classical. Errors: UnknownName.
EnsembleKind parse_ensemble_kind(std::string_view name);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::InducedMixed;
  Dims dims{2, 2};
  std::size_t count = 1;
  std::uint64_t seed = 0;
};

/// The index-th member of the ensemble; depends only on (spec.kind, dims,
/// seed, index), so any trial can be replayed on its own.
DensityMatrix ensemble_state(const EnsembleSpec& spec, std::size_t index);

/// Sequential view over ensemble_state(spec, 0 .. count-1).
class StateStream {
 public:
  explicit StateStream(EnsembleSpec spec);

  bool done() const noexcept { return index_ >= spec_.count; }
  std::size_t index() const noexcept { return index_; }
  DensityMatrix next();

 private:
  EnsembleSpec spec_;
  std::size_t index_ = 0;
};

StateStream random_states(const EnsembleSpec& spec);

}  // namespace cohere
