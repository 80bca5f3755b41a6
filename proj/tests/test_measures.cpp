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

#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "cohere/ensembles.hpp"
#include "cohere/error.hpp"
#include "cohere/measures.hpp"
#include "oracles.hpp"

using namespace cohere;
using Catch::Matchers::WithinAbs;

namespace {

const ProductBasis kComp = ProductBasis::computational({2, 2});

SearchConfig cfg() {
  SearchConfig c;
  c.random_starts = 12;
  return c;
}

DensityMatrix zero_ket() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  return validate({2}, m);
}

// sum_a p_a |a><a| (x) rho_a with random rho_a on a qubit.
DensityMatrix classical_quantum(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Matrix r0 = oracle::random_state(2, rng), r1 = oracle::random_state(2, rng);
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return validate({2, 2}, 0.3 * oracle::kron(p0, r0) + 0.7 * oracle::kron(p1, r1));
}

// (U (x) V) rho (U (x) V)^dag.
DensityMatrix rotate(const DensityMatrix& rho, const Matrix& u, const Matrix& v) {
  const Matrix w = kron(u, v);
  return validate(rho.dims(), w * rho.matrix() * w.adjoint());
}

DensityMatrix swap_parties(const DensityMatrix& rho) {
  Matrix s = Matrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) s(2 * b + a, 2 * a + b) = 1.0;
  return validate({2, 2}, s * rho.matrix() * s.adjoint());
}

}  // namespace

TEST_CASE("coherence on named states") {
  CHECK_THAT(coherence(named_state("plus_plus"), kComp).value, WithinAbs(2.0, 1e-12));
  CHECK_THAT(coherence(named_state("bell"), kComp).value, WithinAbs(1.0, 1e-12));
  CHECK_THAT(coherence(named_state("datta"), kComp).value, WithinAbs(0.5, 1e-12));
  // S(diag(3/8, 1/8, 1/8, 3/8)) - S(Werner 0.5) = (1 + h(3/4)) - 1.54879...
  CHECK_THAT(coherence(named_state("werner", {0.5, {}, {}}), kComp).value,
             WithinAbs(1.0 + oracle::shannon({0.75, 0.25}) - 1.5487949406953985, 1e-12));
}

TEST_CASE("discord, dissonance and cost on named states") {
  SECTION("Bell") {
    const auto d = decompose(named_state("bell"), kComp, cfg());
    CHECK_THAT(d.coherence.value, WithinAbs(1.0, 1e-12));
    CHECK_THAT(d.discord.value, WithinAbs(1.0, 1e-9));
    CHECK_THAT(d.dissonance.value, WithinAbs(0.0, 1e-9));
    CHECK_THAT(d.cost.value, WithinAbs(0.0, 1e-9));
  }
  SECTION("|+>|+>") {
    const auto d = decompose(named_state("plus_plus"), kComp, cfg());
    CHECK_THAT(d.coherence.value, WithinAbs(2.0, 1e-12));
    CHECK_THAT(d.discord.value, WithinAbs(0.0, 1e-4));
    CHECK_THAT(d.dissonance.value, WithinAbs(2.0, 1e-4));
    CHECK_THAT(d.cost.value, WithinAbs(0.0, 1e-4));
  }
  SECTION("state diagonal in the reference basis") {
    std::mt19937_64 rng(2);
    Matrix m = Matrix::Zero(4, 4);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    for (int i = 0; i < 4; ++i) m(i, i) = u(rng);
    m /= m.trace().real();
    const auto d = decompose(validate({2, 2}, m), kComp, cfg());
    CHECK_THAT(d.discord.value, WithinAbs(0.0, 1e-9));
    CHECK_THAT(d.dissonance.value, WithinAbs(0.0, 1e-9));
    CHECK_THAT(d.cost.value, WithinAbs(0.0, 1e-9));
  }
  SECTION("Werner 0.5: closed path at the grid optimum") {
    const DensityMatrix w = named_state("werner", {0.5, {}, {}});
    const auto d = decompose(w, kComp, cfg());
    CHECK(d.cost.value >= -1e-9);
    CHECK_THAT(d.coherence.value + d.cost.value, WithinAbs(d.discord.value + d.dissonance.value, 1e-9));
    CHECK_THAT(d.discord.value, WithinAbs(oracle::grid_discord_2q(oracle::werner(0.5), 0.05), 2e-3));
  }
  SECTION("classical ensemble members have zero discord") {
    for (std::size_t i = 0; i < 5; ++i) {
      const DensityMatrix rho = ensemble_state({EnsembleKind::Classical, {2, 2}, 5, 13}, i);
      CHECK_THAT(discord(rho, cfg()).value, WithinAbs(0.0, 1e-6));
    }
  }
}

TEST_CASE("quantum-incoherent coherence") {
  CHECK_THAT(qi_coherence(named_state("bell"), {0}, kComp).value, WithinAbs(1.0, 1e-12));
  CHECK_THAT(qi_coherence(named_state("plus_plus"), {0}, kComp).value, WithinAbs(1.0, 1e-12));
  CHECK_THAT(qi_coherence(classical_quantum(4), {0}, kComp).value, WithinAbs(0.0, 1e-12));
  const Matrix sigma = oracle::dephase(oracle::bell(), {2, 2}, oracle::computational({2, 2}), {0});
  CHECK_THAT(qi_coherence(named_state("bell"), {0}, kComp).value, WithinAbs(oracle::entropy(sigma), 1e-12));

  for (const Subsystems& bad : {Subsystems{}, Subsystems{0, 1}, Subsystems{3}}) {
    try {
      qi_coherence(named_state("bell"), bad, kComp);
      FAIL("expected BadSubset");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadSubset);
    }
  }
}

TEST_CASE("one-way discord and dissonance") {
  CHECK_THAT(one_way_discord(named_state("bell"), {0}, cfg()).value,
             WithinAbs(oracle::grid_one_way_2q(oracle::bell(), 0.005), 1e-6));
  CHECK_THAT(one_way_discord(named_state("bell"), {0}, cfg()).value, WithinAbs(1.0, 1e-9));
  CHECK_THAT(one_way_discord(named_state("plus_plus"), {0}, cfg()).value, WithinAbs(0.0, 1e-6));
  CHECK_THAT(one_way_discord(classical_quantum(5), {0}, cfg()).value, WithinAbs(0.0, 1e-9));

  CHECK_THAT(one_way_dissonance(named_state("bell"), {0}, kComp, cfg()).value, WithinAbs(0.0, 1e-9));
  CHECK_THAT(one_way_dissonance(named_state("plus_plus"), {0}, kComp, cfg()).value, WithinAbs(1.0, 1e-6));
  CHECK_THAT(one_way_dissonance(classical_quantum(6), {0}, kComp, cfg()).value, WithinAbs(0.0, 1e-9));
}

TEST_CASE("Zurek discord") {
  CHECK_THAT(zurek_discord(named_state("datta"), {0}, cfg()).value, WithinAbs(0.311, 1e-3));
  CHECK_THAT(zurek_discord(named_state("bell"), {0}, cfg()).value, WithinAbs(1.0, 1e-9));
  CHECK_THAT(zurek_discord(named_state("plus_plus"), {0}, cfg()).value, WithinAbs(0.0, 1e-9));
  CHECK_THAT(zurek_discord(named_state("datta"), {0}, cfg()).value,
             WithinAbs(oracle::grid_zurek_2q(oracle::datta(), 0.01), 1e-4));

  SECTION("agrees with a one-qubit grid on random states") {
    for (std::size_t i = 0; i < 4; ++i) {
      const DensityMatrix rho = ensemble_state({EnsembleKind::InducedMixed, {2, 2}, 4, 31}, i);
      CHECK_THAT(zurek_discord(rho, {0}, cfg()).value, WithinAbs(oracle::grid_zurek_2q(rho.matrix(), 0.02), 1e-3));
    }
  }
}

TEST_CASE("symmetric discord") {
  CHECK_THAT(symmetric_discord(named_state("bell"), cfg()).value, WithinAbs(1.0, 1e-9));
  CHECK_THAT(symmetric_discord(named_state("plus_plus"), cfg()).value, WithinAbs(0.0, 1e-9));
  const DensityMatrix w = named_state("werner", {0.5, {}, {}});
  CHECK_THAT(symmetric_discord(w, cfg()).value, WithinAbs(coherence(w, kComp).value, 1e-3));
}

TEST_CASE("chain discord") {
  auto values = [](const std::vector<MeasureValue>& v) {
    std::vector<double> out;
    for (const auto& m : v) out.push_back(m.value);
    return out;
  };
  const auto ghz = values(chain_discord_sum(named_state("ghz"), cfg()));
  REQUIRE(ghz.size() == 2);
  CHECK_THAT(ghz[0], WithinAbs(1.0, 1e-9));
  CHECK_THAT(ghz[1], WithinAbs(0.0, 1e-9));

  const DensityMatrix plus = partial_trace(named_state("plus_plus"), {0});
  const auto prod = values(chain_discord_sum(tensor(tensor(plus, plus), plus), cfg()));
  CHECK_THAT(prod[0], WithinAbs(0.0, 1e-9));
  CHECK_THAT(prod[1], WithinAbs(0.0, 1e-9));

  const auto bell0 = values(chain_discord_sum(tensor(named_state("bell"), zero_ket()), cfg()));
  CHECK_THAT(bell0[0], WithinAbs(1.0, 1e-9));
  CHECK_THAT(bell0[1], WithinAbs(0.0, 1e-9));
}

TEST_CASE("marginal coherence") {
  CHECK_THAT(marginal_coherence(named_state("plus_plus"), 0, kComp), WithinAbs(1.0, 1e-12));
  CHECK_THAT(marginal_coherence(named_state("bell"), 1, kComp), WithinAbs(0.0, 1e-12));
}

TEST_CASE("measures are nonnegative on random states") {
  for (const Dims& dims : {Dims{2, 2}, Dims{2, 2, 2}}) {
    const std::size_t n = dims.size() == 2 ? 20 : 4;
    for (std::size_t i = 0; i < n; ++i) {
      const DensityMatrix rho = ensemble_state({EnsembleKind::InducedMixed, dims, n, 41}, i);
      const ProductBasis comp = ProductBasis::computational(dims);
      const auto d = decompose(rho, comp, cfg());
      CHECK(d.coherence.value >= -1e-9);
      CHECK(d.discord.value >= -1e-9);
      CHECK(d.dissonance.value >= -1e-9);
      CHECK(qi_coherence(rho, {0}, comp).value >= -1e-9);
      CHECK(one_way_discord(rho, {0}, cfg()).value >= -1e-9);
      CHECK(zurek_discord(rho, {0}, cfg()).value >= -1e-9);
      CHECK(symmetric_discord(rho, cfg()).value >= -1e-9);
      // Seeding guarantee.
      CHECK(d.discord.value <= d.coherence.value + 1e-9);
    }
  }
}

TEST_CASE("invariances") {
  std::mt19937_64 rng(53);
  for (std::size_t i = 0; i < 6; ++i) {
    const DensityMatrix rho = ensemble_state({EnsembleKind::InducedMixed, {2, 2}, 6, 47}, i);

    SECTION("coherence ignores diagonal phases") {
      std::uniform_real_distribution<double> ph(0, 6.28);
      Matrix da = Matrix::Zero(2, 2), db = Matrix::Zero(2, 2);
      for (int k = 0; k < 2; ++k) {
        da(k, k) = std::polar(1.0, ph(rng));
        db(k, k) = std::polar(1.0, ph(rng));
      }
      CHECK_THAT(coherence(rotate(rho, da, db), kComp).value, WithinAbs(coherence(rho, kComp).value, 1e-10));
    }
    SECTION("discord is invariant under local unitaries") {
      const DensityMatrix r2 = rotate(rho, oracle::random_unitary(2, rng), oracle::random_unitary(2, rng));
      CHECK_THAT(discord(r2, cfg()).value, WithinAbs(discord(rho, cfg()).value, 1e-6));
    }
    SECTION("discord and coherence are invariant under swapping parties") {
      const DensityMatrix s = swap_parties(rho);
      CHECK_THAT(coherence(s, kComp).value, WithinAbs(coherence(rho, kComp).value, 1e-10));
      CHECK_THAT(discord(s, cfg()).value, WithinAbs(discord(rho, cfg()).value, 1e-6));
      CHECK_THAT(symmetric_discord(s, cfg()).value, WithinAbs(symmetric_discord(rho, cfg()).value, 1e-6));
    }
  }
}
