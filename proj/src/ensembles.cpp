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

#include "cohere/ensembles.hpp"

#include <cmath>
#include <random>
#include <string>

#include "cohere/basis_search.hpp"
#include "cohere/error.hpp"

namespace cohere {
namespace {

Vector ket(std::initializer_list<Complex> amplitudes) {
  Vector v(static_cast<Eigen::Index>(amplitudes.size()));
  Eigen::Index i = 0;
  for (auto a : amplitudes) v(i++) = a;
  return v;
}

DensityMatrix projector(const Vector& v) { return pure_state({static_cast<std::size_t>(v.size())}, v); }

Vector gaussian_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

}  // namespace

DensityMatrix pure_state(const Dims& dims, const Vector& psi) {
  if (static_cast<std::size_t>(psi.size()) != product(dims)) {
    throw Error(ErrorKind::DimensionMismatch, "state vector length does not match dims");
  }
  const Vector v = psi / psi.norm();
  return DensityMatrix::from_trusted(dims, v * v.adjoint());
}

DensityMatrix named_state(std::string_view name, const NamedParams& params) {
  const double r = 1.0 / std::sqrt(2.0);
  const Vector zero = ket({1.0, 0.0});
  const Vector one = ket({0.0, 1.0});
  const Vector plus = ket({r, r});
  const Vector minus = ket({r, -r});

  if (name == "plus_plus") return tensor(projector(plus), projector(plus));
  if (name == "bell") return pure_state({2, 2}, ket({r, 0.0, 0.0, r}));
  if (name == "datta") {
    Matrix m = kron(projector(plus).matrix(), projector(zero).matrix()) +
               kron(projector(minus).matrix(), projector(one).matrix()) +
               kron(projector(zero).matrix(), projector(minus).matrix()) +
               kron(projector(one).matrix(), projector(plus).matrix());
    return DensityMatrix::from_trusted({2, 2}, 0.25 * m);
  }
  if (name == "werner") {
    if (!params.p) throw Error(ErrorKind::BadParameter, "werner needs p");
    const double p = *params.p;
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::BadParameter, "werner p must lie in [0,1], got " + std::to_string(p));
    const Matrix bell = named_state("bell").matrix();
    return DensityMatrix::from_trusted({2, 2}, (1.0 - p) * Matrix::Identity(4, 4) / 4.0 + p * bell);
  }
  if (name == "ghz" || name == "w") {
    const std::size_t n = params.n.value_or(3);
    if (n < 2 || n > 8) throw Error(ErrorKind::BadParameter, "party count must lie in [2,8]");
    const Dims dims(n, 2);
    const auto side = static_cast<Eigen::Index>(product(dims));
    Vector psi = Vector::Zero(side);
    if (name == "ghz") {
      psi(0) = psi(side - 1) = 1.0;
    } else {
      for (std::size_t k = 0; k < n; ++k) psi(Eigen::Index{1} << k) = 1.0;
    }
    return pure_state(dims, psi);
  }
  if (name == "maximally_mixed") {
    const Dims dims = params.dims.value_or(Dims{2, 2});
    for (auto d : dims)
      if (d < 2) throw Error(ErrorKind::BadParameter, "subsystem dimension below 2");
    if (dims.empty()) throw Error(ErrorKind::BadParameter, "maximally_mixed needs dims");
    const auto side = static_cast<Eigen::Index>(product(dims));
    return DensityMatrix::from_trusted(dims, Matrix::Identity(side, side) / static_cast<double>(side));
  }
  throw Error(ErrorKind::UnknownName, "no named state '" + std::string(name) + "'");
}

std::string_view to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::HaarPure: return "haar_pure";
    case EnsembleKind::InducedMixed: return "induced_mixed";
    case EnsembleKind::ProductPure: return "product_pure";
    case EnsembleKind::Classical: return "classical";
  }
  return "unknown";
}

EnsembleKind parse_ensemble_kind(std::string_view name) {
  if (name == "haar_pure" || name == "haar" || name == "pure") return EnsembleKind::HaarPure;
  if (name == "induced_mixed" || name == "induced") return EnsembleKind::InducedMixed;
  if (name == "product_pure" || name == "product") return EnsembleKind::ProductPure;
  if (name == "classical") return EnsembleKind::Classical;
  throw Error(ErrorKind::UnknownName, "no ensemble kind '" + std::string(name) + "'");
}

DensityMatrix ensemble_state(const EnsembleSpec& spec, std::size_t index) {
  std::mt19937_64 rng(mix_seed(spec.seed, index));
  const std::size_t side = product(spec.dims);
  Matrix m;
  switch (spec.kind) {
    case EnsembleKind::HaarPure: {
      const Vector psi = gaussian_vector(side, rng);
      m = psi * psi.adjoint() / psi.squaredNorm();
      break;
    }
    case EnsembleKind::InducedMixed: {
      // Haar pure state on system (x) environment of equal size, environment traced out.
      const Vector psi = gaussian_vector(side * side, rng);
      const Eigen::Map<const Matrix> g(psi.data(), static_cast<Eigen::Index>(side), static_cast<Eigen::Index>(side));
      m = g * g.adjoint() / psi.squaredNorm();
      break;
    }
    case EnsembleKind::ProductPure: {
      m = Matrix::Identity(1, 1);
      for (auto d : spec.dims) {
        const Vector v = gaussian_vector(d, rng);
        m = kron(m, v * v.adjoint() / v.squaredNorm());
      }
      break;
    }
    case EnsembleKind::Classical: {
      std::exponential_distribution<double> expo(1.0);
      Eigen::VectorXd p(static_cast<Eigen::Index>(side));
      for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = expo(rng);
      p /= p.sum();
      const ProductBasis basis = haar_random_basis(spec.dims, rng());
      const Matrix u = basis.unitary_on(all_subsystems(spec.dims.size()));
      m = u * p.cast<Complex>().asDiagonal() * u.adjoint();
      break;
    }
  }
  m = 0.5 * (m + m.adjoint());
  m /= m.trace().real();
  return validate(spec.dims, m);
}

StateStream::StateStream(EnsembleSpec spec) : spec_(std::move(spec)) {
  if (spec_.count == 0) throw Error(ErrorKind::BadParameter, "ensemble count must be at least 1");
  if (spec_.dims.empty()) throw Error(ErrorKind::BadParameter, "ensemble dims are empty");
}

DensityMatrix StateStream::next() { return ensemble_state(spec_, index_++); }

StateStream random_states(const EnsembleSpec& spec) { return StateStream(spec); }

}  // namespace cohere
