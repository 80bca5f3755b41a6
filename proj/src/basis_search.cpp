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

#include "cohere/basis_search.hpp"
#include "cohere/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "cohere/error.hpp"

namespace cohere {
namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2
constexpr double kLineTolerance = 1e-6;          // bracket width in radians
constexpr double kMaxStep = std::numbers::pi / 2;
constexpr double kMinStep = 1e-3;

// Minimizes g on [lo, hi]; returns (argmin, value).
template <typename F>
std::pair<double, double> golden_section(const F& g, double lo, double hi) {
  double a = lo;
  double b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = g(x1);
  double f2 = g(x2);
  while (b - a > kLineTolerance) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = g(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

// Maps a flat coordinate vector onto the local unitaries of `subset`.
class Chart {
 public:
  Chart(const ProductBasis& start, const Subsystems& subset) : start_(start), subset_(subset) {
    for (auto k : subset_) {
      offsets_.push_back(size_);
      size_ += angle_count(start_.dims()[k]);
    }
  }

  std::size_t size() const { return size_; }

  ProductBasis basis(const std::vector<double>& x) const {
    std::vector<Matrix> locals = start_.locals();
    for (std::size_t s = 0; s < subset_.size(); ++s) {
      const std::size_t k = subset_[s];
      const std::size_t d = start_.dims()[k];
      std::vector<double> angles(x.begin() + static_cast<std::ptrdiff_t>(offsets_[s]),
                                 x.begin() + static_cast<std::ptrdiff_t>(offsets_[s] + angle_count(d)));
      locals[k] = start_.locals()[k] * givens_unitary(d, angles);
    }
    return ProductBasis(start_.dims(), std::move(locals));
  }

 private:
  const ProductBasis& start_;
  const Subsystems& subset_;
  std::vector<std::size_t> offsets_;
  std::size_t size_ = 0;
};

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over a combined word.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t angle_count(std::size_t dim) { return dim * (dim - 1); }

BasisParameterization BasisParameterization::zeros(const Dims& dims) {
  BasisParameterization p{dims, {}};
  for (auto d : dims) p.angles.emplace_back(angle_count(d), 0.0);
  return p;
}

Matrix givens_unitary(std::size_t dim, const std::vector<double>& angles) {
  if (angles.size() != angle_count(dim)) {
    throw Error(ErrorKind::BadAngleCount, "dimension " + std::to_string(dim) + " needs " +
                                              std::to_string(angle_count(dim)) + " angles, got " +
                                              std::to_string(angles.size()));
  }
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix u = Matrix::Identity(n, n);
  std::size_t a = 0;
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = p + 1; q < n; ++q) {
      const double c = std::cos(angles[a]);
      const double s = std::sin(angles[a]);
      const Complex e = std::polar(1.0, angles[a + 1]);
      a += 2;
      // u <- u * G_pq, touching columns p and q only.
      for (Eigen::Index k = 0; k < n; ++k) {
        const Complex ukp = u(k, p);
        const Complex ukq = u(k, q);
        u(k, p) = c * ukp + e * s * ukq;
        u(k, q) = -std::conj(e) * s * ukp + c * ukq;
      }
    }
  }
  return u;
}

ProductBasis compose_basis(const BasisParameterization& params) {
  if (params.angles.size() != params.dims.size()) {
    throw Error(ErrorKind::BadAngleCount, "angle lists for " + std::to_string(params.angles.size()) +
                                              " subsystems, dims has " + std::to_string(params.dims.size()));
  }
  std::vector<Matrix> locals;
  for (std::size_t i = 0; i < params.dims.size(); ++i) locals.push_back(givens_unitary(params.dims[i], params.angles[i]));
  return ProductBasis(params.dims, std::move(locals));
}

void SearchConfig::check() const {
  if (max_iterations == 0) throw Error(ErrorKind::BadParameter, "max_iterations must be positive");
  if (!(tolerance > 0.0)) throw Error(ErrorKind::BadParameter, "tolerance must be positive");
}

SearchConfig SearchConfig::scaled_starts(std::size_t factor) const {
  SearchConfig c = *this;
  c.random_starts *= factor;
  return c;
}

ProductBasis haar_random_basis(const Dims& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Matrix> locals;
  for (auto d : dims) {
    const auto n = static_cast<Eigen::Index>(d);
    Matrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        g(i, j) = Complex(re, im);
      }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
      const double mag = std::abs(r(j, j));
      if (mag > 0.0) q.col(j) *= r(j, j) / mag;
    }
    locals.push_back(std::move(q));
  }
  return ProductBasis(dims, std::move(locals));
}

ProductBasis marginal_eigenbasis(const DensityMatrix& state) {
  std::vector<Matrix> locals;
  for (std::size_t k = 0; k < state.arity(); ++k) locals.push_back(eigh(partial_trace(state.matrix(), state.dims(), {k})).vectors);
  return ProductBasis(state.dims(), std::move(locals));
}

LocalDescentResult local_descent(const BasisObjective& objective, const ProductBasis& start,
                                 const Subsystems& subset, const SearchConfig& config) {
  const Chart chart(start, subset);
  const std::size_t n = chart.size();
  std::vector<double> x(n, 0.0);
  std::vector<double> step(n, kMaxStep);

  LocalDescentResult out{start, objective(start), false, 0, {}};
  out.trace.push_back(out.value);
  if (n == 0) {
    out.converged = true;
    return out;
  }

  auto along = [&](const std::vector<double>& origin, const std::vector<double>& dir) {
    return [&, origin, dir](double t) {
      std::vector<double> y = origin;
      for (std::size_t i = 0; i < n; ++i) y[i] += t * dir[i];
      return objective(chart.basis(y));
    };
  };

  while (out.iterations < config.max_iterations) {
    const double cycle_start_value = out.value;
    const std::vector<double> cycle_start = x;

    for (std::size_t j = 0; j < n && out.iterations < config.max_iterations; ++j) {
      std::vector<double> unit(n, 0.0);
      unit[j] = 1.0;
      const auto [t, f] = golden_section(along(x, unit), -step[j], step[j]);
      ++out.iterations;
      // Rounding-level gains on a flat objective are not moves.
      if (f < out.value - kTol.tie) {
        x[j] += t;
        out.value = f;
        step[j] = std::clamp(3.0 * std::abs(t), kMinStep, kMaxStep);
      } else {
        step[j] = std::max(0.5 * step[j], kMinStep);
      }
      out.trace.push_back(out.value);
    }

    // Extrapolate along the net displacement of this cycle.
    std::vector<double> shift(n);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      shift[i] = x[i] - cycle_start[i];
      norm += shift[i] * shift[i];
    }
    if (norm > 0.0 && out.iterations < config.max_iterations) {
      const auto [t, f] = golden_section(along(x, shift), -0.5, 2.0);
      ++out.iterations;
      if (f < out.value - kTol.tie) {
        for (std::size_t i = 0; i < n; ++i) x[i] += t * shift[i];
        out.value = f;
      }
      out.trace.push_back(out.value);
    }

    if (cycle_start_value - out.value < config.tolerance) {
      out.converged = true;
      break;
    }
  }
  out.basis = chart.basis(x);
  return out;
}

BasisSearchResult minimize_over_bases(const BasisObjective& objective, const ProductBasis& reference,
                                      const Subsystems& subset_in, const SearchConfig& config,
                                      const std::vector<ProductBasis>& warm_starts) {
  config.check();
  const Dims& dims = reference.dims();
  const Subsystems subset = checked_subset(subset_in, dims.size());

  std::vector<ProductBasis> starts{reference};
  for (const auto& w : warm_starts) {
    if (w.dims() != dims) throw Error(ErrorKind::DimensionMismatch, "warm start dims differ from the reference");
    // Subsystems outside the searched subset always stay at the reference.
    std::vector<Matrix> locals = reference.locals();
    for (auto k : subset) locals[k] = w.locals()[k];
    starts.emplace_back(dims, std::move(locals));
  }
  for (std::size_t r = 0; r < config.random_starts; ++r) {
    const ProductBasis h = haar_random_basis(dims, mix_seed(config.seed, r));
    std::vector<Matrix> locals = reference.locals();
    for (auto k : subset) locals[k] = h.locals()[k];
    starts.emplace_back(dims, std::move(locals));
  }

  BasisSearchResult result{reference, 0.0, 0, 0, {}, false, 0};
  for (std::size_t s = 0; s < starts.size(); ++s) {
    LocalDescentResult local = local_descent(objective, starts[s], subset, config);
    result.iterations += local.iterations;
    result.start_values.push_back(local.value);
    // Equal minima (within kTol.tie): the earlier start wins.
    if (s == 0 || local.value < result.best_value - kTol.tie) {
      result.best_value = local.value;
      result.best_basis = std::move(local.basis);
      result.best_start = s;
      result.converged = local.converged;
    }
  }
  result.starts_used = starts.size();
  return result;
}

BasisSearchResult minimize_over_bases(const BasisObjective& objective, const DensityMatrix& state,
                                      const Subsystems& subset, const SearchConfig& config,
                                      const std::vector<ProductBasis>& warm_starts,
                                      const std::optional<ProductBasis>& reference) {
  const ProductBasis ref = reference.value_or(ProductBasis::computational(state.dims()));
  std::vector<ProductBasis> warm{marginal_eigenbasis(state)};
  warm.insert(warm.end(), warm_starts.begin(), warm_starts.end());
  return minimize_over_bases(objective, ref, subset, config, warm);
}

}  // namespace cohere
