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

#include "cohere/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "cohere/error.hpp"
#include "cohere/tolerances.hpp"

namespace cohere {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::BadTrace: return "BadTrace";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::BadSubset: return "BadSubset";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BadAngleCount: return "BadAngleCount";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::NotIncoherent: return "NotIncoherent";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::BadFormat: return "BadFormat";
  }
  return "Unknown";
}

namespace {

std::string dims_string(const Dims& dims) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ']';
  return os.str();
}

// Splits every full index into (index over `selected`, index over the rest).
struct IndexSplit {
  std::vector<std::size_t> selected;
  std::vector<std::size_t> rest;
  std::size_t selected_side = 1;
  std::size_t rest_side = 1;
};

IndexSplit split_indices(const Dims& dims, const Subsystems& selected) {
  const std::size_t n = dims.size();
  std::vector<bool> in(n, false);
  for (auto s : selected) in[s] = true;

  IndexSplit split;
  for (std::size_t k = 0; k < n; ++k) (in[k] ? split.selected_side : split.rest_side) *= dims[k];

  const std::size_t side = product(dims);
  split.selected.resize(side);
  split.rest.resize(side);
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t idx = 0; idx < side; ++idx) {
    std::size_t sel = 0;
    std::size_t rest = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (in[k]) sel = sel * dims[k] + digit[k];
      else rest = rest * dims[k] + digit[k];
    }
    split.selected[idx] = sel;
    split.rest[idx] = rest;
    for (std::size_t k = n; k-- > 0;) {
      if (++digit[k] < dims[k]) break;
      digit[k] = 0;
    }
  }
  return split;
}

void require_same_dims(const Dims& a, const Dims& b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": " + dims_string(a) + " vs " + dims_string(b));
  }
}

}  // namespace

std::size_t product(const Dims& dims) {
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

Subsystems checked_subset(const Subsystems& subset, std::size_t arity, bool allow_empty) {
  if (subset.empty() && !allow_empty) throw Error(ErrorKind::EmptySubset, "subsystem set is empty");
  Subsystems out = subset;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (auto s : out) {
    if (s >= arity) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "subsystem " + std::to_string(s) + " of a " + std::to_string(arity) + "-partite state");
    }
  }
  return out;
}

Subsystems complement(const Subsystems& subset, std::size_t arity) {
  Subsystems out;
  for (std::size_t k = 0; k < arity; ++k)
    if (std::find(subset.begin(), subset.end(), k) == subset.end()) out.push_back(k);
  return out;
}

Subsystems all_subsystems(std::size_t arity) {
  Subsystems out(arity);
  for (std::size_t k = 0; k < arity; ++k) out[k] = k;
  return out;
}

// ---------------------------------------------------------------------------
// DensityMatrix / ProductBasis

DensityMatrix DensityMatrix::from_trusted(Dims dims, Matrix matrix) {
  if (dims.empty() || static_cast<std::size_t>(matrix.rows()) != product(dims) ||
      matrix.rows() != matrix.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix shape does not match dims " + dims_string(dims));
  }
  return DensityMatrix(std::move(dims), std::move(matrix));
}

ProductBasis::ProductBasis(Dims dims, std::vector<Matrix> locals)
    : dims_(std::move(dims)), locals_(std::move(locals)) {
  if (dims_.size() != locals_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "basis has " + std::to_string(locals_.size()) +
                                                  " locals for dims " + dims_string(dims_));
  }
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const auto d = static_cast<Eigen::Index>(dims_[i]);
    if (locals_[i].rows() != d || locals_[i].cols() != d) {
      throw Error(ErrorKind::DimensionMismatch, "local basis " + std::to_string(i) + " is not " +
                                                    std::to_string(d) + "x" + std::to_string(d));
    }
    const double r = unitarity_residual(locals_[i]);
    if (r > kTol.unitary) {
      throw Error(ErrorKind::NotUnitary,
                  "local basis " + std::to_string(i) + " has U^dag U - I residual " + std::to_string(r));
    }
  }
}

ProductBasis ProductBasis::computational(const Dims& dims) {
  std::vector<Matrix> locals;
  for (auto d : dims) locals.push_back(Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
  return ProductBasis(dims, std::move(locals));
}

ProductBasis ProductBasis::fourier(const Dims& dims) {
  std::vector<Matrix> locals;
  for (auto d : dims) {
    const auto n = static_cast<Eigen::Index>(d);
    Matrix f(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        f(j, k) = norm * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(d));
    locals.push_back(std::move(f));
  }
  return ProductBasis(dims, std::move(locals));
}

Matrix ProductBasis::unitary_on(const Subsystems& subset) const {
  Matrix u = Matrix::Identity(1, 1);
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    const bool selected = std::find(subset.begin(), subset.end(), k) != subset.end();
    const auto d = static_cast<Eigen::Index>(dims_[k]);
    u = kron(u, selected ? locals_[k] : Matrix::Identity(d, d));
  }
  return u;
}

ProductBasis ProductBasis::restricted(const Subsystems& keep) const {
  Dims dims;
  std::vector<Matrix> locals;
  for (auto k : keep) {
    dims.push_back(dims_.at(k));
    locals.push_back(locals_.at(k));
  }
  return ProductBasis(std::move(dims), std::move(locals));
}

ProductBasis ProductBasis::with_local(std::size_t i, Matrix u) const {
  auto locals = locals_;
  locals.at(i) = std::move(u);
  return ProductBasis(dims_, std::move(locals));
}

// ---------------------------------------------------------------------------
// Operations

DensityMatrix validate(const Dims& dims, const Matrix& raw) {
  if (dims.empty()) throw Error(ErrorKind::DimensionMismatch, "dims list is empty");
  for (auto d : dims) {
    if (d < 2) throw Error(ErrorKind::DimensionMismatch, "subsystem dimension below 2 in " + dims_string(dims));
  }
  const std::size_t side = product(dims);
  if (raw.rows() != raw.cols() || static_cast<std::size_t>(raw.rows()) != side) {
    throw Error(ErrorKind::DimensionMismatch, "matrix is " + std::to_string(raw.rows()) + "x" +
                                                  std::to_string(raw.cols()) + ", dims " + dims_string(dims) +
                                                  " need side " + std::to_string(side));
  }
  if (!raw.allFinite()) throw Error(ErrorKind::NotHermitian, "matrix has non-finite entries");

  const double herm = hermitian_residual(raw);
  if (herm > kTol.hermitian) {
    throw Error(ErrorKind::NotHermitian, "max |a_ij - conj(a_ji)| = " + std::to_string(herm));
  }
  const double trace = raw.trace().real();
  if (std::abs(trace - 1.0) > kTol.trace) {
    std::ostringstream os;
    os.precision(17);
    os << "trace " << trace;
    throw Error(ErrorKind::BadTrace, os.str());
  }

  Matrix m = 0.5 * (raw + raw.adjoint());
  Spectrum spec = eigh(m);
  const double min_eig = spec.values.back();
  if (min_eig < -kTol.psd) {
    std::ostringstream os;
    os << "min eigenvalue " << min_eig;
    throw Error(ErrorKind::NotPositive, os.str());
  }
  if (min_eig < 0.0) {
    double total = 0.0;
    for (auto& v : spec.values) total += (v = std::max(v, 0.0));
    Eigen::VectorXd lam(static_cast<Eigen::Index>(spec.values.size()));
    for (std::size_t i = 0; i < spec.values.size(); ++i) lam(static_cast<Eigen::Index>(i)) = spec.values[i] / total;
    m = spec.vectors * lam.cast<Complex>().asDiagonal() * spec.vectors.adjoint();
    m = 0.5 * (m + m.adjoint());
  } else {
    m /= trace;
  }
  return DensityMatrix::from_trusted(dims, std::move(m));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix::from_trusted(std::move(dims), kron(a.matrix(), b.matrix()));
}

Matrix partial_trace(const Matrix& m, const Dims& dims, const Subsystems& keep_in) {
  if (keep_in.empty()) throw Error(ErrorKind::EmptyKeepSet, "partial trace needs at least one kept subsystem");
  const Subsystems keep = checked_subset(keep_in, dims.size());
  const IndexSplit split = split_indices(dims, keep);
  const auto side = static_cast<std::size_t>(m.rows());

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(split.selected_side),
                            static_cast<Eigen::Index>(split.selected_side));
  for (std::size_t j = 0; j < side; ++j) {
    for (std::size_t i = 0; i < side; ++i) {
      if (split.rest[i] != split.rest[j]) continue;
      out(static_cast<Eigen::Index>(split.selected[i]), static_cast<Eigen::Index>(split.selected[j])) +=
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Subsystems& keep_in) {
  if (keep_in.empty()) throw Error(ErrorKind::EmptyKeepSet, "partial trace needs at least one kept subsystem");
  const Subsystems keep = checked_subset(keep_in, rho.arity());
  Dims dims;
  for (auto k : keep) dims.push_back(rho.dims()[k]);
  return DensityMatrix::from_trusted(std::move(dims), partial_trace(rho.matrix(), rho.dims(), keep));
}

double shannon_bits(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities)
    if (p > kTol.eigen_zero) s -= p * std::log2(p);
  return s;
}

double von_neumann_bits(const Matrix& hermitian) {
  // Diagonal input (the common case after full dephasing) needs no rotation.
  bool diagonal = true;
  for (Eigen::Index j = 0; j < hermitian.cols() && diagonal; ++j)
    for (Eigen::Index i = 0; i < hermitian.rows(); ++i)
      if (i != j && hermitian(i, j) != Complex(0.0)) {
        diagonal = false;
        break;
      }
  if (diagonal) {
    std::vector<double> d(static_cast<std::size_t>(hermitian.rows()));
    for (Eigen::Index i = 0; i < hermitian.rows(); ++i) d[static_cast<std::size_t>(i)] = hermitian(i, i).real();
    return shannon_bits(d);
  }
  const auto values = eigvalsh(hermitian);
  return shannon_bits(values);
}

double entropy(const DensityMatrix& rho) { return von_neumann_bits(rho.matrix()); }

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dims(rho.dims(), sigma.dims(), "relative_entropy");
  const Spectrum r = eigh(rho.matrix());
  const Spectrum s = eigh(sigma.matrix());
  const auto n = static_cast<Eigen::Index>(rho.side());

  // Support test: any eigenvector of rho with non-negligible weight that leaks
  // into the null space of sigma makes the divergence infinite.
  for (Eigen::Index i = 0; i < n; ++i) {
    if (r.values[static_cast<std::size_t>(i)] <= kTol.support_overlap) continue;
    double leak = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (s.values[static_cast<std::size_t>(j)] > kTol.eigen_zero) continue;
      leak += std::norm(s.vectors.col(j).dot(r.vectors.col(i)));
    }
    if (leak > kTol.support_overlap) return std::numeric_limits<double>::infinity();
  }

  double cross = 0.0;  // Tr rho log2 sigma
  for (Eigen::Index j = 0; j < n; ++j) {
    const double lam = s.values[static_cast<std::size_t>(j)];
    if (lam <= kTol.eigen_zero) continue;
    const Vector v = s.vectors.col(j);
    const double weight = v.dot(rho.matrix() * v).real();
    cross += weight * std::log2(lam);
  }
  const double value = -shannon_bits(r.values) - cross;
  return std::max(value, 0.0);
}

double mutual_information(const Matrix& m, const Dims& dims, const Subsystems& group_in) {
  Subsystems group;
  try {
    group = checked_subset(group_in, dims.size());
  } catch (const Error& e) {
    throw Error(ErrorKind::BadPartition, e.what());
  }
  if (group.size() == dims.size()) throw Error(ErrorKind::BadPartition, "cut leaves the second group empty");
  const Subsystems other = complement(group, dims.size());
  return von_neumann_bits(partial_trace(m, dims, group)) + von_neumann_bits(partial_trace(m, dims, other)) -
         von_neumann_bits(m);
}

double mutual_information(const DensityMatrix& rho, const Subsystems& group) {
  return mutual_information(rho.matrix(), rho.dims(), group);
}

double total_correlation(const Matrix& m, const Dims& dims) {
  double s = -von_neumann_bits(m);
  for (std::size_t k = 0; k < dims.size(); ++k) s += von_neumann_bits(partial_trace(m, dims, {k}));
  return s;
}

double total_correlation(const DensityMatrix& rho) { return total_correlation(rho.matrix(), rho.dims()); }

void pinch(Matrix& m, const Dims& dims, const Subsystems& subset) {
  const IndexSplit split = split_indices(dims, subset);
  const auto side = static_cast<std::size_t>(m.rows());
  for (std::size_t j = 0; j < side; ++j)
    for (std::size_t i = 0; i < side; ++i)
      if (split.selected[i] != split.selected[j]) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 0.0;
}

Matrix dephased_in_frame(const Matrix& rho, const Dims& dims, const ProductBasis& basis,
                         const Subsystems& subset) {
  const Matrix u = basis.unitary_on(subset);
  Matrix rotated = u.adjoint() * rho * u;
  pinch(rotated, dims, subset);
  return rotated;
}

DensityMatrix dephase(const DensityMatrix& rho, const ProductBasis& basis, const Subsystems& subset_in) {
  require_same_dims(rho.dims(), basis.dims(), "dephase");
  if (subset_in.empty()) throw Error(ErrorKind::EmptySubset, "dephasing needs at least one subsystem");
  const Subsystems subset = checked_subset(subset_in, rho.arity());
  const Matrix u = basis.unitary_on(subset);
  Matrix rotated = u.adjoint() * rho.matrix() * u;
  pinch(rotated, rho.dims(), subset);
  Matrix out = u * rotated * u.adjoint();
  out = 0.5 * (out + out.adjoint());
  return DensityMatrix::from_trusted(rho.dims(), std::move(out));
}

}  // namespace cohere
