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

// Dense multipartite density matrices: construction, composition, reduction,
// entropies and dephasing. Subsystem k of a state with dims {d_0, ..., d_{N-1}}
// is the k-th Kronecker factor, so subsystem 0 is the most significant digit
// of a row index.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cohere/linalg.hpp"

namespace cohere {

using Dims = std::vector<std::size_t>;
/// Ordered, duplicate-free list of subsystem indices.
using Subsystems = std::vector<std::size_t>;

std::size_t product(const Dims& dims);

/// Complex Hermitian positive semidefinite unit-trace matrix together with
/// its subsystem signature. Instances are immutable.
class DensityMatrix {
 public:
  /// Wraps a matrix that is already known to be a valid state (the output of
  /// a trace-preserving operation on valid states). No checks beyond shape.
  static DensityMatrix from_trusted(Dims dims, Matrix matrix);

  const Dims& dims() const noexcept { return dims_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t side() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  std::size_t arity() const noexcept { return dims_.size(); }

 private:
  DensityMatrix(Dims dims, Matrix matrix) : dims_(std::move(dims)), matrix_(std::move(matrix)) {}

  Dims dims_;
  Matrix matrix_;
};

/// One orthonormal basis per subsystem; column j of locals()[i] is |k_i^j>.
class ProductBasis {
 public:
  /// Throws DimensionMismatch or NotUnitary.
  ProductBasis(Dims dims, std::vector<Matrix> locals);

  static ProductBasis computational(const Dims& dims);
  /// Discrete Fourier basis on every subsystem; {|+>, |->} for qubits.
  static ProductBasis fourier(const Dims& dims);

  const Dims& dims() const noexcept { return dims_; }
  const std::vector<Matrix>& locals() const noexcept { return locals_; }
  const Matrix& local(std::size_t i) const { return locals_.at(i); }

  /// Kronecker product of the locals of `subset`, identity on the rest.
  Matrix unitary_on(const Subsystems& subset) const;
  /// Basis of the listed subsystems only, in the listed order.
  ProductBasis restricted(const Subsystems& keep) const;
  ProductBasis with_local(std::size_t i, Matrix u) const;

 private:
  Dims dims_;
  std::vector<Matrix> locals_;
};

/// Checks shape, Hermiticity, trace and positivity. Eigenvalues in
/// [-1e-10, 0) are clipped to zero and the result renormalized.
/// Errors: DimensionMismatch, NotHermitian, BadTrace, NotPositive.
DensityMatrix validate(const Dims& dims, const Matrix& raw);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep` (original relative order preserved).
/// Errors: EmptyKeepSet, IndexOutOfRange.
DensityMatrix partial_trace(const DensityMatrix& rho, const Subsystems& keep);
Matrix partial_trace(const Matrix& m, const Dims& dims, const Subsystems& keep);

/// -sum lambda log2 lambda over eigenvalues above the zero threshold. Works on
/// any Hermitian matrix (block entropies of unnormalized blocks included).
double von_neumann_bits(const Matrix& hermitian);
double shannon_bits(std::span<const double> probabilities);

double entropy(const DensityMatrix& rho);

/// S(rho || sigma) in bits; +infinity when supp(rho) is not inside supp(sigma).
/// Errors: DimensionMismatch.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(A) + S(B) - S(AB) for the cut `group` | complement.
/// Errors: BadPartition.
double mutual_information(const DensityMatrix& rho, const Subsystems& group);
double mutual_information(const Matrix& m, const Dims& dims, const Subsystems& group);

/// sum_i S(rho^i) - S(rho).
double total_correlation(const DensityMatrix& rho);
double total_correlation(const Matrix& m, const Dims& dims);

/// sum_m P_m rho P_m over the product projectors of `subset` in `basis`.
/// Errors: DimensionMismatch, EmptySubset.
DensityMatrix dephase(const DensityMatrix& rho, const ProductBasis& basis, const Subsystems& subset);

/// The dephased state expressed in the rotated frame U^dag rho U, where U is
/// the basis on `subset`. It is unitarily equivalent (by a product unitary) to
/// dephase(rho, basis, subset), so all its entropies and marginal entropies
/// agree with the dephased state while it stays block diagonal.
Matrix dephased_in_frame(const Matrix& rho, const Dims& dims, const ProductBasis& basis,
                         const Subsystems& subset);

/// Zeroes every entry whose row and column differ in a `subset` digit.
void pinch(Matrix& m, const Dims& dims, const Subsystems& subset);

/// Throws IndexOutOfRange / EmptySubset; returns a sorted copy.
Subsystems checked_subset(const Subsystems& subset, std::size_t arity, bool allow_empty = false);
Subsystems complement(const Subsystems& subset, std::size_t arity);
Subsystems all_subsystems(std::size_t arity);

}  // namespace cohere
