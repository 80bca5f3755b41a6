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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace cohere {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues are sorted in
/// descending order; column j of `vectors` belongs to `values[j]`.
struct Spectrum {
  std::vector<double> values;
  Matrix vectors;
};

struct EighOptions {
  int max_sweeps = 100;
};

/// Cyclic complex Jacobi. Throws Error(NoConvergence) if the off-diagonal
/// mass is still above 1e-12 * ||A||_F after max_sweeps sweeps.
Spectrum eigh(const Matrix& a, EighOptions options = {});

/// Same rotations as eigh without accumulating eigenvectors; descending.
std::vector<double> eigvalsh(const Matrix& a, EighOptions options = {});

Matrix kron(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& a);

/// max |a_ij - conj(a_ji)|
double hermitian_residual(const Matrix& a);

/// max |(U^dag U - I)_ij|
double unitarity_residual(const Matrix& u);

}  // namespace cohere
