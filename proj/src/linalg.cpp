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

#include "cohere/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cohere/error.hpp"

namespace cohere {
namespace {

double off_diagonal_norm2(const Matrix& a) {
  double s = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

// Runs cyclic sweeps in place. When `vectors` is non-null the rotations are
// accumulated into it. On return `a` is diagonal up to the threshold.
void jacobi_sweeps(Matrix& a, Matrix* vectors, int max_sweeps) {
  const Eigen::Index n = a.rows();
  const double scale2 = a.squaredNorm();
  const double threshold2 = 1e-24 * scale2;

  for (int sweep = 0;; ++sweep) {
    const double off2 = off_diagonal_norm2(a);
    if (off2 <= threshold2 || off2 == 0.0) return;
    if (sweep >= max_sweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi off-diagonal norm " + std::to_string(std::sqrt(off2)) + " after " +
                      std::to_string(max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double mag = std::abs(b);
        if (mag == 0.0) continue;
        // Skip pairs already negligible relative to their diagonal entries.
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (sweep > 3 && mag < 1e-18 * (std::abs(app) + std::abs(aqq))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }

        // Phase D = diag(1, e^{-i arg b}) makes the pair real; then a real
        // rotation zeroes it. J = D * [[c, s], [-s, c]].
        const Complex phase = std::conj(b) / mag;  // e^{-i alpha}
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Columns: A <- A J
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * phase * akq;
          a(k, q) = s * akp + c * phase * akq;
        }
        // Rows: A <- J^dag A
        const Complex cphase = std::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * cphase * aqk;
          a(q, k) = s * apk + c * cphase * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (vectors != nullptr) {
          Matrix& v = *vectors;
          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - s * phase * vkq;
            v(k, q) = s * vkp + c * phase * vkq;
          }
        }
      }
    }
  }
}

}  // namespace

Spectrum eigh(const Matrix& input, EighOptions options) {
  Matrix a = input;
  Matrix v = Matrix::Identity(a.rows(), a.cols());
  jacobi_sweeps(a, &v, options.max_sweeps);

  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  Spectrum out;
  out.values.reserve(n);
  out.vectors.resize(a.rows(), a.cols());
  for (std::size_t k = 0; k < n; ++k) {
    const auto src = static_cast<Eigen::Index>(order[k]);
    out.values.push_back(a(src, src).real());
    out.vectors.col(static_cast<Eigen::Index>(k)) = v.col(src);
  }
  return out;
}

std::vector<double> eigvalsh(const Matrix& input, EighOptions options) {
  Matrix a = input;
  jacobi_sweeps(a, nullptr, options.max_sweeps);
  std::vector<double> values(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) values[static_cast<std::size_t>(i)] = a(i, i).real();
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermitian_residual(const Matrix& a) {
  if (a.rows() != a.cols()) return INFINITY;
  return max_abs(a - a.adjoint());
}

double unitarity_residual(const Matrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

}  // namespace cohere
