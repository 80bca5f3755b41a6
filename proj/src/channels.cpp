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

#include "cohere/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "cohere/error.hpp"
#include "cohere/measures.hpp"

namespace cohere {

KrausChannel::KrausChannel(std::vector<Matrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw Error(ErrorKind::DimensionMismatch, "channel needs at least one Kraus operator");
  const Eigen::Index n = operators_.front().rows();
  for (const auto& k : operators_) {
    if (k.rows() != n || k.cols() != n) throw Error(ErrorKind::DimensionMismatch, "Kraus operators must share one square shape");
  }
  dim_ = static_cast<std::size_t>(n);
  const double r = completeness_residual();
  if (r > kTol.kraus) throw Error(ErrorKind::NotComplete, "sum K^dag K - I residual " + std::to_string(r));
}

double KrausChannel::completeness_residual() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Matrix sum = Matrix::Zero(n, n);
  for (const auto& k : operators_) sum += k.adjoint() * k;
  return max_abs(sum - Matrix::Identity(n, n));
}

double KrausChannel::incoherence_residual() const {
  double worst = 0.0;
  for (const auto& k : operators_) {
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      Eigen::Index dominant = 0;
      k.col(j).cwiseAbs().maxCoeff(&dominant);
      for (Eigen::Index i = 0; i < k.rows(); ++i)
        if (i != dominant) worst = std::max(worst, std::abs(k(i, j)));
    }
  }
  return worst;
}

bool KrausChannel::is_incoherent() const { return incoherence_residual() <= kTol.kraus; }

KrausChannel KrausChannel::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return KrausChannel({Matrix::Identity(n, n)});
}

KrausChannel KrausChannel::dephasing(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  std::vector<Matrix> ops;
  for (Eigen::Index k = 0; k < n; ++k) {
    Matrix p = Matrix::Zero(n, n);
    p(k, k) = 1.0;
    ops.push_back(std::move(p));
  }
  return KrausChannel(std::move(ops));
}

DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho, std::size_t target) {
  if (target >= rho.arity()) {
    throw Error(ErrorKind::IndexOutOfRange, "channel target " + std::to_string(target) + " of a " +
                                                std::to_string(rho.arity()) + "-partite state");
  }
  if (rho.dims()[target] != channel.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "channel dimension " + std::to_string(channel.dim()) +
                                                  " vs subsystem dimension " + std::to_string(rho.dims()[target]));
  }
  std::size_t left = 1;
  std::size_t right = 1;
  for (std::size_t k = 0; k < rho.arity(); ++k) {
    if (k < target) left *= rho.dims()[k];
    if (k > target) right *= rho.dims()[k];
  }
  const Matrix id_left = Matrix::Identity(static_cast<Eigen::Index>(left), static_cast<Eigen::Index>(left));
  const Matrix id_right = Matrix::Identity(static_cast<Eigen::Index>(right), static_cast<Eigen::Index>(right));

  Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const auto& k : channel.operators()) {
    const Matrix full = kron(kron(id_left, k), id_right);
    out += full * rho.matrix() * full.adjoint();
  }
  out = 0.5 * (out + out.adjoint());
  out /= out.trace().real();
  return validate(rho.dims(), out);
}

KrausChannel random_incoherent_channel(std::size_t dim, std::uint64_t seed) {
  if (dim < 2) throw Error(ErrorKind::BadParameter, "channel dimension must be at least 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::exponential_distribution<double> expo(1.0);

  double w[3];
  for (double& x : w) x = expo(rng);
  const double total = w[0] + w[1] + w[2];
  for (double& x : w) x /= total;

  const auto n = static_cast<Eigen::Index>(dim);
  std::vector<Matrix> ops;

  Matrix phases = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) phases(k, k) = std::polar(1.0, angle(rng));
  ops.push_back(std::sqrt(w[0]) * phases);

  std::vector<Eigen::Index> perm(dim);
  std::iota(perm.begin(), perm.end(), Eigen::Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix permutation = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) permutation(perm[static_cast<std::size_t>(k)], k) = 1.0;
  ops.push_back(std::sqrt(w[1]) * permutation);

  for (Eigen::Index k = 0; k < n; ++k) {
    Matrix p = Matrix::Zero(n, n);
    p(k, k) = std::sqrt(w[2]);
    ops.push_back(std::move(p));
  }
  return KrausChannel(std::move(ops));
}

TheoremReport run_distribution(const DistributionScenario& scenario) {
  const DensityMatrix& rho_i = scenario.initial;
  if (rho_i.arity() != 3) throw Error(ErrorKind::BadSubset, "distribution needs a tripartite state");
  const std::size_t a = scenario.a;
  const std::size_t b = scenario.b;
  const std::size_t r = scenario.r;
  if (a > 2 || b > 2 || r > 2 || a == b || a == r || b == r) {
    throw Error(ErrorKind::BadSubset, "parts A, B, R must be three distinct subsystems");
  }
  const ProductBasis basis = scenario.basis.value_or(ProductBasis::computational(rho_i.dims()));
  const Subsystems ar = checked_subset({a, r}, 3);

  TheoremReport report;
  if (!scenario.channel) {
    report.theorem_id = "5";
    const double c_ar = qi_coherence(rho_i, ar, basis).value;
    const double c_a = qi_coherence(rho_i, {a}, basis).value;
    const double c_r = qi_coherence(rho_i, {r}, basis).value;
    const DensityMatrix rho_prime = dephase(rho_i, basis, {r});
    const double c_a_prime = qi_coherence(rho_prime, {a}, basis).value;

    report.terms = {{"C_AR|B", c_ar}, {"C_A|BR", c_a}, {"C_R|AB", c_r}, {"C_A|BR(rho')", c_a_prime}};
    report.relations.push_back(inequality("C_AR|B - C_A|BR <= C_R|AB", c_ar - c_a, c_r, false));
    report.relations.push_back(identity("C_AR|B = C_R|AB + C_A|BR(rho')", c_ar, c_r + c_a_prime));

    const Matrix& m = rho_i.matrix();
    const double purity = (m * m).trace().real();
    if (purity > 1.0 - 1e-9) {
      const DensityMatrix rho_ar = partial_trace(rho_i, ar);
      const ProductBasis basis_ar = basis.restricted(ar);
      const DensityMatrix tilde = dephase(rho_ar, basis_ar, {0, 1});
      const double s_ar = entropy(tilde);
      const double s_a = entropy(partial_trace(tilde, {0}));
      const double s_r = entropy(partial_trace(tilde, {1}));
      report.terms["S(~AR)"] = s_ar;
      report.terms["S(~A)"] = s_a;
      report.terms["S(~R)"] = s_r;
      report.relations.push_back(inequality("S(~AR) <= S(~A) + S(~R)", s_ar, s_a + s_r, false));
      report.diagnostics["pure_state_corollary"] = "checked";
    }
  } else {
    report.theorem_id = "6";
    const KrausChannel& channel = *scenario.channel;
    if (!channel.is_incoherent()) {
      throw Error(ErrorKind::NotIncoherent,
                  "Kraus column residual " + std::to_string(channel.incoherence_residual()));
    }
    const DensityMatrix rho_f = apply_channel(channel, rho_i, r);
    const double c_ar_f = qi_coherence(rho_f, ar, basis).value;
    const double c_a_i = qi_coherence(rho_i, {a}, basis).value;
    const double c_a_f = qi_coherence(rho_f, {a}, basis).value;
    const double c_r_f = qi_coherence(rho_f, {r}, basis).value;
    report.terms = {{"C_AR|B(f)", c_ar_f}, {"C_A|BR(i)", c_a_i}, {"C_A|BR(f)", c_a_f}, {"C_R|AB(f)", c_r_f}};
    report.relations.push_back(inequality("C_AR|B(f) - C_A|BR(i) <= C_R|AB(f)", c_ar_f - c_a_i, c_r_f, false));
    report.relations.push_back(inequality("C_A|BR(f) <= C_A|BR(i)", c_a_f, c_a_i, false));
    report.diagnostics["channel_kraus_count"] = std::to_string(channel.operators().size());
  }
  report.finalize();
  return report;
}

}  // namespace cohere
