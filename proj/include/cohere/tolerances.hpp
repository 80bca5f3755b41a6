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

namespace cohere {

/// Numerical thresholds shared by every module. Kept in one place so that
/// validation, entropy evaluation and inequality checks agree with each other.
struct Tolerances {
  double hermitian = 1e-10;        ///< max |a_ij - conj(a_ji)|
  double trace = 1e-10;            ///< |Tr rho - 1|
  double psd = 1e-10;              ///< eigenvalues in [-psd, 0) are clipped
  double eigen_zero = 1e-12;       ///< eigenvalues at or below count as 0 in entropies
  double support_overlap = 1e-10;  ///< support test for infinite relative entropy
  double unitary = 1e-10;          ///< ||U^dag U - I||_max
  double kraus = 1e-10;            ///< completeness / incoherence certificates
  double slack = 1e-8;             ///< inequality pass threshold: slack >= -slack
  double identity = 1e-9;          ///< closed-path and additivity identities
  double tie = 1e-10;              ///< basis-search minima closer than this are equal
};

inline constexpr Tolerances kTol{};

}  // namespace cohere
