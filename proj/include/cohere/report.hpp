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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cohere/tolerances.hpp"

namespace cohere {

enum class CheckStatus { Pass, Finding, Fail };

std::string_view to_string(CheckStatus status);

/// One inequality lhs <= rhs (or identity lhs == rhs) inside a report.
struct Relation {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  ///< rhs - lhs
  double tolerance = kTol.slack;
  bool identity = false;
  /// True when a term comes out of a basis search, so a failure may be the
  /// optimizer's and earns a retry.
  bool optimizer_dependent = false;
  bool pass = false;
};

Relation inequality(std::string name, double lhs, double rhs, bool optimizer_dependent,
                    double tolerance = kTol.slack);
Relation identity(std::string name, double lhs, double rhs, double tolerance = kTol.identity);

struct TheoremReport {
  std::string theorem_id;
  std::string state;  ///< named state, file, or "<kind>:seed=<s>:index=<i>"
  std::map<std::string, double> terms;
  std::vector<Relation> relations;
  /// The binding (smallest-slack) inequality.
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;  ///< every relation passes
  CheckStatus status = CheckStatus::Fail;
  std::size_t retries_used = 0;
  std::map<std::string, std::string> diagnostics;

  /// Fills lhs/rhs/slack/pass/status from `relations`.
  void finalize();
  bool has_optimizer_failure() const;
};

}  // namespace cohere
