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

#include "cohere/report.hpp"

#include <cmath>
#include <limits>

namespace cohere {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Finding: return "finding";
    case CheckStatus::Fail: return "fail";
  }
  return "fail";
}

Relation inequality(std::string name, double lhs, double rhs, bool optimizer_dependent, double tolerance) {
  Relation r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = tolerance;
  r.optimizer_dependent = optimizer_dependent;
  r.pass = r.slack >= -tolerance;
  return r;
}

Relation identity(std::string name, double lhs, double rhs, double tolerance) {
  Relation r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = tolerance;
  r.identity = true;
  r.pass = std::abs(r.slack) <= tolerance;
  return r;
}

void TheoremReport::finalize() {
  pass = true;
  slack = std::numeric_limits<double>::infinity();
  for (const auto& r : relations) {
    pass = pass && r.pass;
    if (!r.identity && r.slack < slack) {
      slack = r.slack;
      lhs = r.lhs;
      rhs = r.rhs;
    }
  }
  if (std::isinf(slack)) slack = lhs = rhs = 0.0;
  status = pass ? CheckStatus::Pass : CheckStatus::Fail;
}

bool TheoremReport::has_optimizer_failure() const {
  for (const auto& r : relations)
    if (!r.pass && r.optimizer_dependent) return true;
  return false;
}

}  // namespace cohere
