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

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohere {

enum class ErrorKind {
  NotHermitian,
  NotPositive,
  BadTrace,
  DimensionMismatch,
  EmptyKeepSet,
  IndexOutOfRange,
  EmptySubset,
  BadPartition,
  BadSubset,
  NoConvergence,
  BadAngleCount,
  NotUnitary,
  UnknownName,
  BadParameter,
  NotComplete,
  NotIncoherent,
  UnknownTheorem,
  BadFormat,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. what() starts with the kind name,
/// e.g. "NotPositive: min eigenvalue -0.2".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cohere
