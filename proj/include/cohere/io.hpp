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

// File formats.
//
//   state:   {"dims": [d1, ..., dN], "matrix": [[[re, im], ...], ...]}
//   channel: {"dim": d, "kraus": [matrix, ...]}
//
// Matrices are row-major lists of rows; each entry is a [re, im] pair.
// Writers print every real with 17 significant digits so a written file
// reads back bit for bit.

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "cohere/channels.hpp"
#include "cohere/measures.hpp"
#include "cohere/report.hpp"
#include "cohere/verifier.hpp"

namespace cohere {

/// Errors: BadFormat for malformed JSON or schema; validation errors as in validate().
DensityMatrix parse_state_json(std::string_view text);
std::string format_state_json(const DensityMatrix& rho);

/// Errors: BadFormat, DimensionMismatch, NotComplete.
KrausChannel parse_channel_json(std::string_view text);
std::string format_channel_json(const KrausChannel& channel);

std::string read_file(const std::string& path);  ///< Errors: BadFormat if unreadable
void write_file(const std::string& path, const std::string& contents);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ProductBasis& basis);
nlohmann::json to_json(const MeasureValue& value);
nlohmann::json to_json(const TheoremReport& report);
nlohmann::json to_json(const EnsembleReport& report);
nlohmann::json to_json(const PaperRow& row);

/// "theorem_id,trials,passes,min_slack" header plus one row.
std::string summary_csv(const EnsembleReport& report);

}  // namespace cohere
