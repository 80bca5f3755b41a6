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

#include "cohere/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cohere/error.hpp"

namespace cohere {
namespace {

using nlohmann::json;

std::string real17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_matrix(std::ostringstream& os, const Matrix& m, const std::string& indent) {
  os << "[\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << indent << "  [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << (j ? ", " : "") << '[' << real17(m(i, j).real()) << ", " << real17(m(i, j).imag()) << ']';
    }
    os << ']' << (i + 1 < m.rows() ? "," : "") << '\n';
  }
  os << indent << ']';
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::BadFormat, std::string("invalid JSON: ") + e.what());
  }
}

// Serializes non-finite reals as strings, which plain JSON cannot carry.
json real(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

}  // namespace

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::BadFormat, "matrix must be a non-empty list of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = -1;
  Matrix m;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array()) throw Error(ErrorKind::BadFormat, "matrix row " + std::to_string(i) + " is not a list");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      m.resize(rows, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(ErrorKind::BadFormat, "matrix rows have different lengths");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      if (e.is_number()) {
        m(i, c) = Complex(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(i, c) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        throw Error(ErrorKind::BadFormat, "entry (" + std::to_string(i) + "," + std::to_string(c) +
                                              ") must be [re, im]");
      }
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

DensityMatrix parse_state_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
    throw Error(ErrorKind::BadFormat, "state file needs \"dims\" and \"matrix\"");
  }
  Dims dims;
  if (!j["dims"].is_array()) throw Error(ErrorKind::BadFormat, "\"dims\" must be a list");
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 1) throw Error(ErrorKind::BadFormat, "dims must be positive integers");
    dims.push_back(d.get<std::size_t>());
  }
  return validate(dims, matrix_from_json(j["matrix"]));
}

std::string format_state_json(const DensityMatrix& rho) {
  std::ostringstream os;
  os << "{\n  \"dims\": [";
  for (std::size_t i = 0; i < rho.dims().size(); ++i) os << (i ? ", " : "") << rho.dims()[i];
  os << "],\n  \"matrix\": ";
  write_matrix(os, rho.matrix(), "  ");
  os << "\n}\n";
  return os.str();
}

KrausChannel parse_channel_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("kraus") || !j["kraus"].is_array()) {
    throw Error(ErrorKind::BadFormat, "channel file needs \"dim\" and a \"kraus\" list");
  }
  if (!j["dim"].is_number_integer()) throw Error(ErrorKind::BadFormat, "\"dim\" must be an integer");
  const auto dim = j["dim"].get<long long>();
  std::vector<Matrix> ops;
  for (const auto& k : j["kraus"]) {
    Matrix m = matrix_from_json(k);
    if (m.rows() != dim || m.cols() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "Kraus operator is not " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    ops.push_back(std::move(m));
  }
  return KrausChannel(std::move(ops));
}

std::string format_channel_json(const KrausChannel& channel) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << channel.dim() << ",\n  \"kraus\": [\n";
  for (std::size_t k = 0; k < channel.operators().size(); ++k) {
    os << "    ";
    write_matrix(os, channel.operators()[k], "    ");
    os << (k + 1 < channel.operators().size() ? "," : "") << '\n';
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadFormat, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadFormat, "cannot write '" + path + "'");
  out << contents;
}

json to_json(const ProductBasis& basis) {
  json locals = json::array();
  for (const auto& u : basis.locals()) locals.push_back(matrix_to_json(u));
  return {{"dims", basis.dims()}, {"locals", std::move(locals)}};
}

json to_json(const MeasureValue& value) {
  json j = {{"value", real(value.value)}};
  if (value.witness) j["witness"] = to_json(*value.witness);
  if (value.search) {
    j["search"] = {{"starts_used", value.search->starts_used},
                   {"best_start", value.search->best_start},
                   {"iterations", value.search->iterations},
                   {"converged", value.search->converged}};
  }
  return j;
}

json to_json(const TheoremReport& report) {
  json terms = json::object();
  for (const auto& [k, v] : report.terms) terms[k] = real(v);
  json relations = json::array();
  for (const auto& r : report.relations) {
    relations.push_back({{"name", r.name},
                         {"lhs", real(r.lhs)},
                         {"rhs", real(r.rhs)},
                         {"slack", real(r.slack)},
                         {"kind", r.identity ? "identity" : "inequality"},
                         {"optimizer_dependent", r.optimizer_dependent},
                         {"pass", r.pass}});
  }
  return {{"theorem_id", report.theorem_id},
          {"state", report.state},
          {"terms", std::move(terms)},
          {"relations", std::move(relations)},
          {"lhs", real(report.lhs)},
          {"rhs", real(report.rhs)},
          {"slack", real(report.slack)},
          {"pass", report.pass},
          {"status", std::string(to_string(report.status))},
          {"retries_used", report.retries_used},
          {"diagnostics", report.diagnostics}};
}

json to_json(const EnsembleReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) failures.push_back({{"seed", f.seed}, {"index", f.index}});
  return {{"theorem_id", report.theorem_id},
          {"ensemble",
           {{"kind", std::string(to_string(report.spec.kind))},
            {"dims", report.spec.dims},
            {"count", report.spec.count},
            {"seed", report.spec.seed}}},
          {"trials", report.trials},
          {"passes", report.passes},
          {"passes_first_attempt", report.passes_first_attempt},
          {"findings", report.findings},
          {"failures", std::move(failures)},
          {"min_slack", real(report.min_slack)},
          {"histogram", {{"lo", real(report.histogram_lo)}, {"hi", real(report.histogram_hi)}, {"counts", report.histogram}}}};
}

json to_json(const PaperRow& row) {
  return {{"name", row.name},
          {"expected", row.expected},
          {"computed", real(row.computed)},
          {"delta", real(row.delta)},
          {"tolerance", row.tolerance},
          {"optimized", row.optimized},
          {"status", std::string(to_string(row.status))},
          {"retries_used", row.retries_used}};
}

std::string summary_csv(const EnsembleReport& report) {
  std::ostringstream os;
  os << "theorem_id,trials,passes,min_slack\n"
     << report.theorem_id << ',' << report.trials << ',' << report.passes << ',' << real17(report.min_slack) << '\n';
  return os.str();
}

}  // namespace cohere
