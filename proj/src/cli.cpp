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

#include "cohere/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "cohere/error.hpp"
#include "cohere/io.hpp"
#include "cohere/measures.hpp"
#include "cohere/verifier.hpp"

namespace cohere {
namespace {

using nlohmann::json;

const std::vector<std::string> kMeasureNames = {"C",        "Q",     "D",         "L",           "C_qi",      "Q_oneway",
                                                "D_oneway", "theta", "theta_sym", "mutual_info", "total_corr"};

struct RunConfig {
  // Input source: exactly one of file / state / ensemble.
  std::string file;
  std::string state;
  std::string ensemble;
  std::optional<double> p;
  std::optional<std::size_t> n;
  std::string dims;
  std::size_t index = 0;

  std::string basis = "computational";
  std::string measured = "0";
  std::string out;
  std::string save_state;
  std::string measures = "C";
  std::string theorem;
  std::string channel;
  std::size_t count = 100;
  std::size_t jobs = 0;
  std::string rows;
  std::optional<double> row_tol;

  double start = 0.0;
  double stop = 1.0;
  std::size_t steps = 11;

  SearchConfig search;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

std::vector<std::size_t> parse_indices(const std::string& s, const char* what) {
  std::vector<std::size_t> values;
  for (const auto& part : split(s)) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || v < 0) {
      throw Error(ErrorKind::BadParameter, std::string(what) + ": '" + part + "' is not a non-negative integer");
    }
    values.push_back(static_cast<std::size_t>(v));
  }
  return values;
}

Dims parse_dims(const std::string& s) {
  Dims dims = parse_indices(s, "--dims");
  if (dims.empty()) throw Error(ErrorKind::BadParameter, "--dims is empty");
  for (auto d : dims) {
    if (d < 1) throw Error(ErrorKind::BadParameter, "--dims entries must be >= 1");
  }
  return dims;
}

ProductBasis parse_basis(const std::string& name, const Dims& dims) {
  if (name == "computational") return ProductBasis::computational(dims);
  if (name == "fourier") return ProductBasis::fourier(dims);
  throw Error(ErrorKind::UnknownName, "basis '" + name + "' (expected computational or fourier)");
}

std::string real17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const RunConfig& rc, std::ostream& out, const std::string& text) {
  if (rc.out.empty()) {
    out << text;
  } else {
    write_file(rc.out, text);
  }
}

std::size_t source_count(const RunConfig& rc) {
  return static_cast<std::size_t>(!rc.file.empty()) + !rc.state.empty() + !rc.ensemble.empty();
}

struct LoadedState {
  DensityMatrix rho;
  std::string label;
};

LoadedState load_state(const RunConfig& rc) {
  if (source_count(rc) != 1) {
    throw Error(ErrorKind::BadParameter, "exactly one of --file, --state, --ensemble is required");
  }
  if (!rc.file.empty()) return {parse_state_json(read_file(rc.file)), rc.file};
  if (!rc.state.empty()) {
    NamedParams params;
    params.p = rc.p;
    params.n = rc.n;
    if (!rc.dims.empty()) params.dims = parse_dims(rc.dims);
    std::string label = rc.state;
    if (rc.p) label += ":p=" + real17(*rc.p);
    return {named_state(rc.state, params), label};
  }
  EnsembleSpec spec;
  spec.kind = parse_ensemble_kind(rc.ensemble);
  if (!rc.dims.empty()) spec.dims = parse_dims(rc.dims);
  spec.seed = rc.search.seed;
  spec.count = rc.index + 1;
  return {ensemble_state(spec, rc.index), std::string(to_string(spec.kind)) + ":seed=" +
                                              std::to_string(spec.seed) + ":index=" + std::to_string(rc.index)};
}

int cmd_measure(const RunConfig& rc, std::ostream& out) {
  std::vector<std::string> names = split(rc.measures);
  if (names.empty()) throw Error(ErrorKind::BadParameter, "--measure selects nothing");
  for (const auto& n : names) {
    if (std::find(kMeasureNames.begin(), kMeasureNames.end(), n) == kMeasureNames.end()) {
      throw Error(ErrorKind::UnknownName, "measure '" + n + "'");
    }
  }
  rc.search.check();
  const LoadedState loaded = load_state(rc);
  const DensityMatrix& rho = loaded.rho;
  const ProductBasis basis = parse_basis(rc.basis, rho.dims());
  const Subsystems measured = parse_indices(rc.measured, "--measured");

  const auto wants = [&](std::initializer_list<const char*> keys) {
    return std::any_of(keys.begin(), keys.end(),
                       [&](const char* k) { return std::find(names.begin(), names.end(), k) != names.end(); });
  };
  std::optional<DiscordDecomposition> full;
  if (wants({"Q", "D", "L"})) full = decompose(rho, basis, rc.search);
  std::optional<OneWayDecomposition> oneway;
  if (wants({"Q_oneway", "D_oneway"})) oneway = decompose_one_way(rho, measured, basis, rc.search);

  json measures = json::object();
  for (const auto& n : names) {
    MeasureValue v;
    if (n == "C") v = coherence(rho, basis);
    else if (n == "Q") v = full->discord;
    else if (n == "D") v = full->dissonance;
    else if (n == "L") v = full->cost;
    else if (n == "C_qi") v = qi_coherence(rho, measured, basis);
    else if (n == "Q_oneway") v = oneway->discord;
    else if (n == "D_oneway") v = oneway->dissonance;
    else if (n == "theta") v = zurek_discord(rho, measured, rc.search, {basis});
    else if (n == "theta_sym") v = symmetric_discord(rho, rc.search, {basis});
    else if (n == "mutual_info") v.value = mutual_information(rho, measured);
    else if (n == "total_corr") v.value = total_correlation(rho);
    measures[n] = to_json(v);
  }
  json doc = {{"state", {{"source", loaded.label}, {"dims", rho.dims()}}}, {"measures", std::move(measures)}};
  if (!rc.save_state.empty()) write_file(rc.save_state, format_state_json(rho));
  emit(rc, out, doc.dump(2) + "\n");
  return kExitOk;
}

Dims default_dims(const std::string& theorem) {
  if (theorem == "4" || theorem == "5" || theorem == "6") return {2, 2, 2};
  return {2, 2};
}

int cmd_verify(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  if (rc.theorem.empty()) throw Error(ErrorKind::BadParameter, "--theorem is required");
  const std::string id = canonical_theorem_id(rc.theorem);
  rc.search.check();
  VerifyOptions options;
  options.jobs = rc.jobs ? rc.jobs : std::max(1u, std::thread::hardware_concurrency());
  options.measured = parse_indices(rc.measured, "--measured");
  if (!rc.channel.empty()) options.channel = parse_channel_json(read_file(rc.channel));

  if (!rc.file.empty() || !rc.state.empty()) {
    const LoadedState loaded = load_state(rc);
    options.basis = parse_basis(rc.basis, loaded.rho.dims());
    TheoremReport report = check_state(id, loaded.rho, rc.search, options);
    report.state = loaded.label;
    emit(rc, out, to_json(report).dump(2) + "\n");
    if (report.status == CheckStatus::Finding) err << "warning: finding on " << report.state << "\n";
    if (report.status == CheckStatus::Fail) {
      err << "FAIL theorem " << id << " on " << report.state << " (slack " << real17(report.slack) << ")\n";
      return kExitVerifyFailed;
    }
    return kExitOk;
  }

  EnsembleSpec spec;
  spec.kind = rc.ensemble.empty() ? EnsembleKind::InducedMixed : parse_ensemble_kind(rc.ensemble);
  spec.dims = rc.dims.empty() ? default_dims(id) : parse_dims(rc.dims);
  spec.count = rc.count;
  spec.seed = rc.search.seed;
  options.basis = parse_basis(rc.basis, spec.dims);
  const EnsembleRun run = verify_ensemble(id, spec, rc.search, options);
  const std::string json_text = to_json(run.summary).dump(2) + "\n";
  if (rc.out.empty()) {
    out << json_text << summary_csv(run.summary);
  } else {
    write_file(rc.out, json_text);
    write_file(rc.out + ".csv", summary_csv(run.summary));
  }
  if (run.summary.findings) err << "warning: " << run.summary.findings << " finding(s)\n";
  if (!run.summary.failures.empty()) {
    err << "FAIL theorem " << id << ": " << run.summary.failures.size() << " of " << run.summary.trials
        << " trials\n";
    for (const auto& k : run.summary.failures) err << "  replay --seed " << k.seed << " --index " << k.index << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_paper(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  rc.search.check();
  PaperOptions options;
  options.row_prefixes = split(rc.rows);
  options.tolerance_override = rc.row_tol;
  const auto rows = reproduce_paper(rc.search, options);

  std::ostringstream table;
  char line[200];
  std::snprintf(line, sizeof line, "%-28s %12s %14s %10s %8s\n", "row", "expected", "computed", "delta", "status");
  table << line;
  json doc = json::array();
  bool ok = true;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-28s %12.6f %14.8f %10.2e %8s\n", r.name.c_str(), r.expected, r.computed,
                  r.delta, std::string(to_string(r.status)).c_str());
    table << line;
    doc.push_back(to_json(r));
    if (r.status == CheckStatus::Fail) {
      ok = false;
      err << "FAIL row " << r.name << ": |" << real17(r.computed) << " - " << real17(r.expected)
          << "| > " << real17(r.tolerance) << "\n";
    }
  }
  out << table.str();
  if (!rc.out.empty()) write_file(rc.out, doc.dump(2) + "\n");
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_sweep(const RunConfig& rc, std::ostream& out) {
  if (rc.steps < 2) throw Error(ErrorKind::BadParameter, "--steps must be >= 2");
  if (!(rc.start >= 0.0 && rc.stop <= 1.0 && rc.start <= rc.stop)) {
    throw Error(ErrorKind::BadParameter, "sweep range must satisfy 0 <= start <= stop <= 1");
  }
  rc.search.check();
  const std::string family = rc.state.empty() ? "werner" : rc.state;
  std::ostringstream csv;
  csv << "p,C,theta_ab,theta,equality_gap\n";
  for (std::size_t i = 0; i < rc.steps; ++i) {
    const double p = rc.start + (rc.stop - rc.start) * static_cast<double>(i) / static_cast<double>(rc.steps - 1);
    NamedParams params;
    params.p = p;
    const DensityMatrix rho = named_state(family, params);
    const ProductBasis basis = ProductBasis::computational(rho.dims());
    const SearchConfig cfg = [&] {
      SearchConfig c = rc.search;
      c.seed = mix_seed(rc.search.seed, i);
      return c;
    }();
    const double c = coherence(rho, basis).value;
    const double theta_ab = zurek_discord(rho, {0}, cfg, {basis}).value;
    const double theta = symmetric_discord(rho, cfg, {basis}).value;
    csv << real17(p) << ',' << real17(c) << ',' << real17(theta_ab) << ',' << real17(theta) << ','
        << real17(std::abs(theta_ab - c)) << '\n';
  }
  emit(rc, out, csv.str());
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian:
    case ErrorKind::NotPositive:
    case ErrorKind::BadTrace:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotUnitary:
    case ErrorKind::NotComplete:
    case ErrorKind::NotIncoherent:
      return kExitInvalid;
    case ErrorKind::NoConvergence:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

void add_search_flags(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--starts", rc.search.random_starts, "Haar-random starts per basis search");
  cmd->add_option("--max-iter", rc.search.max_iterations, "line searches per start");
  cmd->add_option("--tol", rc.search.tolerance, "descent stopping tolerance");
  cmd->add_option("--seed", rc.search.seed, "master seed for every random choice");
  cmd->add_option("--jobs", rc.jobs, "worker threads (default: all cores)");
  cmd->add_option("--out", rc.out, "output path (default: stdout)");
}

void add_input_flags(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--file", rc.file, "state JSON file");
  cmd->add_option("--state", rc.state, "named state: plus_plus, bell, datta, werner, ghz, w, maximally_mixed");
  cmd->add_option("--p", rc.p, "werner mixing weight");
  cmd->add_option("--n", rc.n, "party count for ghz / w");
  cmd->add_option("--dims", rc.dims, "subsystem dimensions, e.g. 2,2");
  cmd->add_option("--basis", rc.basis, "reference basis: computational or fourier");
  cmd->add_option("--measured", rc.measured, "measured subsystems, e.g. 0");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  CLI::App app{"Coherence, discord and dissonance of small multipartite states", "cohere"};
  app.require_subcommand(1);

  auto* measure = app.add_subcommand("measure", "evaluate measures on one state");
  add_input_flags(measure, rc);
  add_search_flags(measure, rc);
  measure->add_option("--ensemble", rc.ensemble, "draw the state from an ensemble (haar, induced, product, classical)");
  measure->add_option("--index", rc.index, "ensemble member index");
  measure->add_option("--measure", rc.measures, "comma list of C,Q,D,L,C_qi,Q_oneway,D_oneway,theta,theta_sym,mutual_info,total_corr");
  measure->add_option("--save-state", rc.save_state, "also write the input state as JSON");

  auto* verify = app.add_subcommand("verify", "check a theorem on an ensemble or one state");
  add_input_flags(verify, rc);
  add_search_flags(verify, rc);
  verify->add_option("--theorem", rc.theorem, "1, chain, bounds, 2_3, 4, 5 or 6");
  verify->add_option("--ensemble", rc.ensemble, "haar, induced, product or classical (default induced)");
  verify->add_option("--count", rc.count, "ensemble size");
  verify->add_option("--channel", rc.channel, "Kraus channel JSON for theorem 6");

  auto* paper = app.add_subcommand("paper", "reproduce the worked examples");
  add_search_flags(paper, rc);
  paper->add_option("--rows", rc.rows, "comma list of row-name prefixes");
  paper->add_option("--row-tol", rc.row_tol, "override every row tolerance");

  auto* sweep = app.add_subcommand("sweep", "sweep the Werner family over p");
  add_search_flags(sweep, rc);
  sweep->add_option("--state", rc.state, "family to sweep (werner)");
  sweep->add_option("--start", rc.start, "first p");
  sweep->add_option("--stop", rc.stop, "last p");
  sweep->add_option("--steps", rc.steps, "number of rows (>= 2)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (measure->parsed()) return cmd_measure(rc, out);
    if (verify->parsed()) return cmd_verify(rc, out, err);
    if (paper->parsed()) return cmd_paper(rc, out, err);
    return cmd_sweep(rc, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace cohere
