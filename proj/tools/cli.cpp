// Copyright 2026 The dks Authors
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

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dks/errors.hpp"
#include "dks/graph.hpp"
#include "dks/oracle.hpp"
#include "json.hpp"

namespace dks::cli {
namespace {

using nlohmann::json;

std::string FormatFixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ',', '_');
  std::replace(s.begin(), s.end(), '\n', '_');
  return s;
}

std::string GeneratedName(const GeneratorSpec& g) {
  std::ostringstream name;
  name << (g.kind == GraphKind::kPlanted ? "planted" : "erdos") << "_n" << g.n
       << "_p" << g.p;
  if (g.kind == GraphKind::kPlanted) name << "_k" << g.planted_k;
  name << "_s" << g.seed;
  return name.str();
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::optional<double> ParseOptionalDouble(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

// Runs `body`, translating library exceptions into exit codes.
int Guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

// Writes to spec.output_path when set, otherwise to `out`.
void Emit(const ExperimentSpec& spec, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (spec.output_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(spec.output_path);
  if (!file) {
    throw std::runtime_error("cannot open '" + spec.output_path +
                             "' for writing");
  }
  write(file);
  if (!file) throw std::runtime_error("failed writing '" + spec.output_path + "'");
}

SolverConfig ResolvedConfig(const ExperimentSpec& spec, VertexId n) {
  SolverConfig cfg = spec.solver;
  cfg.q = spec.q ? *spec.q : std::clamp<VertexId>(n / 10, 2, std::max(n, 2));
  ValidateConfig(cfg, n);
  return cfg;
}

std::vector<std::int64_t> Labels(const Graph& g,
                                 std::span<const VertexId> vertices) {
  std::vector<std::int64_t> out;
  out.reserve(vertices.size());
  for (VertexId v : vertices) out.push_back(g.label(v));
  return out;
}

json ConfigJson(const SolverConfig& cfg) {
  std::string weights(ToString(cfg.weight_mode));
  if (cfg.weight_mode == WeightMode::kConstant) {
    weights += ":" + FormatFixed(cfg.weight_constant, 6);
  }
  return json{{"alg", ToString(cfg.algorithm)},
              {"k", cfg.k},
              {"q", cfg.q},
              {"iters", cfg.max_iters},
              {"restarts", cfg.max_restarts},
              {"seed", cfg.seed},
              {"init", ToString(cfg.init)},
              {"weights", weights},
              {"int_tol", cfg.int_tol},
              {"obj_tol", cfg.obj_tol},
              {"recompute_period", cfg.recompute_period}};
}

}  // namespace

Instance LoadInstance(const InstanceSource& source) {
  Instance inst;
  if (source.path && source.generator) {
    throw ConfigError("give either an input file or a generator, not both");
  }
  if (source.path) {
    std::ifstream in(*source.path);
    if (!in) throw std::runtime_error("cannot open '" + *source.path + "'");
    LoadedGraph loaded = source.file_format == FileFormat::kKCluster
                             ? LoadKClusterMatrix(in)
                             : LoadEdgeList(in);
    inst.graph = std::move(loaded.graph);
    inst.diagnostics = loaded.diagnostics;
    inst.name = Sanitize(std::filesystem::path(*source.path).filename());
    return inst;
  }
  if (source.generator) {
    GeneratedInstance gen = Generate(*source.generator);
    inst.graph = std::move(gen.graph);
    inst.planted = std::move(gen.planted);
    inst.name = GeneratedName(*source.generator);
    return inst;
  }
  throw ConfigError("no instance: pass --input or --generate");
}

std::string SummarizeTerminations(std::span<const TerminationReason> reasons) {
  std::map<TerminationReason, int> counts;
  for (auto r : reasons) ++counts[r];
  std::string out;
  for (const auto& [reason, count] : counts) {
    if (!out.empty()) out += ';';
    out += std::string(ToString(reason)) + "=" + std::to_string(count);
  }
  return out;
}

void WriteReportCsv(std::ostream& out, std::span<const ReportRow> rows) {
  out << kReportCsvHeader << "\n";
  for (const auto& r : rows) {
    out << r.instance << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.alg
        << ',' << r.q << ',' << r.iters << ',' << r.restarts << ',' << r.seed
        << ',' << FormatFixed(r.bound, 6) << ','
        << (r.integer_value ? FormatFixed(*r.integer_value, 0) : "") << ','
        << (r.certified ? 1 : 0) << ',' << FormatFixed(r.time_s, 6) << ','
        << r.termination << "\n";
  }
}

std::vector<ReportRow> ReadReportCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kReportCsvHeader) {
    throw ParseError(1, "missing report CSV header");
  }
  std::vector<ReportRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = SplitCsvLine(line);
    if (f.size() != 14) {
      throw ParseError(line_no, "expected 14 report fields, got " +
                                    std::to_string(f.size()));
    }
    try {
      ReportRow r;
      r.instance = f[0];
      r.n = std::stoll(f[1]);
      r.m = std::stoll(f[2]);
      r.k = std::stoi(f[3]);
      r.alg = f[4];
      r.q = std::stoi(f[5]);
      r.iters = std::stoll(f[6]);
      r.restarts = std::stoi(f[7]);
      r.seed = std::stoull(f[8]);
      r.bound = std::stod(f[9]);
      r.integer_value = ParseOptionalDouble(f[10]);
      r.certified = f[11] == "1";
      r.time_s = std::stod(f[12]);
      r.termination = f[13];
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "malformed report field");
    }
  }
  return rows;
}

void WriteSweepCsv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepCsvHeader << "\n";
  for (const auto& r : rows) {
    out << r.q << ',' << r.iters << ',' << FormatFixed(r.bound, 6) << ','
        << (r.integer_value ? FormatFixed(*r.integer_value, 0) : "") << ','
        << FormatFixed(r.wall_time_s, 6) << ',' << r.termination << "\n";
  }
}

std::vector<SweepRow> ReadSweepCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw ParseError(1, "missing sweep CSV header");
  }
  std::vector<SweepRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = SplitCsvLine(line);
    if (f.size() != 6) {
      throw ParseError(line_no, "expected 6 sweep fields, got " +
                                    std::to_string(f.size()));
    }
    try {
      SweepRow r;
      r.q = std::stoi(f[0]);
      r.iters = std::stoll(f[1]);
      r.bound = std::stod(f[2]);
      r.integer_value = ParseOptionalDouble(f[3]);
      r.wall_time_s = std::stod(f[4]);
      r.termination = f[5];
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "malformed sweep field");
    }
  }
  return rows;
}

int CmdSolve(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    if (spec.repetitions < 1) throw ConfigError("repetitions must be >= 1");
    const Instance inst = LoadInstance(spec.source);
    const Graph& g = inst.graph;
    const SolverConfig base = ResolvedConfig(spec, g.num_vertices());

    std::vector<ReportRow> rows;
    json runs = json::array();
    double bound_sum = 0.0, value_sum = 0.0, time_sum = 0.0;
    int valued = 0, certified = 0;
    ReportRow summary;
    summary.bound = -std::numeric_limits<double>::infinity();

    for (int rep = 0; rep < spec.repetitions; ++rep) {
      SolverConfig cfg = base;
      cfg.seed = base.seed + static_cast<std::uint64_t>(rep);
      const RunReport report = Run(g, cfg);
      const double time_s = spec.omit_timing ? 0.0 : report.wall_time_seconds;

      ReportRow row;
      row.instance = inst.name;
      row.n = g.num_vertices();
      row.m = g.num_edges();
      row.k = cfg.k;
      row.alg = std::string(ToString(cfg.algorithm));
      row.q = cfg.q;
      row.iters = cfg.max_iters;
      row.restarts = cfg.max_restarts;
      row.seed = cfg.seed;
      row.bound = report.best_bound;
      row.integer_value = report.best_integer_value;
      row.certified = report.is_clique_certified;
      row.time_s = time_s;
      row.termination = SummarizeTerminations(report.terminations);
      rows.push_back(row);

      bound_sum += report.best_bound;
      time_sum += time_s;
      summary.bound = std::max(summary.bound, report.best_bound);
      if (report.best_integer_value) {
        value_sum += *report.best_integer_value;
        ++valued;
        if (!summary.integer_value ||
            *report.best_integer_value > *summary.integer_value) {
          summary.integer_value = report.best_integer_value;
        }
      }
      certified += report.is_clique_certified ? 1 : 0;

      json run = {{"repetition", rep},
                  {"config", ConfigJson(cfg)},
                  {"bound", report.best_bound},
                  {"integer_value", report.best_integer_value
                                        ? json(*report.best_integer_value)
                                        : json(nullptr)},
                  {"certified", report.is_clique_certified},
                  {"iterations_total", report.iterations_total},
                  {"restarts_used", report.restarts_used},
                  {"time_s", time_s}};
      if (report.best_integer_value) {
        run["edges"] = static_cast<std::int64_t>(*report.best_integer_value / 2);
      }
      json reasons = json::array();
      for (auto r : report.terminations) reasons.push_back(ToString(r));
      run["terminations"] = std::move(reasons);
      run["vertex_set"] = report.best_vertex_set
                              ? json(Labels(g, *report.best_vertex_set))
                              : json(nullptr);
      runs.push_back(std::move(run));
    }

    const double reps = spec.repetitions;
    summary.instance = inst.name;
    summary.n = g.num_vertices();
    summary.m = g.num_edges();
    summary.k = base.k;
    summary.alg = std::string(ToString(base.algorithm));
    summary.q = base.q;
    summary.iters = base.max_iters;
    summary.restarts = base.max_restarts;
    summary.seed = base.seed;
    summary.certified = certified > 0;
    summary.time_s = time_sum / reps;
    summary.termination = "summary";

    Emit(spec, out, [&](std::ostream& os) {
      if (spec.output == OutputFormat::kCsv) {
        rows.push_back(summary);
        WriteReportCsv(os, rows);
        return;
      }
      json doc;
      doc["instance"] = {{"name", inst.name},
                         {"n", g.num_vertices()},
                         {"m", g.num_edges()},
                         {"planted", Labels(g, inst.planted)},
                         {"self_loops_dropped",
                          inst.diagnostics.self_loops_dropped},
                         {"duplicates_dropped",
                          inst.diagnostics.duplicates_dropped},
                         {"weights_ignored", inst.diagnostics.weights_ignored}};
      doc["runs"] = std::move(runs);
      doc["summary"] = {
          {"best_bound", summary.bound},
          {"best_integer_value", summary.integer_value
                                     ? json(*summary.integer_value)
                                     : json(nullptr)},
          {"mean_bound", bound_sum / reps},
          {"mean_integer_value",
           valued > 0 ? json(value_sum / valued) : json(nullptr)},
          {"mean_time_s", time_sum / reps},
          {"certified_runs", certified},
          {"repetitions", spec.repetitions}};
      os << doc.dump(2) << "\n";
    });
    if (inst.diagnostics.weights_ignored) {
      err << "warning: edge weights in the input were ignored\n";
    }
    return kExitOk;
  });
}

int CmdOracle(const ExperimentSpec& spec, double max_subsets, std::ostream& out,
              std::ostream& err) {
  return Guarded(err, [&] {
    const Instance inst = LoadInstance(spec.source);
    const OracleResult res = ExhaustiveDks(inst.graph, spec.solver.k, max_subsets);
    Emit(spec, out, [&](std::ostream& os) {
      os << "optimum " << res.optimum << "\n";
      os << "objective " << 2 * res.optimum << "\n";
      os << "argmax";
      for (auto label : Labels(inst.graph, res.argmax_set)) os << ' ' << label;
      os << "\n";
      os << "subsets_examined " << res.subsets_examined << "\n";
    });
    return kExitOk;
  });
}

int CmdSweep(const ExperimentSpec& spec, std::span<const int> q_list,
             std::span<const std::int64_t> iters_list, std::ostream& out,
             std::ostream& err) {
  return Guarded(err, [&] {
    if (q_list.empty() || iters_list.empty()) {
      throw ConfigError("sweep needs nonempty --q-list and --iters-list");
    }
    const Instance inst = LoadInstance(spec.source);
    const Graph& g = inst.graph;
    std::vector<SweepRow> rows;
    for (int q : q_list) {
      for (std::int64_t iters : iters_list) {
        ExperimentSpec cell = spec;
        cell.q = q;
        cell.solver.max_iters = iters;
        const SolverConfig cfg = ResolvedConfig(cell, g.num_vertices());
        const RunReport report = Run(g, cfg);
        SweepRow row;
        row.q = q;
        row.iters = iters;
        row.bound = report.best_bound;
        row.integer_value = report.best_integer_value;
        row.wall_time_s = spec.omit_timing ? 0.0 : report.wall_time_seconds;
        row.termination = SummarizeTerminations(report.terminations);
        rows.push_back(std::move(row));
      }
    }
    Emit(spec, out, [&](std::ostream& os) {
      if (spec.output == OutputFormat::kCsv) {
        WriteSweepCsv(os, rows);
        return;
      }
      json doc = json::array();
      for (const auto& r : rows) {
        doc.push_back({{"q", r.q},
                       {"iters", r.iters},
                       {"bound", r.bound},
                       {"integer_value", r.integer_value
                                             ? json(*r.integer_value)
                                             : json(nullptr)},
                       {"wall_time_s", r.wall_time_s},
                       {"termination", r.termination}});
      }
      os << json{{"instance", inst.name}, {"sweep", doc}}.dump(2) << "\n";
    });
    return kExitOk;
  });
}

namespace {

// Flags shared by every subcommand, bound into `spec`.
struct CommonFlags {
  std::string input;
  std::string format = "edgelist";
  std::string generate;
  VertexId n = 0;
  double p = 0.5;
  VertexId planted_k = 0;
  std::optional<std::uint64_t> graph_seed;
  std::string alg = "rcc2";
  std::string init = "auto";
  std::string weights = "degree";
  std::string out = "json";
  int q = 0;
};

void AddInstanceFlags(CLI::App* cmd, CommonFlags& f, ExperimentSpec& spec) {
  cmd->add_option("--input", f.input, "Edge-list (or --format kcluster) file");
  cmd->add_option("--format", f.format, "Input file format")
      ->check(CLI::IsMember({"edgelist", "kcluster"}));
  cmd->add_option("--generate", f.generate, "Generate G_p(n) or a planted instance")
      ->check(CLI::IsMember({"erdos", "planted"}));
  cmd->add_option("--n", f.n, "Generated vertex count");
  cmd->add_option("--p", f.p, "Generated edge probability");
  cmd->add_option("--planted-k", f.planted_k, "Planted clique size");
  cmd->add_option("--graph-seed", f.graph_seed,
                  "Generator seed (defaults to --seed)");
  cmd->add_option("--k", spec.solver.k, "Subgraph size, 3 <= k <= n-2")
      ->required();
  cmd->add_option("--seed", spec.solver.seed, "Base RNG seed");
  cmd->add_option("--out", f.out, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out-path", spec.output_path, "Write the report here");
}

void AddSolverFlags(CLI::App* cmd, CommonFlags& f, ExperimentSpec& spec) {
  cmd->add_option("--alg", f.alg, "rcc1 (proximal QP) or rcc2 (LP)")
      ->check(CLI::IsMember({"rcc1", "rcc2"}));
  cmd->add_option("--q", f.q,
                  "Coordinates per iteration; 10-20% of n works well "
                  "(default n/10)");
  cmd->add_option("--iters", spec.solver.max_iters, "Iterations per restart");
  cmd->add_option("--restarts", spec.solver.max_restarts, "Restart budget");
  cmd->add_option("--init", f.init, "Initial point")
      ->check(CLI::IsMember({"auto", "random", "uniform"}));
  cmd->add_option("--weights", f.weights,
                  "Proximal weights for rcc1: degree, sqrt or const:V");
  cmd->add_option("--int-tol", spec.solver.int_tol, "Integrality tolerance");
  cmd->add_option("--obj-tol", spec.solver.obj_tol,
                  "rcc1 stall tolerance on consecutive objectives (<= 0 off)");
  cmd->add_option("--recompute-period", spec.solver.recompute_period,
                  "Full objective recompute every this many updates");
  cmd->add_option("--reps", spec.repetitions,
                  "Repetitions; repetition i uses seed + i");
  cmd->add_flag("--no-timing", spec.omit_timing,
                "Report time_s as 0 for byte-reproducible output");
}

void ApplyFlags(const CommonFlags& f, ExperimentSpec& spec) {
  if (!f.input.empty()) {
    spec.source.path = f.input;
    spec.source.file_format =
        f.format == "kcluster" ? FileFormat::kKCluster : FileFormat::kEdgeList;
  }
  if (!f.generate.empty()) {
    GeneratorSpec g;
    g.kind = f.generate == "planted" ? GraphKind::kPlanted
                                     : GraphKind::kErdosRenyi;
    g.n = f.n;
    g.p = f.p;
    g.planted_k = f.planted_k;
    g.seed = f.graph_seed.value_or(spec.solver.seed);
    spec.source.generator = g;
  }
  spec.solver.algorithm = f.alg == "rcc1" ? Algorithm::kRcc1 : Algorithm::kRcc2;
  spec.solver.init = f.init == "random"    ? InitKind::kRandomSimplex
                     : f.init == "uniform" ? InitKind::kUniform
                                           : InitKind::kAuto;
  if (f.weights == "degree") {
    spec.solver.weight_mode = WeightMode::kDegree;
  } else if (f.weights == "sqrt") {
    spec.solver.weight_mode = WeightMode::kSqrtDegree;
  } else if (f.weights.rfind("const:", 0) == 0) {
    spec.solver.weight_mode = WeightMode::kConstant;
    try {
      spec.solver.weight_constant = std::stod(f.weights.substr(6));
    } catch (const std::logic_error&) {
      throw ConfigError("bad --weights value '" + f.weights + "'");
    }
  } else {
    throw ConfigError("--weights must be degree, sqrt or const:V");
  }
  spec.output = f.out == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  if (f.q != 0) spec.q = f.q;
}

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Densest k-subgraph by q-random coordinate constrained descent"};
  app.require_subcommand(1);

  ExperimentSpec spec;
  CommonFlags flags;
  double max_subsets = kMaxOracleSubsets;
  std::vector<int> q_list;
  std::vector<std::int64_t> iters_list;

  auto* solve = app.add_subcommand("solve", "Run the solver and report");
  AddInstanceFlags(solve, flags, spec);
  AddSolverFlags(solve, flags, spec);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum (small n)");
  AddInstanceFlags(oracle, flags, spec);
  oracle->add_option("--max-subsets", max_subsets,
                     "Refuse instances with more k-subsets than this");

  auto* sweep = app.add_subcommand("sweep", "Grid over q and iteration budgets");
  AddInstanceFlags(sweep, flags, spec);
  AddSolverFlags(sweep, flags, spec);
  sweep->add_option("--q-list", q_list, "Comma-separated q values")
      ->delimiter(',')
      ->required();
  sweep->add_option("--iters-list", iters_list,
                    "Comma-separated iteration budgets")
      ->delimiter(',')
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  const int applied = Guarded(err, [&] {
    ApplyFlags(flags, spec);
    return kExitOk;
  });
  if (applied != kExitOk) return applied;

  if (solve->parsed()) return CmdSolve(spec, out, err);
  if (oracle->parsed()) return CmdOracle(spec, max_subsets, out, err);
  return CmdSweep(spec, q_list, iters_list, out, err);
}

}  // namespace dks::cli
