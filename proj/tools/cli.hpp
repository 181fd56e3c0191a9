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

#ifndef DKS_TOOLS_CLI_HPP_
#define DKS_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dks/generator.hpp"
#include "dks/graph.hpp"
#include "dks/solver.hpp"

namespace dks::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitGuard = 3;

enum class OutputFormat { kJson, kCsv };
enum class FileFormat { kEdgeList, kKCluster };

struct InstanceSource {
  std::optional<std::string> path;
  FileFormat file_format = FileFormat::kEdgeList;
  std::optional<GeneratorSpec> generator;
};

struct ExperimentSpec {
  InstanceSource source;
  SolverConfig solver;
  // When unset, q = clamp(n / 10, 2, n).
  std::optional<int> q;
  int repetitions = 1;
  OutputFormat output = OutputFormat::kJson;
  // Empty: write to the command's output stream.
  std::string output_path;
  // Writes time_s as 0 so that reports are byte-reproducible.
  bool omit_timing = false;
};

struct Instance {
  Graph graph;
  std::string name;
  std::vector<VertexId> planted;
  LoadDiagnostics diagnostics;
};

// Throws dks::ParseError / ConfigError, or std::runtime_error if the file
// cannot be opened.
Instance LoadInstance(const InstanceSource& source);

// One row of the solve report. integer_value is absent when no integer point
// was extracted.
struct ReportRow {
  std::string instance;
  std::int64_t n = 0;
  std::int64_t m = 0;
  int k = 0;
  std::string alg;
  int q = 0;
  std::int64_t iters = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  double bound = 0.0;
  std::optional<double> integer_value;
  bool certified = false;
  double time_s = 0.0;
  std::string termination;
};

struct SweepRow {
  int q = 0;
  std::int64_t iters = 0;
  double bound = 0.0;
  std::optional<double> integer_value;
  double wall_time_s = 0.0;
  std::string termination;
};

inline constexpr const char* kReportCsvHeader =
    "instance,n,m,k,alg,q,iters,restarts,seed,bound,integer_value,certified,"
    "time_s,termination";
inline constexpr const char* kSweepCsvHeader =
    "q,iters,bound,integer_value,wall_time_s,termination";

void WriteReportCsv(std::ostream& out, std::span<const ReportRow> rows);
std::vector<ReportRow> ReadReportCsv(std::istream& in);
void WriteSweepCsv(std::ostream& out, std::span<const SweepRow> rows);
std::vector<SweepRow> ReadSweepCsv(std::istream& in);

// "integer_point_found=3;max_iters=1" over the restarts of one run.
std::string SummarizeTerminations(std::span<const TerminationReason> reasons);

int CmdSolve(const ExperimentSpec& spec, std::ostream& out, std::ostream& err);
int CmdOracle(const ExperimentSpec& spec, double max_subsets, std::ostream& out,
              std::ostream& err);
int CmdSweep(const ExperimentSpec& spec, std::span<const int> q_list,
             std::span<const std::int64_t> iters_list, std::ostream& out,
             std::ostream& err);

// Parses argv (subcommands solve, oracle, sweep) and dispatches.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace dks::cli

#endif  // DKS_TOOLS_CLI_HPP_
