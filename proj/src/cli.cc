// Copyright 2026 The iaclint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "iaclint/cli.h"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "iaclint/curation.h"
#include "iaclint/evaluation.h"
#include "iaclint/metrics.h"
#include "iaclint/report.h"
#include "iaclint/scanner.h"

namespace iaclint {

namespace {

struct ScanFlags {
  std::string path;
  std::string dialect = "auto";
  std::string format = "csv";
  std::string out;
  std::string metrics;
  std::optional<long long> fail_threshold;
  int jobs = 0;
  bool strict_ansible = false;
};

struct EvalFlags {
  std::string path;
  std::string oracle;
  std::string granularity = "script";
  std::string dialect = "auto";
  std::string format;
  std::string out;
  int jobs = 0;
};

std::optional<Dialect> ToDialect(const std::string& name) {
  if (name == "ansible") return Dialect::kAnsible;
  if (name == "chef") return Dialect::kChef;
  return std::nullopt;
}

ReportFormat ToFormat(const std::string& name) {
  return name == "json" ? ReportFormat::kJson : ReportFormat::kCsv;
}

// Writes to `path`, or to `fallback` when `path` is empty.
template <typename Writer>
absl::Status WriteTo(const std::string& path, std::ostream& fallback,
                     Writer&& writer) {
  if (path.empty()) return writer(fallback);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    return absl::UnavailableError("IO_FAILURE: cannot open " + path);
  }
  return writer(file);
}

absl::StatusOr<ScanResult> RunScan(const std::string& path,
                                   std::optional<Dialect> dialect, int jobs,
                                   bool strict_ansible, std::ostream& err) {
  ScanOptions options;
  options.dialect = dialect;
  options.jobs = jobs;
  options.strict_ansible = strict_ansible;
  absl::StatusOr<ScanResult> scan = ScanTree(path, options);
  if (!scan.ok()) return scan;
  for (const ScanError& error : scan->errors) {
    err << "warning: " << error.path << ": " << error.status.message()
        << '\n';
  }
  for (const ScriptReport& script : scan->scripts) {
    if (!script.status.ok()) {
      err << "warning: " << script.path << ": " << script.status.message()
          << '\n';
    }
  }
  return scan;
}

int CmdScan(const ScanFlags& flags, std::ostream& out, std::ostream& err) {
  const std::optional<Dialect> dialect = ToDialect(flags.dialect);
  absl::StatusOr<ScanResult> scan = RunScan(
      flags.path, dialect, flags.jobs, flags.strict_ansible, err);
  if (!scan.ok()) {
    err << "error: " << scan.status().message() << '\n';
    return kExitFatal;
  }
  const ReportFormat format = ToFormat(flags.format);
  absl::Status written = WriteTo(flags.out, out, [&](std::ostream& stream) {
    return WriteScanReport(*scan, dialect, format, stream);
  });
  if (!written.ok()) {
    err << "error: " << written.message() << '\n';
    return kExitFatal;
  }
  absl::StatusOr<CorpusMetrics> metrics = ComputeMetrics(*scan);
  if (!flags.metrics.empty()) {
    if (!metrics.ok()) {
      err << "error: " << metrics.status().message() << '\n';
      return kExitFatal;
    }
    absl::Status status = WriteTo(flags.metrics, out, [&](std::ostream& s) {
      return WriteMetricsReport(*metrics, format, s);
    });
    if (!status.ok()) {
      err << "error: " << status.message() << '\n';
      return kExitFatal;
    }
  }
  // Keep the report stream clean when it carries the report.
  std::ostream& summary = flags.out.empty() ? err : out;
  summary << ScanSummary(*scan, metrics.ok()
                                    ? std::optional<CorpusMetrics>(*metrics)
                                    : std::nullopt);
  if (flags.fail_threshold.has_value() &&
      static_cast<long long>(scan->TotalOccurrences()) >
          *flags.fail_threshold) {
    summary << "Threshold exceeded: " << scan->TotalOccurrences() << " > "
            << *flags.fail_threshold << '\n';
    return kExitThresholdExceeded;
  }
  return kExitOk;
}

int CmdEval(const EvalFlags& flags, std::ostream& out, std::ostream& err) {
  std::ifstream oracle_stream(flags.oracle, std::ios::binary);
  if (!oracle_stream) {
    err << "error: IO_FAILURE: cannot read oracle " << flags.oracle << '\n';
    return kExitFatal;
  }
  absl::StatusOr<OracleFile> oracle = ReadOracle(oracle_stream);
  if (!oracle.ok()) {
    err << "error: " << oracle.status().message() << '\n';
    return kExitFatal;
  }
  for (const std::string& warning : oracle->warnings) {
    err << "warning: oracle " << warning << '\n';
  }
  absl::StatusOr<ScanResult> scan =
      RunScan(flags.path, ToDialect(flags.dialect), flags.jobs, false, err);
  if (!scan.ok()) {
    err << "error: " << scan.status().message() << '\n';
    return kExitFatal;
  }
  std::vector<Occurrence> detected;
  std::map<std::string, Dialect> scripts;
  for (const ScriptReport& script : scan->scripts) {
    if (!script.readable) continue;
    scripts[script.path] = script.dialect;
    detected.insert(detected.end(), script.occurrences.begin(),
                    script.occurrences.end());
  }
  const EvalResult result =
      Evaluate(detected, oracle->entries,
               flags.granularity == "line" ? Granularity::kLine
                                           : Granularity::kScript,
               scripts);
  for (const std::string& error : result.errors) {
    err << "warning: " << error << '\n';
  }
  if (flags.out.empty() && flags.format.empty()) {
    out << EvalTable(result);
    return kExitOk;
  }
  const ReportFormat format = ToFormat(flags.format);
  absl::Status written = WriteTo(flags.out, out, [&](std::ostream& stream) {
    return WriteEvalReport(result, format, stream);
  });
  if (!written.ok()) {
    err << "error: " << written.message() << '\n';
    return kExitFatal;
  }
  if (!flags.out.empty()) out << EvalTable(result);
  return kExitOk;
}

int CmdCurate(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: IO_FAILURE: cannot read metadata " << path << '\n';
    return kExitFatal;
  }
  absl::StatusOr<MetadataFile> metadata = ReadMetadata(in);
  if (!metadata.ok()) {
    err << "error: " << metadata.status().message() << '\n';
    return kExitFatal;
  }
  for (const std::string& warning : metadata->warnings) {
    err << "warning: metadata " << warning << '\n';
  }
  if (metadata->rows.empty()) {
    err << "error: no valid metadata rows\n";
    return kExitFatal;
  }
  out << CurationListing(metadata->rows);
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Security smell linter for Ansible and Chef scripts",
               "iaclint");
  app.require_subcommand(1);
  const std::vector<std::string> dialects = {"auto", "ansible", "chef"};
  const std::vector<std::string> formats = {"csv", "json"};

  ScanFlags scan;
  CLI::App* scan_cmd = app.add_subcommand("scan", "Report smells per script");
  scan_cmd->add_option("--path", scan.path, "Directory or file to scan")
      ->required();
  scan_cmd->add_option("--dialect", scan.dialect)
      ->check(CLI::IsMember(dialects));
  scan_cmd->add_option("--format", scan.format)->check(CLI::IsMember(formats));
  scan_cmd->add_option("--out", scan.out, "Report file (default: stdout)");
  scan_cmd->add_option("--metrics", scan.metrics,
                       "Also write corpus metrics to this file");
  scan_cmd->add_option("--fail-threshold", scan.fail_threshold,
                       "Exit 2 when total occurrences exceed N")
      ->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--jobs", scan.jobs, "Worker threads (0 = auto)")
      ->check(CLI::NonNegativeNumber);
  scan_cmd->add_flag("--strict-ansible", scan.strict_ansible,
                     "Skip YAML that does not look like Ansible");

  EvalFlags eval;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Precision and recall against an oracle");
  eval_cmd->add_option("--path", eval.path)->required();
  eval_cmd->add_option("--oracle", eval.oracle)->required();
  eval_cmd->add_option("--granularity", eval.granularity)
      ->check(CLI::IsMember({"script", "line"}));
  eval_cmd->add_option("--dialect", eval.dialect)
      ->check(CLI::IsMember(dialects));
  eval_cmd->add_option("--format", eval.format)->check(CLI::IsMember(formats));
  eval_cmd->add_option("--out", eval.out);
  eval_cmd->add_option("--jobs", eval.jobs)->check(CLI::NonNegativeNumber);

  std::string metadata;
  CLI::App* curate_cmd =
      app.add_subcommand("curate", "Apply repository selection criteria");
  curate_cmd->add_option("--metadata", metadata)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFatal;
  }
  if (scan_cmd->parsed()) return CmdScan(scan, out, err);
  if (eval_cmd->parsed()) return CmdEval(eval, out, err);
  return CmdCurate(metadata, out, err);
}

}  // namespace iaclint
