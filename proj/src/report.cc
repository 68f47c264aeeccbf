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


#include "iaclint/report.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "json.hpp"
#include "src/csv.h"

namespace iaclint {

namespace {

using nlohmann::ordered_json;

absl::Status Finish(std::ostream& out) {
  out.flush();
  if (!out.good()) {
    return absl::UnavailableError("IO_FAILURE: could not write report");
  }
  return absl::OkStatus();
}

ordered_json OptionalNumber(std::optional<double> value) {
  if (!value.has_value()) return nullptr;
  return *value;
}

std::string OptionalCell(std::optional<double> value) {
  return value.has_value() ? FormatNumber(*value) : "n/a";
}

std::string StatusCode(const ScriptReport& script) {
  if (script.status.ok()) return "OK";
  if (!script.readable) return "IO_FAILURE";
  return "MALFORMED_SOURCE";
}

void WriteScanCsv(const ScanResult& scan, const std::vector<SmellId>& columns,
                  std::ostream& out) {
  std::vector<std::string> header = {"script_path"};
  for (SmellId smell : columns) header.emplace_back(SmellCode(smell));
  header.emplace_back("total");
  out << internal::CsvLine(header) << '\n';
  for (const ScriptReport& script : scan.scripts) {
    SmellCounts counts{};
    for (const Occurrence& occurrence : script.occurrences) {
      ++counts[SmellIndex(occurrence.smell)];
    }
    std::vector<std::string> row = {internal::CsvField(script.path)};
    std::size_t total = 0;
    for (SmellId smell : columns) {
      row.push_back(std::to_string(counts[SmellIndex(smell)]));
      total += counts[SmellIndex(smell)];
    }
    row.push_back(std::to_string(total));
    out << internal::CsvLine(row) << '\n';
  }
}

void WriteScanJson(const ScanResult& scan, const std::vector<SmellId>& columns,
                   std::ostream& out) {
  ordered_json doc;
  ordered_json scripts = ordered_json::array();
  for (const ScriptReport& script : scan.scripts) {
    ordered_json entry;
    entry["path"] = script.path;
    entry["dialect"] = std::string(DialectName(script.dialect));
    entry["status"] = StatusCode(script);
    if (!script.status.ok()) {
      entry["message"] = std::string(script.status.message());
    }
    entry["loc"] = script.loc;
    ordered_json occurrences = ordered_json::array();
    for (const Occurrence& occurrence : script.occurrences) {
      ordered_json o;
      o["smell"] = std::string(SmellCode(occurrence.smell));
      o["line"] = occurrence.line;
      o["snippet"] = occurrence.snippet;
      if (occurrence.secret_subtype.has_value()) {
        o["secret_subtype"] =
            std::string(SecretSubtypeName(*occurrence.secret_subtype));
      }
      occurrences.push_back(std::move(o));
    }
    entry["occurrences"] = std::move(occurrences);
    scripts.push_back(std::move(entry));
  }
  doc["scripts"] = std::move(scripts);
  ordered_json totals = ordered_json::object();
  std::size_t total = 0;
  for (SmellId smell : columns) {
    totals[std::string(SmellCode(smell))] = scan.totals[SmellIndex(smell)];
    total += scan.totals[SmellIndex(smell)];
  }
  doc["totals"] = std::move(totals);
  doc["total"] = total;
  doc["total_loc"] = scan.total_loc;
  ordered_json errors = ordered_json::array();
  for (const ScanError& error : scan.errors) {
    errors.push_back({{"path", error.path},
                      {"message", std::string(error.status.message())}});
  }
  doc["errors"] = std::move(errors);
  out << doc.dump(2) << '\n';
}

std::string Pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string PadLeft(std::string text, std::size_t width) {
  if (text.size() < width) text.insert(0, width - text.size(), ' ');
  return text;
}

}  // namespace

std::vector<SmellId> ReportColumns(std::optional<Dialect> dialect) {
  std::vector<SmellId> columns;
  for (SmellId smell : kAllSmells) {
    if (!dialect.has_value() || SmellAppliesTo(smell, *dialect)) {
      columns.push_back(smell);
    }
  }
  return columns;
}

std::string FormatNumber(double value) {
  std::array<char, 64> buffer{};
  const auto [end, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer.data(), end);
}

std::string FormatFixed(std::optional<double> value, int decimals) {
  if (!value.has_value()) return "n/a";
  std::array<char, 64> buffer{};
  const auto [end, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), *value,
                    std::chars_format::fixed, decimals);
  if (ec != std::errc()) return "n/a";
  return std::string(buffer.data(), end);
}

absl::Status WriteScanReport(const ScanResult& scan,
                             std::optional<Dialect> dialect,
                             ReportFormat format, std::ostream& out) {
  const std::vector<SmellId> columns = ReportColumns(dialect);
  if (format == ReportFormat::kCsv) {
    WriteScanCsv(scan, columns, out);
  } else {
    WriteScanJson(scan, columns, out);
  }
  return Finish(out);
}

absl::Status WriteMetricsReport(const CorpusMetrics& metrics,
                                ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::kCsv) {
    out << "smell,occurrences,density_per_kloc,script_pct\n";
    for (SmellId smell : kAllSmells) {
      const SmellMetric& m = metrics.per_smell[SmellIndex(smell)];
      out << SmellCode(smell) << ',' << m.occurrences << ','
          << FormatNumber(m.density) << ',' << FormatNumber(m.script_pct)
          << '\n';
    }
    out << "COMBINED," << metrics.combined.occurrences << ','
        << FormatNumber(metrics.combined.density) << ','
        << FormatNumber(metrics.combined.script_pct) << '\n';
    return Finish(out);
  }
  ordered_json doc;
  doc["total_loc"] = metrics.total_loc;
  doc["script_count"] = metrics.script_count;
  ordered_json smells = ordered_json::object();
  auto metric_json = [](const SmellMetric& m) {
    return ordered_json{{"occurrences", m.occurrences},
                        {"density", m.density},
                        {"script_pct", m.script_pct}};
  };
  for (SmellId smell : kAllSmells) {
    smells[std::string(SmellCode(smell))] =
        metric_json(metrics.per_smell[SmellIndex(smell)]);
  }
  doc["smells"] = std::move(smells);
  doc["combined"] = metric_json(metrics.combined);
  out << doc.dump(2) << '\n';
  return Finish(out);
}

absl::Status WriteEvalReport(const EvalResult& result, ReportFormat format,
                             std::ostream& out) {
  const bool csv = format == ReportFormat::kCsv;
  ordered_json rows = ordered_json::array();
  auto emit = [&](std::string label, const Confusion& c) {
    if (csv) {
      out << label << ',' << c.true_positives << ',' << c.false_positives
          << ',' << c.false_negatives << ',' << OptionalCell(c.Precision())
          << ',' << OptionalCell(c.Recall()) << '\n';
      return;
    }
    rows.push_back({{"smell", std::move(label)},
                    {"true_positives", c.true_positives},
                    {"false_positives", c.false_positives},
                    {"false_negatives", c.false_negatives},
                    {"precision", OptionalNumber(c.Precision())},
                    {"recall", OptionalNumber(c.Recall())}});
  };
  if (csv) out << "smell,true_positives,false_positives,false_negatives,"
                  "precision,recall\n";
  for (SmellId smell : kAllSmells) {
    if (!result.observed[SmellIndex(smell)]) continue;
    emit(std::string(SmellCode(smell)), result.per_smell[SmellIndex(smell)]);
  }
  emit("NO_SMELL", result.no_smell);
  emit("AGGREGATE", result.aggregate);
  if (csv) {
    out << "AVERAGE,,,," << OptionalCell(result.macro_precision) << ','
        << OptionalCell(result.macro_recall) << '\n';
    return Finish(out);
  }
  ordered_json doc;
  doc["granularity"] =
      result.granularity == Granularity::kScript ? "script" : "line";
  doc["script_count"] = result.script_count;
  doc["rows"] = std::move(rows);
  doc["average"] = {{"precision", OptionalNumber(result.macro_precision)},
                    {"recall", OptionalNumber(result.macro_recall)}};
  doc["errors"] = result.errors;
  out << doc.dump(2) << '\n';
  return Finish(out);
}

std::string ScanSummary(const ScanResult& scan,
                        const std::optional<CorpusMetrics>& metrics) {
  std::size_t ansible = 0;
  std::size_t chef = 0;
  std::size_t malformed = 0;
  std::size_t unreadable = 0;
  for (const ScriptReport& script : scan.scripts) {
    (script.dialect == Dialect::kAnsible ? ansible : chef)++;
    if (!script.readable) {
      ++unreadable;
    } else if (!script.status.ok()) {
      ++malformed;
    }
  }
  std::string text = "Scripts scanned: " + std::to_string(scan.scripts.size()) +
                     " (ansible " + std::to_string(ansible) + ", chef " +
                     std::to_string(chef) + ")\n";
  if (malformed > 0 || unreadable > 0) {
    text += "Malformed: " + std::to_string(malformed) +
            ", unreadable: " + std::to_string(unreadable) + "\n";
  }
  text += "Lines of code: " + std::to_string(scan.total_loc) + "\n\n";
  text += Pad("Smell", 36) + PadLeft("Count", 8) + PadLeft("Density", 10) +
          PadLeft("Script%", 10) + "\n";
  auto line = [&](std::string_view name, std::size_t count,
                  std::optional<double> density, std::optional<double> pct) {
    text += Pad(std::string(name), 36) + PadLeft(std::to_string(count), 8) +
            PadLeft(FormatFixed(density), 10) + PadLeft(FormatFixed(pct), 10) +
            "\n";
  };
  for (SmellId smell : kAllSmells) {
    const std::size_t i = SmellIndex(smell);
    std::optional<double> density;
    std::optional<double> pct;
    if (metrics.has_value()) {
      density = metrics->per_smell[i].density;
      pct = metrics->per_smell[i].script_pct;
    }
    line(SmellDisplayName(smell), scan.totals[i], density, pct);
  }
  std::optional<double> density;
  std::optional<double> pct;
  if (metrics.has_value()) {
    density = metrics->combined.density;
    pct = metrics->combined.script_pct;
  }
  line("Combined", scan.TotalOccurrences(), density, pct);
  return text;
}

std::string EvalTable(const EvalResult& result) {
  std::string text = Pad("Smell Name", 32) + PadLeft("Occurrences", 12) +
                     PadLeft("Precision", 11) + PadLeft("Recall", 8) + "\n";
  auto row = [&](std::string_view name, const Confusion& c) {
    text += Pad(std::string(name), 32) +
            PadLeft(std::to_string(c.true_positives + c.false_negatives), 12) +
            PadLeft(FormatFixed(c.Precision()), 11) +
            PadLeft(FormatFixed(c.Recall()), 8) + "\n";
  };
  for (SmellId smell : kAllSmells) {
    if (!result.observed[SmellIndex(smell)]) continue;
    row(SmellDisplayName(smell), result.per_smell[SmellIndex(smell)]);
  }
  row("No smell", result.no_smell);
  text += Pad("Average", 32) + PadLeft("", 12) +
          PadLeft(FormatFixed(result.macro_precision), 11) +
          PadLeft(FormatFixed(result.macro_recall), 8) + "\n";
  row("Aggregate", result.aggregate);
  return text;
}

std::string CurationListing(const std::vector<RepoMetadata>& rows) {
  std::string text;
  std::size_t passed = 0;
  for (const RepoMetadata& row : rows) {
    const CurationVerdict verdict = Curate(row);
    text += row.name + ": " + (verdict.pass ? "PASS" : "FAIL");
    if (!verdict.pass) {
      text += " [";
      for (std::size_t i = 0; i < verdict.failed.size(); ++i) {
        if (i > 0) text += ", ";
        text += std::string(CriterionId(verdict.failed[i]));
      }
      text += "]";
      if (verdict.division_undefined) text += " (DIVISION_UNDEFINED)";
    }
    text += "\n";
    passed += verdict.pass ? 1 : 0;
  }
  text += "\nFunnel:\n";
  for (const FunnelStage& stage : CurationFunnel(rows)) {
    text += "  " + Pad(stage.label, 12) + std::to_string(stage.remaining) +
            "\n";
  }
  text += "Passed: " + std::to_string(passed) + " of " +
          std::to_string(rows.size()) + "\n";
  return text;
}

}  // namespace iaclint
