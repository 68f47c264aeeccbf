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


// Report writers. CSV output is UTF-8 with LF line endings and RFC 4180
// quoting; numbers use the shortest form that reads back exactly.

#ifndef IACLINT_REPORT_H_
#define IACLINT_REPORT_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "iaclint/curation.h"
#include "iaclint/evaluation.h"
#include "iaclint/metrics.h"
#include "iaclint/model.h"
#include "iaclint/scanner.h"

namespace iaclint {

enum class ReportFormat { kCsv, kJson };

// Smell columns of the per-script report: the catalog of `dialect`, or all
// smells when unset.
std::vector<SmellId> ReportColumns(std::optional<Dialect> dialect);

// One row per script: script_path, one count per column, total. Every
// writer returns IO_FAILURE when the stream goes bad.
absl::Status WriteScanReport(const ScanResult& scan,
                             std::optional<Dialect> dialect,
                             ReportFormat format, std::ostream& out);

absl::Status WriteMetricsReport(const CorpusMetrics& metrics,
                                ReportFormat format, std::ostream& out);

absl::Status WriteEvalReport(const EvalResult& result, ReportFormat format,
                             std::ostream& out);

// Shortest round-trip decimal form.
std::string FormatNumber(double value);
// Fixed notation; "n/a" for an undefined value.
std::string FormatFixed(std::optional<double> value, int decimals = 2);

// Human-readable summaries.
std::string ScanSummary(const ScanResult& scan,
                        const std::optional<CorpusMetrics>& metrics);
std::string EvalTable(const EvalResult& result);
std::string CurationListing(const std::vector<RepoMetadata>& rows);

}  // namespace iaclint

#endif  // IACLINT_REPORT_H_
