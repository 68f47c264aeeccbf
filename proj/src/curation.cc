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


#include "iaclint/curation.h"

#include <charconv>
#include <cmath>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "src/csv.h"
#include "src/text_util.h"

namespace iaclint {

namespace {

constexpr std::string_view kColumns[] = {
    "name",           "total_file_count", "iac_script_count",
    "commits_per_month", "developer_count", "is_clone",
};

std::optional<std::uint64_t> ParseCount(std::string_view text) {
  text = internal::Trim(text);
  std::uint64_t value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  return value;
}

std::optional<double> ParseRate(std::string_view text) {
  text = internal::Trim(text);
  double value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty() ||
      !std::isfinite(value) || value < 0) {
    return std::nullopt;
  }
  return value;
}

std::optional<bool> ParseBool(std::string_view text) {
  const std::string lowered = internal::ToLower(internal::Trim(text));
  if (lowered == "true" || lowered == "yes" || lowered == "1") return true;
  if (lowered == "false" || lowered == "no" || lowered == "0") return false;
  return std::nullopt;
}

bool Passes(const RepoMetadata& meta, Criterion criterion) {
  switch (criterion) {
    case Criterion::kIacRatio:
      return meta.total_file_count > 0 &&
             100 * meta.iac_script_count >= 11 * meta.total_file_count;
    case Criterion::kNotClone:
      return !meta.is_clone;
    case Criterion::kCommitFrequency:
      return meta.commits_per_month >= 2.0;
    case Criterion::kDeveloperCount:
      return meta.developer_count >= 10;
  }
  return false;
}

}  // namespace

std::string_view CriterionId(Criterion criterion) {
  switch (criterion) {
    case Criterion::kIacRatio:
      return "Criterion-1";
    case Criterion::kNotClone:
      return "Criterion-2";
    case Criterion::kCommitFrequency:
      return "Criterion-3";
    case Criterion::kDeveloperCount:
      return "Criterion-4";
  }
  return "Criterion-?";
}

CurationVerdict Curate(const RepoMetadata& meta) {
  CurationVerdict verdict;
  verdict.division_undefined = meta.total_file_count == 0;
  for (Criterion criterion : kAllCriteria) {
    if (!Passes(meta, criterion)) verdict.failed.push_back(criterion);
  }
  verdict.pass = verdict.failed.empty();
  return verdict;
}

absl::StatusOr<MetadataFile> ReadMetadata(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  const std::vector<internal::CsvRow> rows = internal::ParseCsv(text);
  if (rows.empty()) {
    return absl::InvalidArgumentError("EMPTY_METADATA: no header row");
  }
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < rows[0].size(); ++i) {
    index[internal::ToLower(internal::Trim(rows[0][i]))] = i;
  }
  for (std::string_view column : kColumns) {
    if (!index.contains(std::string(column))) {
      return absl::InvalidArgumentError(
          absl::StrCat("MALFORMED_METADATA: header lacks column '",
                       std::string(column), "'"));
    }
  }
  MetadataFile file;
  for (size_t r = 1; r < rows.size(); ++r) {
    const internal::CsvRow& row = rows[r];
    auto cell = [&](std::string_view column) -> std::string_view {
      const size_t i = index.at(std::string(column));
      return i < row.size() ? std::string_view(row[i]) : std::string_view();
    };
    const std::string line = std::to_string(r + 1);
    if (row.size() != rows[0].size()) {
      file.warnings.push_back("row " + line + ": expected " +
                              std::to_string(rows[0].size()) + " fields");
      continue;
    }
    const auto total = ParseCount(cell("total_file_count"));
    const auto iac = ParseCount(cell("iac_script_count"));
    const auto commits = ParseRate(cell("commits_per_month"));
    const auto developers = ParseCount(cell("developer_count"));
    const auto clone = ParseBool(cell("is_clone"));
    const std::string_view name = internal::Trim(cell("name"));
    if (name.empty() || !total || !iac || !commits || !developers || !clone) {
      file.warnings.push_back("row " + line + ": unparsable field");
      continue;
    }
    if (*iac > *total) {
      file.warnings.push_back("row " + line +
                              ": iac_script_count exceeds total_file_count");
      continue;
    }
    file.rows.push_back(RepoMetadata{std::string(name), *total, *iac, *commits,
                                     *developers, *clone});
  }
  return file;
}

std::vector<FunnelStage> CurationFunnel(
    const std::vector<RepoMetadata>& rows) {
  std::vector<FunnelStage> stages;
  std::vector<const RepoMetadata*> remaining;
  for (const RepoMetadata& row : rows) remaining.push_back(&row);
  stages.push_back(FunnelStage{"Initial", remaining.size()});
  for (Criterion criterion : kAllCriteria) {
    std::vector<const RepoMetadata*> kept;
    for (const RepoMetadata* row : remaining) {
      if (Passes(*row, criterion)) kept.push_back(row);
    }
    remaining = std::move(kept);
    stages.push_back(
        FunnelStage{std::string(CriterionId(criterion)), remaining.size()});
  }
  return stages;
}

}  // namespace iaclint
