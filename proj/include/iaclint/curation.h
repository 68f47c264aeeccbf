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


// Repository selection criteria applied to pre-extracted metadata records.

#ifndef IACLINT_CURATION_H_
#define IACLINT_CURATION_H_

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace iaclint {

struct RepoMetadata {
  std::string name;
  std::uint64_t total_file_count = 0;
  std::uint64_t iac_script_count = 0;
  double commits_per_month = 0.0;
  std::uint64_t developer_count = 0;
  bool is_clone = false;
};

enum class Criterion {
  kIacRatio,         // at least 11% of files are IaC scripts
  kNotClone,         // not a clone of another repository
  kCommitFrequency,  // at least 2 commits per month
  kDeveloperCount,   // at least 10 developers
};

inline constexpr Criterion kAllCriteria[] = {
    Criterion::kIacRatio, Criterion::kNotClone, Criterion::kCommitFrequency,
    Criterion::kDeveloperCount};

// "Criterion-1" .. "Criterion-4".
std::string_view CriterionId(Criterion criterion);

struct CurationVerdict {
  bool pass = false;
  std::vector<Criterion> failed;
  // Set when the IaC ratio is undefined (no files); Criterion-1 then fails.
  bool division_undefined = false;
};

// The ratio test is exact: 100 * iac >= 11 * total.
CurationVerdict Curate(const RepoMetadata& meta);

struct MetadataFile {
  std::vector<RepoMetadata> rows;
  // One message per skipped row.
  std::vector<std::string> warnings;
};

// Reads a header row `name,total_file_count,iac_script_count,
// commits_per_month,developer_count,is_clone` (columns in any order) followed
// by one record per line. Rows that do not parse, or claim more IaC scripts
// than files, are skipped with a warning. Fails on empty input or a header
// missing a column.
absl::StatusOr<MetadataFile> ReadMetadata(std::istream& in);

struct FunnelStage {
  std::string label;
  std::size_t remaining = 0;
};

// Repositories left after applying the criteria in order, starting with the
// full set.
std::vector<FunnelStage> CurationFunnel(const std::vector<RepoMetadata>& rows);

}  // namespace iaclint

#endif  // IACLINT_CURATION_H_
