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


#include "iaclint/metrics.h"

#include <map>
#include <set>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace iaclint {

absl::StatusOr<Densities> SmellDensity(const SmellCounts& occurrences,
                                       long long total_loc) {
  if (total_loc <= 0) {
    return absl::InvalidArgumentError("ZERO_LOC: no lines of code");
  }
  const double kloc = static_cast<double>(total_loc) / 1000.0;
  Densities densities;
  std::size_t total = 0;
  for (std::size_t i = 0; i < kSmellCount; ++i) {
    densities.per_smell[i] = static_cast<double>(occurrences[i]) / kloc;
    total += occurrences[i];
  }
  densities.combined = static_cast<double>(total) / kloc;
  return densities;
}

absl::StatusOr<Proportions> ScriptProportion(
    const std::map<std::string, std::vector<Occurrence>>& per_script) {
  if (per_script.empty()) {
    return absl::InvalidArgumentError("ZERO_SCRIPTS: no scripts");
  }
  Proportions proportions;
  proportions.script_count = per_script.size();
  for (const auto& [script, occurrences] : per_script) {
    std::set<SmellId> present;
    for (const Occurrence& occurrence : occurrences) {
      present.insert(occurrence.smell);
    }
    for (SmellId smell : present) {
      ++proportions.scripts_affected[SmellIndex(smell)];
    }
    if (!present.empty()) ++proportions.combined_affected;
  }
  const double count = static_cast<double>(proportions.script_count);
  for (std::size_t i = 0; i < kSmellCount; ++i) {
    proportions.per_smell[i] =
        100.0 * static_cast<double>(proportions.scripts_affected[i]) / count;
  }
  proportions.combined =
      100.0 * static_cast<double>(proportions.combined_affected) / count;
  return proportions;
}

absl::StatusOr<CorpusMetrics> ComputeMetrics(const ScanResult& scan) {
  std::map<std::string, std::vector<Occurrence>> per_script;
  SmellCounts counts{};
  for (const ScriptReport& script : scan.scripts) {
    if (!script.readable) continue;
    per_script[script.path] = script.occurrences;
    for (const Occurrence& occurrence : script.occurrences) {
      ++counts[SmellIndex(occurrence.smell)];
    }
  }
  absl::StatusOr<Proportions> proportions = ScriptProportion(per_script);
  if (!proportions.ok()) return proportions.status();
  absl::StatusOr<Densities> densities = SmellDensity(counts, scan.total_loc);
  if (!densities.ok()) return densities.status();

  CorpusMetrics metrics;
  metrics.total_loc = scan.total_loc;
  metrics.script_count = proportions->script_count;
  std::size_t total = 0;
  for (std::size_t i = 0; i < kSmellCount; ++i) {
    metrics.per_smell[i] = SmellMetric{counts[i], densities->per_smell[i],
                                       proportions->per_smell[i]};
    total += counts[i];
  }
  metrics.combined =
      SmellMetric{total, densities->combined, proportions->combined};
  return metrics;
}

}  // namespace iaclint
