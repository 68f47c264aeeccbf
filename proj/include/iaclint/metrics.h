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


// Corpus metrics: smell density (occurrences per 1000 lines) and the share
// of scripts with at least one occurrence.

#ifndef IACLINT_METRICS_H_
#define IACLINT_METRICS_H_

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "iaclint/model.h"
#include "iaclint/scanner.h"

namespace iaclint {

struct Densities {
  std::array<double, kSmellCount> per_smell{};
  double combined = 0.0;
};

// occurrences / (total_loc / 1000). Fails with ZERO_LOC when total_loc is 0.
absl::StatusOr<Densities> SmellDensity(const SmellCounts& occurrences,
                                       long long total_loc);

struct Proportions {
  std::array<double, kSmellCount> per_smell{};
  std::array<std::size_t, kSmellCount> scripts_affected{};
  double combined = 0.0;
  std::size_t combined_affected = 0;
  std::size_t script_count = 0;
};

// Percentage of scripts with at least one occurrence. Every scanned script
// must be a key, clean ones with an empty list. Fails with ZERO_SCRIPTS on an
// empty map.
absl::StatusOr<Proportions> ScriptProportion(
    const std::map<std::string, std::vector<Occurrence>>& per_script);

struct SmellMetric {
  std::size_t occurrences = 0;
  double density = 0.0;
  double script_pct = 0.0;
};

struct CorpusMetrics {
  std::array<SmellMetric, kSmellCount> per_smell{};
  SmellMetric combined;
  long long total_loc = 0;
  std::size_t script_count = 0;
};

// Metrics over the readable scripts of a scan.
absl::StatusOr<CorpusMetrics> ComputeMetrics(const ScanResult& scan);

}  // namespace iaclint

#endif  // IACLINT_METRICS_H_
