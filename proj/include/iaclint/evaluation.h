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


// Precision and recall of detections against a hand-annotated oracle.

#ifndef IACLINT_EVALUATION_H_
#define IACLINT_EVALUATION_H_

#include <array>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "iaclint/model.h"

namespace iaclint {

enum class Granularity {
  // (script, smell) pairs; true positives are min(detected, expected).
  kScript,
  // (script, smell, line) triples.
  kLine,
};

struct OracleEntry {
  std::string script;
  SmellId smell = SmellId::kHardCodedSecret;
  int count = 1;
  std::optional<int> line;
};

struct OracleFile {
  std::vector<OracleEntry> entries;
  std::vector<std::string> warnings;
};

// Header `script,smell,count[,line]`. Smell names may be canonical ids or
// prose names. Rows with an unknown smell or a non-positive count are
// skipped with a warning; a missing or wrong header is an error.
absl::StatusOr<OracleFile> ReadOracle(std::istream& in);

struct Confusion {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;

  // Empty when the denominator is zero.
  std::optional<double> Precision() const;
  std::optional<double> Recall() const;

  friend bool operator==(const Confusion&, const Confusion&) = default;
};

struct EvalResult {
  Granularity granularity = Granularity::kScript;
  std::array<Confusion, kSmellCount> per_smell{};
  // Smells that occur in the detections or the accepted oracle entries.
  std::array<bool, kSmellCount> observed{};
  // Pooled over all smells.
  Confusion aggregate;
  // Unweighted mean over observed smells with a defined value.
  std::optional<double> macro_precision;
  std::optional<double> macro_recall;
  // Scripts as instances: clean in both is a true positive, clean only in
  // the detections a false positive, clean only in the oracle a false
  // negative.
  Confusion no_smell;
  std::size_t script_count = 0;
  // UNKNOWN_SCRIPT, INAPPLICABLE_SMELL and MISSING_LINE notes for oracle
  // entries that were excluded.
  std::vector<std::string> errors;
};

// `scripts` is the scanned set with the dialect of each script.
EvalResult Evaluate(const std::vector<Occurrence>& detected,
                    const std::vector<OracleEntry>& oracle,
                    Granularity granularity,
                    const std::map<std::string, Dialect>& scripts);

}  // namespace iaclint

#endif  // IACLINT_EVALUATION_H_
