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


#include "iaclint/evaluation.h"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "src/csv.h"
#include "src/text_util.h"

namespace iaclint {

namespace {

std::optional<int> ParsePositive(std::string_view text) {
  text = internal::Trim(text);
  int value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() ||
      end != text.data() + text.size() || value <= 0) {
    return std::nullopt;
  }
  return value;
}

// Line 0 stands for "no line" at script granularity.
using Key = std::tuple<std::string, SmellId, int>;

void Tally(Confusion& cell, std::size_t detected, std::size_t expected) {
  const std::size_t hits = std::min(detected, expected);
  cell.true_positives += hits;
  cell.false_positives += detected - hits;
  cell.false_negatives += expected - hits;
}

}  // namespace

std::optional<double> Confusion::Precision() const {
  const std::size_t denominator = true_positives + false_positives;
  if (denominator == 0) return std::nullopt;
  return static_cast<double>(true_positives) /
         static_cast<double>(denominator);
}

std::optional<double> Confusion::Recall() const {
  const std::size_t denominator = true_positives + false_negatives;
  if (denominator == 0) return std::nullopt;
  return static_cast<double>(true_positives) /
         static_cast<double>(denominator);
}

absl::StatusOr<OracleFile> ReadOracle(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  if (in.bad()) return absl::DataLossError("IO_FAILURE: cannot read oracle");
  const std::vector<internal::CsvRow> rows = internal::ParseCsv(text);
  if (rows.empty()) {
    return absl::InvalidArgumentError("MALFORMED_ORACLE: missing header");
  }
  std::vector<std::string> header;
  for (const std::string& cell : rows[0]) {
    header.push_back(internal::ToLower(internal::Trim(cell)));
  }
  const bool with_line = header.size() == 4 && header[3] == "line";
  if (header.size() < 3 || header.size() > 4 || header[0] != "script" ||
      header[1] != "smell" || header[2] != "count" ||
      (header.size() == 4 && !with_line)) {
    return absl::InvalidArgumentError(
        "MALFORMED_ORACLE: header must be script,smell,count[,line]");
  }
  OracleFile file;
  for (size_t r = 1; r < rows.size(); ++r) {
    const internal::CsvRow& row = rows[r];
    const std::string where = "row " + std::to_string(r + 1) + ": ";
    if (row.size() < 3 || row.size() > header.size()) {
      file.warnings.push_back(where + "wrong field count");
      continue;
    }
    OracleEntry entry;
    entry.script = std::string(internal::Trim(row[0]));
    const std::optional<SmellId> smell = ParseSmellName(row[1]);
    if (!smell.has_value()) {
      file.warnings.push_back(where + "unknown smell '" + row[1] + "'");
      continue;
    }
    entry.smell = *smell;
    const std::optional<int> count = ParsePositive(row[2]);
    if (!count.has_value() || entry.script.empty()) {
      file.warnings.push_back(where + "bad script or count");
      continue;
    }
    entry.count = *count;
    if (with_line && row.size() == 4 && !internal::Trim(row[3]).empty()) {
      const std::optional<int> line = ParsePositive(row[3]);
      if (!line.has_value()) {
        file.warnings.push_back(where + "bad line");
        continue;
      }
      entry.line = line;
    }
    file.entries.push_back(std::move(entry));
  }
  return file;
}

EvalResult Evaluate(const std::vector<Occurrence>& detected,
                    const std::vector<OracleEntry>& oracle,
                    Granularity granularity,
                    const std::map<std::string, Dialect>& scripts) {
  EvalResult result;
  result.granularity = granularity;
  result.script_count = scripts.size();
  const bool by_line = granularity == Granularity::kLine;

  std::map<Key, std::size_t> expected;
  std::set<std::string> oracle_smelly;
  for (const OracleEntry& entry : oracle) {
    const auto script = scripts.find(entry.script);
    if (script == scripts.end()) {
      result.errors.push_back("UNKNOWN_SCRIPT: " + entry.script);
      continue;
    }
    if (!SmellAppliesTo(entry.smell, script->second)) {
      result.errors.push_back("INAPPLICABLE_SMELL: " + entry.script + " " +
                              std::string(SmellCode(entry.smell)));
      continue;
    }
    if (by_line && !entry.line.has_value()) {
      result.errors.push_back("MISSING_LINE: " + entry.script + " " +
                              std::string(SmellCode(entry.smell)));
      continue;
    }
    const int line = by_line ? *entry.line : 0;
    expected[Key{entry.script, entry.smell, line}] +=
        static_cast<std::size_t>(entry.count);
    oracle_smelly.insert(entry.script);
    result.observed[SmellIndex(entry.smell)] = true;
  }

  std::map<Key, std::size_t> found;
  std::set<std::string> detector_smelly;
  for (const Occurrence& occurrence : detected) {
    const int line = by_line ? occurrence.line : 0;
    ++found[Key{occurrence.script, occurrence.smell, line}];
    detector_smelly.insert(occurrence.script);
    result.observed[SmellIndex(occurrence.smell)] = true;
  }

  std::set<Key> keys;
  for (const auto& [key, n] : expected) keys.insert(key);
  for (const auto& [key, n] : found) keys.insert(key);
  for (const Key& key : keys) {
    const auto d = found.find(key);
    const auto e = expected.find(key);
    const std::size_t detected_count = d == found.end() ? 0 : d->second;
    const std::size_t expected_count = e == expected.end() ? 0 : e->second;
    Tally(result.per_smell[SmellIndex(std::get<1>(key))], detected_count,
          expected_count);
    Tally(result.aggregate, detected_count, expected_count);
  }

  double precision_sum = 0;
  double recall_sum = 0;
  int precision_n = 0;
  int recall_n = 0;
  for (std::size_t i = 0; i < kSmellCount; ++i) {
    if (!result.observed[i]) continue;
    if (auto p = result.per_smell[i].Precision()) {
      precision_sum += *p;
      ++precision_n;
    }
    if (auto r = result.per_smell[i].Recall()) {
      recall_sum += *r;
      ++recall_n;
    }
  }
  if (precision_n > 0) result.macro_precision = precision_sum / precision_n;
  if (recall_n > 0) result.macro_recall = recall_sum / recall_n;

  for (const auto& [script, dialect] : scripts) {
    const bool oracle_clean = !oracle_smelly.contains(script);
    const bool detector_clean = !detector_smelly.contains(script);
    if (oracle_clean && detector_clean) ++result.no_smell.true_positives;
    if (detector_clean && !oracle_clean) ++result.no_smell.false_positives;
    if (oracle_clean && !detector_clean) ++result.no_smell.false_negatives;
  }
  return result;
}

}  // namespace iaclint
