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

#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "test_support.h"

namespace iaclint {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::StartsWith;

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

ScanResult Corpus20() {
  auto scan = ScanTree(testing::FixturePath("corpus20"));
  EXPECT_TRUE(scan.ok());
  return *std::move(scan);
}

TEST(ReportColumnsTest, PerDialect) {
  EXPECT_EQ(ReportColumns(std::nullopt).size(), 9u);
  EXPECT_EQ(ReportColumns(Dialect::kAnsible).size(), 6u);
  EXPECT_EQ(ReportColumns(Dialect::kChef).size(), 8u);
}

TEST(WriteScanReportTest, EmptyScanIsHeaderOnly) {
  std::ostringstream out;
  ASSERT_TRUE(
      WriteScanReport(ScanResult{}, Dialect::kAnsible, ReportFormat::kCsv, out)
          .ok());
  EXPECT_EQ(out.str(),
            "script_path,EMPTY_PASSWORD,HARD_CODED_SECRET,NO_INTEGRITY_CHECK,"
            "SUSPICIOUS_COMMENT,UNRESTRICTED_IP_ADDRESS,HTTP_WITHOUT_TLS,"
            "total\n");
}

TEST(WriteScanReportTest, CsvRowsMatchCounts) {
  const ScanResult scan = Corpus20();
  std::ostringstream out;
  ASSERT_TRUE(
      WriteScanReport(scan, std::nullopt, ReportFormat::kCsv, out).ok());
  const auto lines = Lines(out.str());
  ASSERT_EQ(lines.size(), 21u);
  EXPECT_THAT(lines[0], StartsWith("script_path,ADMIN_BY_DEFAULT,"));
  EXPECT_EQ(lines[1], "cookbooks/demo/recipes/c01_web.rb,0,0,0,0,0,0,0,0,0,0");
  EXPECT_EQ(lines[3], "cookbooks/demo/recipes/c03_secret.rb,0,0,3,0,0,0,0,0,0,3");
  EXPECT_EQ(lines[20], "playbooks/a10_multi.yml,0,1,0,0,0,0,0,1,0,2");
}

TEST(WriteScanReportTest, QuotesAwkwardPaths) {
  ScanResult scan;
  ScriptReport r;
  r.path = "odd,\"name\".yml";
  scan.scripts.push_back(r);
  std::ostringstream out;
  ASSERT_TRUE(
      WriteScanReport(scan, Dialect::kAnsible, ReportFormat::kCsv, out).ok());
  EXPECT_EQ(Lines(out.str())[1], "\"odd,\"\"name\"\".yml\",0,0,0,0,0,0,0");
}

TEST(WriteScanReportTest, JsonRoundTrips) {
  const ScanResult scan = Corpus20();
  std::ostringstream out;
  ASSERT_TRUE(
      WriteScanReport(scan, std::nullopt, ReportFormat::kJson, out).ok());
  const auto doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc["scripts"].size(), 20u);
  EXPECT_EQ(doc["total"], 35);
  EXPECT_EQ(doc["total_loc"], 148);
  EXPECT_EQ(doc["totals"]["HARD_CODED_SECRET"], 8);
  const auto& c03 = doc["scripts"][2];
  EXPECT_EQ(c03["path"], "cookbooks/demo/recipes/c03_secret.rb");
  EXPECT_EQ(c03["status"], "OK");
  ASSERT_EQ(c03["occurrences"].size(), 3u);
  EXPECT_TRUE(c03["occurrences"][0].contains("secret_subtype"));
}

TEST(WriteScanReportTest, Deterministic) {
  const ScanResult scan = Corpus20();
  std::ostringstream a;
  std::ostringstream b;
  ASSERT_TRUE(WriteScanReport(scan, std::nullopt, ReportFormat::kJson, a).ok());
  ASSERT_TRUE(
      WriteScanReport(Corpus20(), std::nullopt, ReportFormat::kJson, b).ok());
  EXPECT_EQ(a.str(), b.str());
}

TEST(WriteScanReportTest, BadStream) {
  std::ostringstream out;
  out.setstate(std::ios::badbit);
  const absl::Status s =
      WriteScanReport(Corpus20(), std::nullopt, ReportFormat::kCsv, out);
  EXPECT_FALSE(s.ok());
  EXPECT_THAT(std::string(s.message()), HasSubstr("IO_FAILURE"));
}

TEST(WriteMetricsReportTest, Csv) {
  const auto metrics = ComputeMetrics(Corpus20());
  ASSERT_TRUE(metrics.ok());
  std::ostringstream out;
  ASSERT_TRUE(WriteMetricsReport(*metrics, ReportFormat::kCsv, out).ok());
  const auto lines = Lines(out.str());
  ASSERT_EQ(lines.size(), 11u);
  EXPECT_EQ(lines[0], "smell,occurrences,density_per_kloc,script_pct");
  EXPECT_EQ(lines[10].substr(0, 12), "COMBINED,35,");
  EXPECT_THAT(lines[10], ::testing::EndsWith(",80"));
}

TEST(WriteEvalReportTest, CsvWithUndefinedCells) {
  EvalResult r;
  r.observed[SmellIndex(SmellId::kWeakCrypto)] = true;
  r.per_smell[SmellIndex(SmellId::kWeakCrypto)].false_negatives = 2;
  r.aggregate.false_negatives = 2;
  r.macro_recall = 0.0;
  std::ostringstream out;
  ASSERT_TRUE(WriteEvalReport(r, ReportFormat::kCsv, out).ok());
  EXPECT_THAT(Lines(out.str()),
              ElementsAre("smell,true_positives,false_positives,"
                          "false_negatives,precision,recall",
                          "WEAK_CRYPTO,0,0,2,n/a,0", "NO_SMELL,0,0,0,n/a,n/a",
                          "AGGREGATE,0,0,2,n/a,0", "AVERAGE,,,,n/a,0"));
  std::ostringstream json;
  ASSERT_TRUE(WriteEvalReport(r, ReportFormat::kJson, json).ok());
  const auto doc = nlohmann::json::parse(json.str());
  EXPECT_TRUE(doc["rows"][0]["precision"].is_null());
  EXPECT_EQ(doc["average"]["recall"], 0.0);
}

TEST(FormatTest, Numbers) {
  EXPECT_EQ(FormatNumber(0.8), "0.8");
  EXPECT_EQ(FormatNumber(25.0), "25");
  EXPECT_EQ(std::stod(FormatNumber(1000.0 * 35 / 148)), 1000.0 * 35 / 148);
  EXPECT_EQ(FormatFixed(0.8), "0.80");
  EXPECT_EQ(FormatFixed(std::nullopt), "n/a");
  EXPECT_EQ(FormatFixed(2.0 / 3.0, 3), "0.667");
}

TEST(TextReportTest, EvalTableAndListing) {
  EvalResult r;
  r.observed[SmellIndex(SmellId::kHttpWithoutTls)] = true;
  r.per_smell[SmellIndex(SmellId::kHttpWithoutTls)].true_positives = 4;
  r.per_smell[SmellIndex(SmellId::kHttpWithoutTls)].false_positives = 1;
  const std::string table = EvalTable(r);
  EXPECT_THAT(table, HasSubstr("Smell Name"));
  EXPECT_THAT(table, HasSubstr("0.80"));

  std::istringstream in(testing::ReadFixture("curation/repos.csv"));
  const auto meta = ReadMetadata(in);
  ASSERT_TRUE(meta.ok());
  const std::string listing = CurationListing(meta->rows);
  EXPECT_THAT(listing, HasSubstr("Passed: 3 of 10"));
  EXPECT_THAT(listing, HasSubstr("DIVISION_UNDEFINED"));
}

TEST(TextReportTest, ScanSummaryMentionsTotals) {
  const ScanResult scan = Corpus20();
  const auto metrics = ComputeMetrics(scan);
  const std::string text = ScanSummary(scan, *metrics);
  EXPECT_THAT(text, HasSubstr("35"));
  EXPECT_THAT(text, HasSubstr("148"));
}

}  // namespace
}  // namespace iaclint
