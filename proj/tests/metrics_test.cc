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

#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace iaclint {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

Occurrence Make(SmellId smell, const std::string& script, int line = 1) {
  Occurrence o;
  o.smell = smell;
  o.script = script;
  o.line = line;
  return o;
}

TEST(SmellDensityTest, PerThousandLines) {
  SmellCounts counts{};
  counts[SmellIndex(SmellId::kHttpWithoutTls)] = 3;
  counts[SmellIndex(SmellId::kWeakCrypto)] = 1;
  const auto d = SmellDensity(counts, 2000);
  ASSERT_TRUE(d.ok());
  EXPECT_DOUBLE_EQ(d->per_smell[SmellIndex(SmellId::kHttpWithoutTls)], 1.5);
  EXPECT_DOUBLE_EQ(d->per_smell[SmellIndex(SmellId::kWeakCrypto)], 0.5);
  EXPECT_DOUBLE_EQ(d->per_smell[SmellIndex(SmellId::kAdminByDefault)], 0.0);
  EXPECT_DOUBLE_EQ(d->combined, 2.0);
}

TEST(SmellDensityTest, ZeroLoc) {
  const auto d = SmellDensity(SmellCounts{}, 0);
  ASSERT_FALSE(d.ok());
  EXPECT_THAT(std::string(d.status().message()), HasSubstr("ZERO_LOC"));
}

TEST(ScriptProportionTest, OneOfFour) {
  std::map<std::string, std::vector<Occurrence>> per_script = {
      {"a", {Make(SmellId::kHttpWithoutTls, "a"),
             Make(SmellId::kHttpWithoutTls, "a", 2)}},
      {"b", {}},
      {"c", {}},
      {"d", {}},
  };
  const auto p = ScriptProportion(per_script);
  ASSERT_TRUE(p.ok());
  EXPECT_DOUBLE_EQ(p->per_smell[SmellIndex(SmellId::kHttpWithoutTls)], 25.0);
  EXPECT_EQ(p->scripts_affected[SmellIndex(SmellId::kHttpWithoutTls)], 1u);
  EXPECT_DOUBLE_EQ(p->combined, 25.0);
  EXPECT_EQ(p->script_count, 4u);
}

TEST(ScriptProportionTest, CombinedCountsScriptsOnce) {
  std::map<std::string, std::vector<Occurrence>> per_script = {
      {"a", {Make(SmellId::kHttpWithoutTls, "a"),
             Make(SmellId::kWeakCrypto, "a")}},
      {"b", {Make(SmellId::kWeakCrypto, "b")}},
  };
  const auto p = ScriptProportion(per_script);
  ASSERT_TRUE(p.ok());
  EXPECT_DOUBLE_EQ(p->per_smell[SmellIndex(SmellId::kWeakCrypto)], 100.0);
  EXPECT_DOUBLE_EQ(p->per_smell[SmellIndex(SmellId::kHttpWithoutTls)], 50.0);
  EXPECT_DOUBLE_EQ(p->combined, 100.0);
  EXPECT_EQ(p->combined_affected, 2u);
}

TEST(ScriptProportionTest, ZeroScripts) {
  const auto p = ScriptProportion({});
  ASSERT_FALSE(p.ok());
  EXPECT_THAT(std::string(p.status().message()), HasSubstr("ZERO_SCRIPTS"));
}

// Expected values are computed from the hand-counted table, not from scans.
struct HandTotals {
  long long loc = 0;
  SmellCounts counts{};
  std::array<int, kSmellCount> scripts{};
  int affected = 0;
  int script_count = 0;
};

HandTotals ReadHandTotals() {
  HandTotals totals;
  std::istringstream in(testing::ReadFixture("corpus20/expected.csv"));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string x; std::getline(ss, x, ',');) f.push_back(x);
    ++totals.script_count;
    totals.loc += std::stoll(f[1]);
    bool any = false;
    for (size_t i = 0; i < kSmellCount; ++i) {
      const int n = std::stoi(f[2 + i]);
      totals.counts[i] += n;
      if (n > 0) {
        ++totals.scripts[i];
        any = true;
      }
    }
    if (any) ++totals.affected;
  }
  return totals;
}

TEST(ComputeMetricsTest, Corpus20) {
  const HandTotals hand = ReadHandTotals();
  const auto scan = ScanTree(testing::FixturePath("corpus20"));
  ASSERT_TRUE(scan.ok());
  const auto m = ComputeMetrics(*scan);
  ASSERT_TRUE(m.ok()) << m.status();
  EXPECT_EQ(m->total_loc, hand.loc);
  EXPECT_EQ(m->script_count, static_cast<size_t>(hand.script_count));
  size_t total = 0;
  for (size_t i = 0; i < kSmellCount; ++i) {
    SCOPED_TRACE(SmellCode(kAllSmells[i]));
    EXPECT_EQ(m->per_smell[i].occurrences, hand.counts[i]);
    EXPECT_NEAR(m->per_smell[i].density,
                1000.0 * hand.counts[i] / static_cast<double>(hand.loc), 1e-9);
    EXPECT_DOUBLE_EQ(m->per_smell[i].script_pct,
                     100.0 * hand.scripts[i] / hand.script_count);
    total += hand.counts[i];
  }
  EXPECT_EQ(m->combined.occurrences, total);
  EXPECT_NEAR(m->combined.density, 1000.0 * 35 / 148, 1e-9);
  EXPECT_DOUBLE_EQ(m->combined.script_pct, 80.0);
  EXPECT_EQ(hand.affected, 16);
}

TEST(ComputeMetricsTest, DoublingCorpusKeepsRates) {
  const auto dir = testing::MakeTempDir("double");
  fs::copy(testing::FixturePath("corpus20"), dir / "one",
           fs::copy_options::recursive);
  fs::copy(testing::FixturePath("corpus20"), dir / "two",
           fs::copy_options::recursive);
  const auto single = ComputeMetrics(*ScanTree(testing::FixturePath("corpus20")));
  const auto doubled = ComputeMetrics(*ScanTree(dir));
  ASSERT_TRUE(single.ok());
  ASSERT_TRUE(doubled.ok());
  EXPECT_EQ(doubled->script_count, 2 * single->script_count);
  EXPECT_EQ(doubled->total_loc, 2 * single->total_loc);
  for (size_t i = 0; i < kSmellCount; ++i) {
    EXPECT_EQ(doubled->per_smell[i].occurrences,
              2 * single->per_smell[i].occurrences);
    EXPECT_NEAR(doubled->per_smell[i].density, single->per_smell[i].density,
                1e-9);
    EXPECT_DOUBLE_EQ(doubled->per_smell[i].script_pct,
                     single->per_smell[i].script_pct);
  }
  fs::remove_all(dir);
}

TEST(ComputeMetricsTest, EmptyScanFails) {
  EXPECT_FALSE(ComputeMetrics(ScanResult{}).ok());
}

TEST(ComputeMetricsTest, UnreadableScriptsExcluded) {
  ScanResult scan;
  ScriptReport ok;
  ok.path = "a.yml";
  ok.loc = 10;
  ok.occurrences = {Make(SmellId::kHttpWithoutTls, "a.yml")};
  ScriptReport bad;
  bad.path = "b.yml";
  bad.readable = false;
  scan.scripts = {ok, bad};
  scan.total_loc = 10;
  const auto m = ComputeMetrics(scan);
  ASSERT_TRUE(m.ok());
  EXPECT_EQ(m->script_count, 1u);
  EXPECT_DOUBLE_EQ(m->combined.script_pct, 100.0);
  EXPECT_DOUBLE_EQ(m->combined.density, 100.0);
}

}  // namespace
}  // namespace iaclint
