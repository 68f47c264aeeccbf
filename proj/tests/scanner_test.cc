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


#include "iaclint/scanner.h"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
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

TEST(ClassifyScriptTest, Extensions) {
  EXPECT_EQ(ClassifyScript("site.yml", ""), Dialect::kAnsible);
  EXPECT_EQ(ClassifyScript("a/b/c.YAML", ""), Dialect::kAnsible);
  EXPECT_EQ(ClassifyScript("cookbooks/x/recipes/default.rb", ""),
            Dialect::kChef);
  EXPECT_EQ(ClassifyScript("x/attributes/default.rb", ""), Dialect::kChef);
  EXPECT_EQ(ClassifyScript("README.md", ""), std::nullopt);
  EXPECT_EQ(ClassifyScript("deploy.sh", "package 'x' do\n"), std::nullopt);
  EXPECT_EQ(ClassifyScript("templates/x.json", ""), std::nullopt);
}

TEST(ClassifyScriptTest, RubyNeedsChefShape) {
  EXPECT_EQ(ClassifyScript("lib/helper.rb", "def x\nend\n"), std::nullopt);
  EXPECT_EQ(ClassifyScript("spec/x_spec.rb", "describe 'x' do\nend\n"),
            Dialect::kChef);
  EXPECT_EQ(ClassifyScript("x.rb", "  package('nginx') do\n"), Dialect::kChef);
  EXPECT_EQ(ClassifyScript("x.rb", "package 'nginx'\n"), std::nullopt);
}

TEST(ClassifyScriptTest, StrictAnsible) {
  EXPECT_EQ(ClassifyScript("ci.yml", "on: push\njobs:\n", true), std::nullopt);
  EXPECT_EQ(ClassifyScript("ci.yml", "on: push\njobs:\n", false),
            Dialect::kAnsible);
  EXPECT_EQ(ClassifyScript("site.yml", "---\n- hosts: all\n", true),
            Dialect::kAnsible);
  EXPECT_EQ(ClassifyScript("roles/r/tasks/main.yml", "x: 1\n", true),
            Dialect::kAnsible);
  EXPECT_EQ(ClassifyScript("group_vars/all.yml", "x: 1\n", true),
            Dialect::kAnsible);
  EXPECT_EQ(ClassifyScript("x.yml", "- name: install\n", true),
            Dialect::kAnsible);
}

// Independent line counter.
int GetlineCount(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

std::map<std::string, std::vector<std::string>> ReadExpected() {
  std::map<std::string, std::vector<std::string>> rows;
  std::istringstream in(testing::ReadFixture("corpus20/expected.csv"));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    rows[fields[0]] = {fields.begin() + 1, fields.end()};
  }
  return rows;
}

TEST(ScanTreeTest, Corpus20MatchesHandCounts) {
  const auto result = ScanTree(testing::FixturePath("corpus20"));
  ASSERT_TRUE(result.ok()) << result.status();
  const auto expected = ReadExpected();
  ASSERT_EQ(result->scripts.size(), expected.size());
  long long loc = 0;
  for (const ScriptReport& script : result->scripts) {
    SCOPED_TRACE(script.path);
    ASSERT_TRUE(expected.count(script.path));
    const auto& row = expected.at(script.path);
    EXPECT_TRUE(script.status.ok()) << script.status;
    EXPECT_EQ(script.loc, std::stoi(row[0]));
    EXPECT_EQ(script.loc,
              GetlineCount(testing::ReadFile(
                  testing::FixturePath("corpus20/" + script.path))));
    SmellCounts counts{};
    for (const Occurrence& o : script.occurrences) {
      ++counts[SmellIndex(o.smell)];
      EXPECT_EQ(o.script, script.path);
    }
    for (size_t i = 0; i < kSmellCount; ++i) {
      EXPECT_EQ(counts[i], std::stoul(row[1 + i])) << SmellCode(kAllSmells[i]);
    }
    loc += script.loc;
  }
  EXPECT_EQ(result->total_loc, loc);
  EXPECT_EQ(result->total_loc, 148);
  EXPECT_EQ(result->TotalOccurrences(), 35u);
  EXPECT_TRUE(std::is_sorted(
      result->scripts.begin(), result->scripts.end(),
      [](const auto& a, const auto& b) { return a.path < b.path; }));
}

TEST(ScanTreeTest, DialectFilter) {
  ScanOptions options;
  options.dialect = Dialect::kChef;
  const auto result = ScanTree(testing::FixturePath("corpus20"), options);
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result->scripts.size(), 10u);
  for (const auto& s : result->scripts) EXPECT_EQ(s.dialect, Dialect::kChef);
}

TEST(ScanTreeTest, MissingRoot) {
  const auto result = ScanTree("/nonexistent/iaclint/root");
  ASSERT_FALSE(result.ok());
  EXPECT_EQ(result.status().code(), absl::StatusCode::kNotFound);
  EXPECT_THAT(std::string(result.status().message()),
              HasSubstr("ROOT_NOT_FOUND"));
}

TEST(ScanTreeTest, RootMayBeAFile) {
  const auto result =
      ScanTree(testing::FixturePath("worked/openstack_keystone.yml"));
  ASSERT_TRUE(result.ok());
  ASSERT_EQ(result->scripts.size(), 1u);
  EXPECT_EQ(result->scripts[0].path, "openstack_keystone.yml");
  EXPECT_EQ(result->scripts[0].occurrences.size(), 6u);
}

TEST(ScanTreeTest, EmptyDirectory) {
  const auto dir = testing::MakeTempDir("empty");
  const auto result = ScanTree(dir);
  ASSERT_TRUE(result.ok());
  EXPECT_TRUE(result->scripts.empty());
  EXPECT_EQ(result->total_loc, 0);
  fs::remove_all(dir);
}

TEST(ScanTreeTest, SkipsHiddenDirsAndSymlinks) {
  const auto dir = testing::MakeTempDir("hidden");
  testing::WriteFile(dir / "site.yml", "bind: 0.0.0.0\n");
  testing::WriteFile(dir / ".git/hooks/x.yml", "bind: 0.0.0.0\n");
  fs::create_directory_symlink(dir, dir / "loop");
  fs::create_symlink(dir / "site.yml", dir / "alias.yml");
  const auto result = ScanTree(dir);
  ASSERT_TRUE(result.ok());
  ASSERT_EQ(result->scripts.size(), 1u);
  EXPECT_EQ(result->scripts[0].path, "site.yml");
  fs::remove_all(dir);
}

TEST(ScanTreeTest, MalformedScriptStillCountsComments) {
  const auto dir = testing::MakeTempDir("malformed");
  testing::WriteFile(dir / "bad.yml", "# TODO: later\nkey: [oops\n");
  testing::WriteFile(dir / "good.yml", "bind: 0.0.0.0\n");
  const auto result = ScanTree(dir);
  ASSERT_TRUE(result.ok());
  ASSERT_EQ(result->scripts.size(), 2u);
  const ScriptReport& bad = result->scripts[0];
  EXPECT_EQ(bad.path, "bad.yml");
  EXPECT_FALSE(bad.status.ok());
  EXPECT_TRUE(bad.readable);
  ASSERT_EQ(bad.occurrences.size(), 1u);
  EXPECT_EQ(bad.occurrences[0].smell, SmellId::kSuspiciousComment);
  EXPECT_EQ(result->total_loc, 3);
  fs::remove_all(dir);
}

TEST(ScanTreeTest, UnreadableScript) {
  if (::geteuid() == 0) GTEST_SKIP() << "permission bits ignored for root";
  const auto dir = testing::MakeTempDir("unreadable");
  testing::WriteFile(dir / "a.yml", "bind: 0.0.0.0\n");
  testing::WriteFile(dir / "b.yml", "bind: 0.0.0.0\n");
  fs::permissions(dir / "a.yml", fs::perms::none);
  const auto result = ScanTree(dir);
  ASSERT_TRUE(result.ok());
  ASSERT_EQ(result->scripts.size(), 2u);
  EXPECT_FALSE(result->scripts[0].readable);
  EXPECT_EQ(result->total_loc, 1);
  fs::permissions(dir / "a.yml", fs::perms::owner_all);
  fs::remove_all(dir);
}

TEST(ScanTreeTest, ParallelMatchesSerial) {
  const auto dir = testing::MakeTempDir("parallel");
  testing::GenerateCorpus(dir, 120, 42);
  ScanOptions serial;
  serial.jobs = 1;
  ScanOptions parallel;
  parallel.jobs = 8;
  const auto a = ScanTree(dir, serial);
  const auto b = ScanTree(dir, parallel);
  ASSERT_TRUE(a.ok());
  ASSERT_TRUE(b.ok());
  ASSERT_EQ(a->scripts.size(), 120u);
  ASSERT_EQ(a->scripts.size(), b->scripts.size());
  for (size_t i = 0; i < a->scripts.size(); ++i) {
    EXPECT_EQ(a->scripts[i].path, b->scripts[i].path);
    EXPECT_EQ(a->scripts[i].occurrences, b->scripts[i].occurrences);
    EXPECT_EQ(a->scripts[i].loc, b->scripts[i].loc);
  }
  EXPECT_EQ(a->totals, b->totals);
  EXPECT_EQ(a->total_loc, b->total_loc);
  fs::remove_all(dir);
}

TEST(ScanTreeTest, GeneratedScriptsAllParse) {
  const auto dir = testing::MakeTempDir("generated");
  testing::GenerateCorpus(dir, 60, 3);
  const auto result = ScanTree(dir);
  ASSERT_TRUE(result.ok());
  ASSERT_EQ(result->scripts.size(), 60u);
  for (const auto& s : result->scripts) {
    EXPECT_TRUE(s.status.ok()) << s.path << ": " << s.status;
  }
  fs::remove_all(dir);
}

TEST(ScanSourceTest, InMemory) {
  const ScriptReport r =
      ScanSource("x.rb", Dialect::kChef, "digest = 'md5'\nbind = '0.0.0.0'\n");
  EXPECT_TRUE(r.status.ok());
  EXPECT_EQ(r.loc, 2);
  EXPECT_EQ(r.token_count, 2u);
  // WEAK_CRYPTO only fires for attributes.
  ASSERT_EQ(r.occurrences.size(), 1u);
  EXPECT_EQ(r.occurrences[0].smell, SmellId::kUnrestrictedIpAddress);
}

}  // namespace
}  // namespace iaclint
