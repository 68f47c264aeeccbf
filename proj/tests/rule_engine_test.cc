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


#include "iaclint/rule_engine.h"

#include <map>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "iaclint/ansible_parser.h"
#include "iaclint/chef_parser.h"
#include "test_support.h"

namespace iaclint {
namespace {

using ::testing::ElementsAre;
using ::testing::Pair;

std::vector<std::pair<std::string, int>> Summary(
    const std::vector<Occurrence>& occurrences) {
  std::vector<std::pair<std::string, int>> out;
  for (const Occurrence& o : occurrences) {
    out.emplace_back(std::string(SmellCode(o.smell)), o.line);
  }
  return out;
}

std::vector<Occurrence> DetectFixture(const std::string& relative) {
  const std::string source = testing::ReadFixture(relative);
  const TokenStream stream = relative.ends_with(".rb")
                                 ? ParseChef(source, relative)
                                 : ParseAnsible(source, relative);
  EXPECT_TRUE(stream.ok()) << stream.status;
  return Detect(stream, source);
}

TEST(RuleEngineTest, KeystonePlaybook) {
  const auto found = DetectFixture("worked/openstack_keystone.yml");
  EXPECT_THAT(Summary(found),
              ElementsAre(Pair("HTTP_WITHOUT_TLS", 6),
                          Pair("UNRESTRICTED_IP_ADDRESS", 7),
                          Pair("HARD_CODED_SECRET", 8),
                          Pair("EMPTY_PASSWORD", 9),
                          Pair("SUSPICIOUS_COMMENT", 11),
                          Pair("NO_INTEGRITY_CHECK", 14)));
  EXPECT_EQ(found[2].secret_subtype, SecretSubtype::kUsername);
  EXPECT_EQ(found[3].snippet, "db_password: ''");
  for (const Occurrence& o : found) {
    EXPECT_EQ(o.script, "worked/openstack_keystone.yml");
    if (o.smell != SmellId::kHardCodedSecret) {
      EXPECT_FALSE(o.secret_subtype.has_value());
    }
  }
}

TEST(RuleEngineTest, DashboardRecipe) {
  const auto found = DetectFixture("worked/dashboard_recipe.rb");
  EXPECT_THAT(Summary(found),
              ElementsAre(Pair("SUSPICIOUS_COMMENT", 5),
                          Pair("ADMIN_BY_DEFAULT", 7),
                          Pair("WEAK_CRYPTO", 8),
                          Pair("UNRESTRICTED_IP_ADDRESS", 10),
                          Pair("HTTP_WITHOUT_TLS", 11),
                          Pair("NO_INTEGRITY_CHECK", 14),
                          Pair("HARD_CODED_SECRET", 22),
                          Pair("MISSING_DEFAULT_IN_CASE", 25)));
  EXPECT_EQ(found[6].secret_subtype, SecretSubtype::kPassword);
}

TEST(RuleEngineTest, HttpTable) {
  const auto found = DetectFixture("worked/http_snippets.rb");
  EXPECT_THAT(Summary(found),
              ElementsAre(Pair("HTTP_WITHOUT_TLS", 1),
                          Pair("HTTP_WITHOUT_TLS", 2),
                          Pair("HTTP_WITHOUT_TLS", 5),
                          Pair("HTTP_WITHOUT_TLS", 10),
                          Pair("HTTP_WITHOUT_TLS", 13)));
}

TEST(RuleEngineTest, GpgCheckOff) {
  const auto found = DetectFixture("worked/yum_gpgcheck.yml");
  EXPECT_THAT(Summary(found), ElementsAre(Pair("NO_INTEGRITY_CHECK", 5)));
}

TEST(RuleEngineTest, GpgCheckOnSuppresses) {
  for (const char* setting : {"yes", "true", "1", "'sha256:abc'"}) {
    const std::string source =
        std::string("- yum_repository:\n    baseurl: http://x/a.rpm\n"
                    "    gpgcheck: ") +
        setting + "\n";
    const TokenStream s = ParseAnsible(source, "x.yml");
    const auto found = Detect(s, source);
    // The http scheme is still reported, the download is not.
    EXPECT_THAT(Summary(found), ElementsAre(Pair("HTTP_WITHOUT_TLS", 2)))
        << setting;
  }
}

TEST(RuleEngineTest, IntegrityIsScopedToTheTask) {
  const std::string source =
      "- get_url:\n"
      "    url: https://a/x.zip\n"
      "    checksum: sha256:1\n"
      "- get_url:\n"
      "    url: https://a/y.zip\n";
  const auto found = Detect(ParseAnsible(source, "x.yml"), source);
  EXPECT_THAT(Summary(found), ElementsAre(Pair("NO_INTEGRITY_CHECK", 5)));

  const std::string recipe =
      "remote_file 'a' do\n  source 'https://a/x.zip'\n  checksum 'ab'\nend\n"
      "remote_file 'b' do\n  source 'https://a/y.zip'\nend\n";
  EXPECT_THAT(Summary(Detect(ParseChef(recipe, "x.rb"), recipe)),
              ElementsAre(Pair("NO_INTEGRITY_CHECK", 6)));
}

TEST(RuleEngineTest, EmptyPasswordNeedsEmptyString) {
  const std::string source =
      "a_password:\nb_password: ''\nc_pwd: \"\"\nd_user: ''\n";
  const auto found = Detect(ParseAnsible(source, "x.yml"), source);
  EXPECT_THAT(Summary(found), ElementsAre(Pair("EMPTY_PASSWORD", 2),
                                          Pair("EMPTY_PASSWORD", 3)));
}

TEST(RuleEngineTest, VaultIsNotHardCoded) {
  const std::string source =
      "db_password: !vault |\n  $ANSIBLE_VAULT;1.1;AES256\n  31\n"
      "db_user: \"{{ vault_user }}\"\n";
  const auto found = Detect(ParseAnsible(source, "x.yml"), source);
  // A template expression is still a non-empty literal in the file.
  EXPECT_THAT(Summary(found), ElementsAre(Pair("HARD_CODED_SECRET", 4)));
}

TEST(RuleEngineTest, SecretSubtypes) {
  EXPECT_EQ(ClassifySecret("ssl_key"), SecretSubtype::kKey);
  EXPECT_EQ(ClassifySecret("priv_cert"), SecretSubtype::kKey);
  EXPECT_EQ(ClassifySecret("rsa_password"), SecretSubtype::kKey);
  EXPECT_EQ(ClassifySecret("admin_password"), SecretSubtype::kPassword);
  EXPECT_EQ(ClassifySecret("db_pwd"), SecretSubtype::kPassword);
  EXPECT_EQ(ClassifySecret("user"), SecretSubtype::kUsername);
  EXPECT_EQ(ClassifySecret("db_user"), SecretSubtype::kUsername);
}

TEST(RuleEngineTest, NegativeSettings) {
  for (const char* v : {"", "false", "no", "0", "off", "OFF", "False"}) {
    EXPECT_TRUE(IsNegativeSetting(v)) << v;
  }
  for (const char* v : {"true", "yes", "1", "sha256:1", "nope"}) {
    EXPECT_FALSE(IsNegativeSetting(v)) << v;
  }
}

TEST(RuleEngineTest, EmptyStream) {
  TokenStream s;
  EXPECT_TRUE(Detect(s).empty());
  s.dialect = Dialect::kChef;
  EXPECT_TRUE(Detect(s).empty());
}

TEST(RuleEngineTest, SnippetWithoutSource) {
  TokenStream s;
  s.script = "x.yml";
  Token t;
  t.kind = TokenKind::kKey;
  t.name = "bind";
  t.value = "0.0.0.0";
  t.line = 3;
  s.tokens.push_back(t);
  const auto found = Detect(s);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].line, 3);
  EXPECT_THAT(found[0].snippet, ::testing::HasSubstr("0.0.0.0"));
}

TEST(RuleEngineTest, DuplicatesCollapse) {
  TokenStream s;
  s.dialect = Dialect::kChef;
  Token t;
  t.kind = TokenKind::kVariable;
  t.name = "u";
  t.value = "http://a";
  t.line = 1;
  s.tokens = {t, t};
  const std::string source = "u = 'http://a'; u = 'http://a'\n";
  EXPECT_EQ(Detect(s, source).size(), 1u);
}

TEST(RuleEngineTest, AnsibleIgnoresChefOnlySmells) {
  // Ansible KEY tokens never yield the Chef-only categories even when their
  // names or values look like them.
  const std::string source =
      "admin_user: admin\ndigest: md5\ncase: x\nrole: admin\n";
  const auto found = Detect(ParseAnsible(source, "x.yml"), source);
  for (const Occurrence& o : found) {
    EXPECT_TRUE(SmellAppliesTo(o.smell, Dialect::kAnsible))
        << SmellCode(o.smell);
  }
}

TEST(RuleEngineTest, DialectClosureOnCorpus) {
  const auto root = testing::FixturePath("corpus20");
  for (const auto& entry :
       std::filesystem::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext != ".rb" && ext != ".yml") continue;
    const std::string source = testing::ReadFile(entry.path());
    const Dialect dialect = ext == ".rb" ? Dialect::kChef : Dialect::kAnsible;
    const TokenStream s = dialect == Dialect::kChef
                              ? ParseChef(source, entry.path().string())
                              : ParseAnsible(source, entry.path().string());
    for (const Occurrence& o : Detect(s, source)) {
      EXPECT_TRUE(SmellAppliesTo(o.smell, dialect)) << entry.path();
    }
  }
}

TEST(RuleEngineTest, Deterministic) {
  const std::string source =
      testing::ReadFixture("chef/tricky_recipe.rb");
  const TokenStream s = ParseChef(source, "t.rb");
  const auto first = Detect(s, source);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(Detect(s, source), first);
}

// Every occurrence must be backed by evidence visible on its source line.
// Heredoc values are excluded since they are attached to the opening line.
TEST(RuleEngineTest, LineEvidenceOracle) {
  const std::map<SmellId, std::regex> evidence = {
      {SmellId::kAdminByDefault, std::regex("admin", std::regex::icase)},
      {SmellId::kEmptyPassword,
       std::regex("(pass|pwd).*(''|\"\")", std::regex::icase)},
      {SmellId::kHardCodedSecret,
       std::regex("user|pass|pwd|priv|pvt", std::regex::icase)},
      {SmellId::kMissingDefaultInCase, std::regex("\\bcase\\b")},
      {SmellId::kNoIntegrityCheck,
       std::regex("https?://|gpgcheck|checksum", std::regex::icase)},
      {SmellId::kSuspiciousComment, std::regex("#")},
      {SmellId::kUnrestrictedIpAddress, std::regex("0\\.0\\.0\\.0")},
      {SmellId::kHttpWithoutTls, std::regex("http:", std::regex::icase)},
      {SmellId::kWeakCrypto, std::regex("md5|sha1", std::regex::icase)},
  };
  std::vector<std::string> files = {
      "worked/openstack_keystone.yml", "worked/dashboard_recipe.rb",
      "worked/http_snippets.rb", "worked/yum_gpgcheck.yml"};
  for (const auto& entry : std::filesystem::recursive_directory_iterator(
           testing::FixturePath("corpus20"))) {
    const std::string ext = entry.path().extension().string();
    if (ext == ".rb" || ext == ".yml") {
      files.push_back(std::filesystem::relative(entry.path(),
                                                testing::FixturePath(""))
                          .string());
    }
  }
  int checked = 0;
  for (const std::string& file : files) {
    const std::string source = testing::ReadFixture(file);
    std::vector<std::string> lines;
    std::istringstream in(source);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    for (const Occurrence& o : DetectFixture(file)) {
      ASSERT_GE(o.line, 1);
      ASSERT_LE(o.line, static_cast<int>(lines.size()));
      EXPECT_TRUE(std::regex_search(lines[o.line - 1], evidence.at(o.smell)))
          << file << ":" << o.line << " " << SmellCode(o.smell);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace iaclint
