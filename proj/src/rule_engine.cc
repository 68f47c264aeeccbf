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

#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "iaclint/patterns.h"
#include "src/text_util.h"

namespace iaclint {

namespace {

bool IsOneOf(TokenKind kind, std::initializer_list<TokenKind> kinds) {
  for (TokenKind k : kinds) {
    if (kind == k) return true;
  }
  return false;
}

bool IsVaulted(const Token& token) { return token.value == kVaultSentinel; }

bool NamesSecret(std::string_view name) {
  return Match(PatternFn::kIsUser, name) ||
         Match(PatternFn::kIsPassword, name) ||
         Match(PatternFn::kIsPvtKey, name);
}

// Blocks that contain a positive integrity-check setting.
std::set<int> VerifiedBlocks(const std::vector<Token>& tokens) {
  std::set<int> blocks;
  for (const Token& token : tokens) {
    if (token.kind == TokenKind::kComment) continue;
    if (Match(PatternFn::kIsIntegrityCheck, token.name) &&
        !IsNegativeSetting(token.value)) {
      blocks.insert(token.block);
    }
  }
  return blocks;
}

std::vector<SmellId> AnsibleSmells(const Token& token,
                                   const std::set<int>& verified) {
  std::vector<SmellId> smells;
  if (token.kind == TokenKind::kComment) {
    if (Match(PatternFn::kHasWrongWord, token.value) ||
        Match(PatternFn::kHasBugInfo, token.value)) {
      smells.push_back(SmellId::kSuspiciousComment);
    }
    return smells;
  }
  if (token.kind != TokenKind::kKey) return smells;
  const std::string& name = token.name;
  const std::string& value = token.value;
  // A null value is "no password", not an empty one.
  if (value.empty() && !token.is_null &&
      Match(PatternFn::kIsPassword, name)) {
    smells.push_back(SmellId::kEmptyPassword);
  }
  if (!value.empty() && !IsVaulted(token) && NamesSecret(name)) {
    smells.push_back(SmellId::kHardCodedSecret);
  }
  if (Match(PatternFn::kIsDownload, value) && !verified.contains(token.block)) {
    smells.push_back(SmellId::kNoIntegrityCheck);
  }
  if (Match(PatternFn::kIsInvalidBind, value)) {
    smells.push_back(SmellId::kUnrestrictedIpAddress);
  }
  if (Match(PatternFn::kIsHttp, value)) {
    smells.push_back(SmellId::kHttpWithoutTls);
  }
  return smells;
}

std::vector<SmellId> ChefSmells(const Token& token,
                                const std::set<int>& verified) {
  std::vector<SmellId> smells;
  const TokenKind kind = token.kind;
  const std::string& name = token.name;
  const std::string& value = token.value;
  if (kind == TokenKind::kComment) {
    if (Match(PatternFn::kHasWrongWord, value) ||
        Match(PatternFn::kHasBugInfo, value)) {
      smells.push_back(SmellId::kSuspiciousComment);
    }
    return smells;
  }
  const bool property_or_attribute =
      IsOneOf(kind, {TokenKind::kProperty, TokenKind::kAttribute});
  const bool property_or_variable =
      IsOneOf(kind, {TokenKind::kProperty, TokenKind::kVariable});
  if (token.is_default_attribute && property_or_attribute &&
      (Match(PatternFn::kIsAdmin, name) || Match(PatternFn::kIsAdmin, value)) &&
      (Match(PatternFn::kIsUser, name) || Match(PatternFn::kIsRole, name))) {
    smells.push_back(SmellId::kAdminByDefault);
  }
  if (property_or_variable && !value.empty() && NamesSecret(name)) {
    smells.push_back(SmellId::kHardCodedSecret);
  }
  if (kind == TokenKind::kCaseStmt && !token.else_branch_present) {
    smells.push_back(SmellId::kMissingDefaultInCase);
  }
  if (property_or_attribute && Match(PatternFn::kIsDownload, value) &&
      !verified.contains(token.block)) {
    smells.push_back(SmellId::kNoIntegrityCheck);
  }
  if (property_or_variable && Match(PatternFn::kIsInvalidBind, value)) {
    smells.push_back(SmellId::kUnrestrictedIpAddress);
  }
  if (property_or_variable && Match(PatternFn::kIsHttp, value)) {
    smells.push_back(SmellId::kHttpWithoutTls);
  }
  if (kind == TokenKind::kAttribute &&
      Match(PatternFn::kUsesWeakAlgo, value)) {
    smells.push_back(SmellId::kWeakCrypto);
  }
  return smells;
}

std::string TokenText(const Token& token) {
  switch (token.kind) {
    case TokenKind::kComment:
      return absl::StrCat("# ", token.value);
    case TokenKind::kCaseStmt:
      return absl::StrCat("case ", token.value);
    default:
      return absl::StrCat(token.name, ": ", token.value);
  }
}

}  // namespace

bool IsNegativeSetting(std::string_view value) {
  const std::string lowered =
      internal::ToLower(internal::Trim(value));
  return lowered.empty() || lowered == "false" || lowered == "no" ||
         lowered == "0" || lowered == "off";
}

SecretSubtype ClassifySecret(std::string_view name) {
  if (Match(PatternFn::kIsPvtKey, name)) return SecretSubtype::kKey;
  const std::string lowered = internal::ToLower(name);
  for (std::string_view marker : {"key", "rsa", "cert", "ssl"}) {
    if (internal::Contains(lowered, marker)) return SecretSubtype::kKey;
  }
  if (Match(PatternFn::kIsPassword, name)) return SecretSubtype::kPassword;
  return SecretSubtype::kUsername;
}

std::vector<Occurrence> Detect(const TokenStream& stream,
                               std::string_view source) {
  const std::vector<std::string_view> lines = internal::SplitLines(source);
  const std::set<int> verified = VerifiedBlocks(stream.tokens);
  std::vector<Occurrence> occurrences;
  std::set<std::tuple<SmellId, int, std::string>> seen;
  for (const Token& token : stream.tokens) {
    const std::vector<SmellId> smells =
        stream.dialect == Dialect::kAnsible ? AnsibleSmells(token, verified)
                                            : ChefSmells(token, verified);
    if (smells.empty()) continue;
    std::string_view line = internal::LineAt(lines, token.line);
    const std::string snippet =
        MakeSnippet(line.empty() ? std::string_view(TokenText(token)) : line);
    for (SmellId smell : smells) {
      if (!seen.emplace(smell, token.line, snippet).second) continue;
      Occurrence occurrence;
      occurrence.smell = smell;
      occurrence.script = stream.script;
      occurrence.line = token.line;
      occurrence.snippet = snippet;
      if (smell == SmellId::kHardCodedSecret) {
        occurrence.secret_subtype = ClassifySecret(token.name);
      }
      occurrences.push_back(std::move(occurrence));
    }
  }
  return occurrences;
}

}  // namespace iaclint
