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

#include "iaclint/model.h"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/strings/ascii.h"
#include "src/text_util.h"

namespace iaclint {

namespace {

struct SmellInfo {
  std::string_view code;
  std::string_view display;
  bool ansible;
  bool chef;
  std::vector<std::string> cwes;
  std::string_view description;
};

const std::vector<SmellInfo>& SmellTable() {
  static const auto* table = new std::vector<SmellInfo>{
      {"ADMIN_BY_DEFAULT", "Admin by default", false, true, {"CWE-250"},
       "Default users are configured as administrative users, violating "
       "least privilege."},
      {"EMPTY_PASSWORD", "Empty password", true, false, {"CWE-258"},
       "A password-related key is assigned a zero-length string."},
      {"HARD_CODED_SECRET", "Hard-coded secret", true, true,
       {"CWE-798", "CWE-259"},
       "A user name, password or private key is written into the script."},
      {"MISSING_DEFAULT_IN_CASE", "Missing default in case", false, true,
       {"CWE-478"}, "A case statement has no else branch."},
      {"NO_INTEGRITY_CHECK", "No integrity check", true, true, {"CWE-353"},
       "Downloaded archives or packages are not verified with a checksum or "
       "signature."},
      {"SUSPICIOUS_COMMENT", "Suspicious comment", true, true, {"CWE-546"},
       "A comment mentions a defect, missing functionality or a weakness."},
      {"UNRESTRICTED_IP_ADDRESS", "Unrestricted IP address", true, true,
       {"CWE-284"}, "A service is bound to 0.0.0.0."},
      {"HTTP_WITHOUT_TLS", "Use of HTTP without SSL/TLS", true, true,
       {"CWE-319"}, "A URL uses plain HTTP."},
      {"WEAK_CRYPTO", "Use of weak cryptography algorithms", false, true,
       {"CWE-327", "CWE-326"}, "MD5 or SHA-1 is configured."},
  };
  return *table;
}

// Lowercase alphanumerics only, so "Hard-coded secret", "HARD_CODED_SECRET"
// and "hard coded secret" all collapse to "hardcodedsecret".
std::string NormalizeName(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (absl::ascii_isalnum(static_cast<unsigned char>(c))) {
      out.push_back(absl::ascii_tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

const std::vector<std::pair<std::string, SmellId>>& AliasTable() {
  static const auto* aliases = [] {
    auto* out = new std::vector<std::pair<std::string, SmellId>>;
    for (SmellId id : kAllSmells) {
      out->emplace_back(NormalizeName(SmellCode(id)), id);
      out->emplace_back(NormalizeName(SmellDisplayName(id)), id);
    }
    const std::pair<std::string_view, SmellId> extra[] = {
        {"Invalid IP Address Binding", SmellId::kUnrestrictedIpAddress},
        {"Unrestricted IP", SmellId::kUnrestrictedIpAddress},
        {"Use of HTTP without TLS", SmellId::kHttpWithoutTls},
        {"HTTP without SSL/TLS", SmellId::kHttpWithoutTls},
        {"Missing Default in Case Statement", SmellId::kMissingDefaultInCase},
        {"Switch statement without default", SmellId::kMissingDefaultInCase},
        {"Use of weak crypto. algo.", SmellId::kWeakCrypto},
        {"Use of weak cryptography algorithm", SmellId::kWeakCrypto},
        {"Weak cryptography", SmellId::kWeakCrypto},
    };
    for (const auto& [name, id] : extra) {
      out->emplace_back(NormalizeName(name), id);
    }
    return out;
  }();
  return *aliases;
}

}  // namespace

std::string_view DialectName(Dialect dialect) {
  return dialect == Dialect::kAnsible ? "ansible" : "chef";
}

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kComment:
      return "COMMENT";
    case TokenKind::kKey:
      return "KEY";
    case TokenKind::kVariable:
      return "VARIABLE";
    case TokenKind::kProperty:
      return "PROPERTY";
    case TokenKind::kAttribute:
      return "ATTRIBUTE";
    case TokenKind::kResource:
      return "RESOURCE";
    case TokenKind::kCaseStmt:
      return "CASE_STMT";
  }
  return "UNKNOWN";
}

std::string_view SmellCode(SmellId id) {
  return SmellTable()[SmellIndex(id)].code;
}

std::string_view SmellDisplayName(SmellId id) {
  return SmellTable()[SmellIndex(id)].display;
}

std::optional<SmellId> ParseSmellName(std::string_view text) {
  const std::string key = NormalizeName(text);
  if (key.empty()) return std::nullopt;
  for (const auto& [alias, id] : AliasTable()) {
    if (alias == key) return id;
  }
  return std::nullopt;
}

const SmellDefinition& DefinitionOf(SmellId id) {
  static const auto* definitions = [] {
    auto* out = new std::vector<SmellDefinition>;
    for (SmellId smell : kAllSmells) {
      const SmellInfo& info = SmellTable()[SmellIndex(smell)];
      out->push_back(SmellDefinition{smell, info.ansible, info.chef,
                                     info.cwes, std::string(info.description)});
    }
    return out;
  }();
  return (*definitions)[SmellIndex(id)];
}

std::vector<SmellDefinition> SmellCatalog(Dialect dialect) {
  std::vector<SmellDefinition> out;
  for (SmellId id : kAllSmells) {
    const SmellDefinition& def = DefinitionOf(id);
    if (def.AppliesTo(dialect)) out.push_back(def);
  }
  return out;
}

bool SmellAppliesTo(SmellId id, Dialect dialect) {
  return DefinitionOf(id).AppliesTo(dialect);
}

std::vector<std::string> CweFor(SmellId id) { return DefinitionOf(id).cwe_ids; }

std::string_view SecretSubtypeName(SecretSubtype subtype) {
  switch (subtype) {
    case SecretSubtype::kKey:
      return "KEY";
    case SecretSubtype::kUsername:
      return "USERNAME";
    case SecretSubtype::kPassword:
      return "PASSWORD";
  }
  return "UNKNOWN";
}

std::string MakeSnippet(std::string_view text) {
  text = internal::Trim(text);
  if (text.size() <= kMaxSnippetBytes) return std::string(text);
  size_t cut = kMaxSnippetBytes;
  // Back off continuation bytes (10xxxxxx) so the cut lands on a lead byte.
  while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) {
    --cut;
  }
  return std::string(text.substr(0, cut));
}

}  // namespace iaclint
