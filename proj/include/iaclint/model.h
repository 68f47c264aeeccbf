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

// Shared vocabulary of the linter: dialects, tokens, the security smell
// taxonomy with its CWE mapping, and detected occurrences.

#ifndef IACLINT_MODEL_H_
#define IACLINT_MODEL_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iaclint {

enum class Dialect { kAnsible, kChef };

std::string_view DialectName(Dialect dialect);

enum class TokenKind {
  kComment,
  kKey,
  kVariable,
  kProperty,
  kAttribute,
  kResource,
  kCaseStmt,
};

std::string_view TokenKindName(TokenKind kind);

// One lexical unit handed from a parser to the rule engine.
struct Token {
  TokenKind kind = TokenKind::kComment;
  // Empty for comments. For Chef attributes, the bracket path joined by '.'.
  std::string name;
  std::string value;
  // 1-based physical line of the first character.
  int line = 1;
  // 1-based column; only used for ordering.
  int column = 1;
  // Ancestor mapping keys of an Ansible KEY token, outermost first.
  std::vector<std::string> key_path;
  // CASE_STMT only.
  bool else_branch_present = false;
  // Chef only: the token was written through a `default` attribute root.
  bool is_default_attribute = false;
  // Ansible only: the mapping value was YAML null rather than a string.
  bool is_null = false;
  // Identifies the enclosing task (Ansible) or resource block (Chef). Tokens
  // outside any block share block 0.
  int block = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Value stored in place of an encrypted (vault) scalar. No pattern function
// matches it.
inline constexpr std::string_view kVaultSentinel = "<!vault>";

enum class SmellId {
  kAdminByDefault,
  kEmptyPassword,
  kHardCodedSecret,
  kMissingDefaultInCase,
  kNoIntegrityCheck,
  kSuspiciousComment,
  kUnrestrictedIpAddress,
  kHttpWithoutTls,
  kWeakCrypto,
};

inline constexpr std::size_t kSmellCount = 9;

inline constexpr std::array<SmellId, kSmellCount> kAllSmells = {
    SmellId::kAdminByDefault,        SmellId::kEmptyPassword,
    SmellId::kHardCodedSecret,       SmellId::kMissingDefaultInCase,
    SmellId::kNoIntegrityCheck,      SmellId::kSuspiciousComment,
    SmellId::kUnrestrictedIpAddress, SmellId::kHttpWithoutTls,
    SmellId::kWeakCrypto,
};

constexpr std::size_t SmellIndex(SmellId id) {
  return static_cast<std::size_t>(id);
}

// Per-smell counters indexed by SmellIndex().
using SmellCounts = std::array<std::size_t, kSmellCount>;

// Canonical identifier, e.g. "HARD_CODED_SECRET".
std::string_view SmellCode(SmellId id);
// Human-readable name, e.g. "Hard-coded secret".
std::string_view SmellDisplayName(SmellId id);

// Accepts canonical identifiers as well as prose names and historical
// aliases ("Invalid IP Address Binding", "Use of HTTP without TLS",
// "Switch statement without default", ...). Case and punctuation are ignored.
std::optional<SmellId> ParseSmellName(std::string_view text);

struct SmellDefinition {
  SmellId id;
  bool ansible = false;
  bool chef = false;
  std::vector<std::string> cwe_ids;
  std::string description;

  bool AppliesTo(Dialect dialect) const {
    return dialect == Dialect::kAnsible ? ansible : chef;
  }
};

// Definitions applicable to `dialect`, in SmellId order.
std::vector<SmellDefinition> SmellCatalog(Dialect dialect);

const SmellDefinition& DefinitionOf(SmellId id);

bool SmellAppliesTo(SmellId id, Dialect dialect);

std::vector<std::string> CweFor(SmellId id);

enum class SecretSubtype { kKey, kUsername, kPassword };

std::string_view SecretSubtypeName(SecretSubtype subtype);

inline constexpr std::size_t kMaxSnippetBytes = 200;

struct Occurrence {
  SmellId smell;
  std::string script;
  int line = 1;
  std::string snippet;
  // Set iff smell == kHardCodedSecret.
  std::optional<SecretSubtype> secret_subtype;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Trims surrounding whitespace and cuts `text` to at most kMaxSnippetBytes
// without splitting a UTF-8 sequence.
std::string MakeSnippet(std::string_view text);

}  // namespace iaclint

#endif  // IACLINT_MODEL_H_
