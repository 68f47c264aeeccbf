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

#include "iaclint/ansible_parser.h"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "src/text_util.h"
#include "yaml-cpp/yaml.h"

namespace iaclint {

namespace {

bool IsBlank(char c) { return c == ' ' || c == '\t'; }

int Indentation(std::string_view line) {
  int indent = 0;
  while (indent < static_cast<int>(line.size()) && IsBlank(line[indent])) {
    ++indent;
  }
  return indent;
}

// Line scanner that finds YAML comments without building a document, so it
// also works on input the YAML parser rejects.
class CommentScanner {
 public:
  std::vector<Token> Scan(std::string_view source) {
    std::vector<Token> comments;
    const auto lines = internal::SplitLines(source);
    for (size_t i = 0; i < lines.size(); ++i) {
      ScanLine(lines[i], static_cast<int>(i) + 1, comments);
    }
    return comments;
  }

 private:
  void ScanLine(std::string_view line, int line_no,
                std::vector<Token>& comments) {
    const int indent = Indentation(line);
    if (block_threshold_.has_value()) {
      if (indent == static_cast<int>(line.size()) ||
          indent > *block_threshold_) {
        return;  // Block scalar content.
      }
      block_threshold_.reset();
    }

    bool can_start = quote_ == '\0';
    int token_start = indent;
    int key_col = -1;
    size_t i = quote_ == '\0' ? static_cast<size_t>(indent) : 0;
    while (i < line.size()) {
      const char c = line[i];
      if (quote_ != '\0') {
        if (quote_ == '"' && c == '\\') {
          i += 2;
          continue;
        }
        if (c == quote_) {
          if (quote_ == '\'' && i + 1 < line.size() && line[i + 1] == '\'') {
            i += 2;
            continue;
          }
          quote_ = '\0';
        }
        ++i;
        continue;
      }
      if (c == '#' && (i == 0 || IsBlank(line[i - 1]))) {
        std::string_view text =
            internal::Trim(line.substr(i + 1));
        if (!text.empty()) {
          Token token;
          token.kind = TokenKind::kComment;
          token.value = std::string(text);
          token.line = line_no;
          token.column = static_cast<int>(i) + 1;
          comments.push_back(std::move(token));
        }
        return;
      }
      if (IsBlank(c)) {
        ++i;
        continue;
      }
      const bool followed_by_space =
          i + 1 >= line.size() || IsBlank(line[i + 1]);
      if (can_start && (c == '"' || c == '\'')) {
        quote_ = c;
        can_start = false;
        ++i;
        continue;
      }
      if (can_start && (c == '|' || c == '>')) {
        size_t j = i + 1;
        while (j < line.size() &&
               (line[j] == '+' || line[j] == '-' ||
                absl::ascii_isdigit(static_cast<unsigned char>(line[j])))) {
          ++j;
        }
        if (j >= line.size() || IsBlank(line[j])) {
          block_threshold_ = key_col >= 0 ? key_col : token_start - 1;
          i = j;
          can_start = false;
          continue;
        }
      }
      if (c == ':' && followed_by_space) {
        key_col = token_start;
        can_start = true;
        ++i;
        continue;
      }
      if ((c == '-' || c == '?') && can_start && followed_by_space) {
        // A sequence entry: a block scalar here is owned by the dash.
        token_start = static_cast<int>(i);
        key_col = static_cast<int>(i);
        ++i;
        continue;
      }
      if (c == '[' || c == '{' || c == ',') {
        can_start = true;
        ++i;
        continue;
      }
      if (can_start) token_start = static_cast<int>(i);
      can_start = false;
      ++i;
    }
  }

  // Inside a quoted scalar that continues on the next line.
  char quote_ = '\0';
  // Lines indented deeper than this belong to an open block scalar.
  std::optional<int> block_threshold_;
};

bool IsVault(const YAML::Node& node) {
  const std::string& tag = node.Tag();
  if (tag == "!vault" || tag == "!vault-encrypted") return true;
  return node.IsScalar() &&
         internal::StartsWith(internal::TrimLeft(node.Scalar()),
                          "$ANSIBLE_VAULT;");
}

class KeyCollector {
 public:
  explicit KeyCollector(std::vector<Token>& out) : out_(out) {}

  void Document(const YAML::Node& root) {
    Visit(root, NewBlock());
  }

 private:
  int NewBlock() { return ++next_block_; }

  bool OnStack(const YAML::Node& node) const {
    for (const YAML::Node& ancestor : stack_) {
      if (ancestor.is(node)) return true;
    }
    return false;
  }

  void Visit(const YAML::Node& node, int block) {
    if (!node.IsMap() && !node.IsSequence()) return;
    // Recursive aliases would otherwise loop forever.
    if (OnStack(node)) return;
    stack_.push_back(node);
    if (node.IsMap()) {
      for (const auto& entry : node) {
        const YAML::Node& key = entry.first;
        const YAML::Node& value = entry.second;
        if (!key.IsScalar()) continue;
        const std::string& name = key.Scalar();
        if (value.IsScalar() || value.IsNull()) {
          Emit(key, value, block);
        } else {
          path_.push_back(name);
          Visit(value, block);
          path_.pop_back();
        }
      }
    } else {
      for (const auto& element : node) {
        Visit(element, element.IsMap() ? NewBlock() : block);
      }
    }
    stack_.pop_back();
  }

  void Emit(const YAML::Node& key, const YAML::Node& value, int block) {
    Token token;
    token.kind = TokenKind::kKey;
    token.name = key.Scalar();
    token.is_null = value.IsNull();
    token.value =
        IsVault(value) ? std::string(kVaultSentinel) : RenderScalar(value);
    token.line = key.Mark().line + 1;
    token.column = key.Mark().column + 1;
    token.key_path = path_;
    token.block = block;
    out_.push_back(std::move(token));
  }

  std::vector<Token>& out_;
  std::vector<std::string> path_;
  std::vector<YAML::Node> stack_;
  int next_block_ = 0;
};

}  // namespace

std::string RenderScalar(const YAML::Node& node) {
  if (!node.IsDefined() || node.IsNull()) return "";
  if (!node.IsScalar()) return "";
  const std::string& text = node.Scalar();
  const std::string& tag = node.Tag();
  const bool plain = tag == "?";
  if (plain || tag == "tag:yaml.org,2002:bool" || tag == "!!bool") {
    static constexpr std::string_view kTrue[] = {"yes", "Yes", "YES", "true",
                                                 "True", "TRUE", "on", "On",
                                                 "ON"};
    static constexpr std::string_view kFalse[] = {"no", "No", "NO", "false",
                                                  "False", "FALSE", "off",
                                                  "Off", "OFF"};
    for (std::string_view t : kTrue) {
      if (text == t) return "true";
    }
    for (std::string_view f : kFalse) {
      if (text == f) return "false";
    }
  }
  if (plain && (text == "~" || text == "null" || text == "Null" ||
                text == "NULL")) {
    return "";
  }
  return text;
}

TokenStream ParseAnsible(std::string_view source, std::string script) {
  TokenStream stream;
  stream.script = std::move(script);
  stream.dialect = Dialect::kAnsible;
  stream.loc = internal::CountLines(source);
  stream.tokens = CommentScanner().Scan(source);

  std::vector<Token> keys;
  try {
    const std::vector<YAML::Node> documents =
        YAML::LoadAll(std::string(source));
    KeyCollector collector(keys);
    for (const YAML::Node& document : documents) collector.Document(document);
  } catch (const YAML::Exception& e) {
    stream.status = absl::InvalidArgumentError(
        std::string("MALFORMED_SOURCE: ") + e.what());
    SortTokens(stream.tokens);
    return stream;
  }
  for (Token& key : keys) stream.tokens.push_back(std::move(key));
  SortTokens(stream.tokens);
  return stream;
}

}  // namespace iaclint
