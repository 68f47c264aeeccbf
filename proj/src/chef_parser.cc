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

#include "iaclint/chef_parser.h"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "src/text_util.h"

namespace iaclint {

namespace {

enum class LexKind {
  kIdent,
  kLabel,  // `key:` in a hash or keyword argument
  kString,
  kSymbol,
  kNumber,
  kRegex,
  kWordArray,
  kOp,
  kNewline,
};

struct Lexeme {
  LexKind kind;
  // Identifier or operator text; for strings the literal value after escape
  // processing and interpolation stripping; for symbols the bare name.
  std::string text;
  int line = 1;
  int column = 1;
  bool space_before = false;
};

constexpr std::string_view kKeywords[] = {
    "alias",  "and",    "begin",  "BEGIN", "break",  "case",   "class",
    "def",    "defined?", "do",   "else",  "elsif",  "END",    "end",
    "ensure", "false",  "for",    "if",    "in",     "module", "next",
    "nil",    "not",    "or",     "redo",  "rescue", "retry",  "return",
    "self",   "super",  "then",   "true",  "undef",  "unless", "until",
    "when",   "while",  "yield",
};

bool IsKeyword(std::string_view text) {
  return std::find(std::begin(kKeywords), std::end(kKeywords), text) !=
         std::end(kKeywords);
}

bool IsIdentStart(char c) {
  const auto u = static_cast<unsigned char>(c);
  return absl::ascii_isalpha(u) || c == '_' || u >= 0x80;
}

bool IsIdentChar(char c) {
  return IsIdentStart(c) || absl::ascii_isdigit(static_cast<unsigned char>(c));
}

bool IsKeywordLexeme(const Lexeme& lx, std::string_view word) {
  return lx.kind == LexKind::kIdent && lx.text == word;
}

bool IsOp(const Lexeme& lx, std::string_view op) {
  return lx.kind == LexKind::kOp && lx.text == op;
}

constexpr std::string_view kOperators[] = {
    "**=", "<=>", "===", "...", "<<=", ">>=", "&&=", "||=", "==", "=~",
    "!=",  "!~",  ">=",  "<=",  "&&",  "||",  "<<",  ">>",  "+=", "-=",
    "*=",  "/=",  "%=",  "|=",  "&=",  "^=",  "**",  "=>",  "->", "::",
    "..",  "&.",
};

char ClosingDelimiter(char open) {
  switch (open) {
    case '(':
      return ')';
    case '[':
      return ']';
    case '{':
      return '}';
    case '<':
      return '>';
    default:
      return open;
  }
}

struct PendingHeredoc {
  size_t lexeme;
  std::string terminator;
  bool squiggly;
  bool indented_terminator;
  bool interpolate;
};

// Surface lexer for Ruby as used in Chef cookbooks.
class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  absl::Status Run() {
    while (pos_ < src_.size()) {
      if (col_ == 1) {
        const std::string_view rest = src_.substr(pos_);
        if (internal::StartsWith(rest, "=begin") &&
            (rest.size() == 6 || absl::ascii_isspace(rest[6]))) {
          if (absl::Status s = BlockComment(); !s.ok()) return s;
          continue;
        }
        if (internal::StartsWith(rest, "__END__") &&
            (rest.size() == 7 || rest[7] == '\n' || rest[7] == '\r')) {
          break;
        }
      }
      const char c = Peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        space_ = true;
        Advance();
        continue;
      }
      if (c == '\\' && (Peek(1) == '\n' ||
                        (Peek(1) == '\r' && Peek(2) == '\n'))) {
        Advance(Peek(1) == '\r' ? 3 : 2);
        space_ = true;
        continue;
      }
      if (c == '\n') {
        Push(LexKind::kNewline, "\n");
        Advance();
        space_ = false;
        if (!pending_.empty()) {
          if (absl::Status s = HeredocBodies(); !s.ok()) return s;
        }
        continue;
      }
      if (c == '#') {
        LineComment();
        continue;
      }
      absl::Status status = absl::OkStatus();
      if (IsIdentStart(c)) {
        Identifier();
      } else if ((c == '@' || c == '$') &&
                 (IsIdentChar(Peek(1)) || (c == '@' && Peek(1) == '@'))) {
        Identifier();
      } else if (absl::ascii_isdigit(static_cast<unsigned char>(c))) {
        Number();
      } else if (c == '"' || c == '\'' || c == '`') {
        status = QuotedString(c);
      } else if (c == ':' && Peek(1) != ':' &&
                 (Peek(1) == '"' || Peek(1) == '\'')) {
        status = QuotedSymbol();
      } else if (c == ':' && IsIdentStart(Peek(1))) {
        SymbolLiteral();
      } else if (c == '%' && ValuePosition() && IsPercentLiteral()) {
        status = PercentLiteral();
      } else if (c == '/' && ValuePosition()) {
        status = RegexLiteral('/', true);
      } else if (c == '<' && Peek(1) == '<' && HeredocStart()) {
        // Lexeme pushed by HeredocStart.
      } else {
        Operator();
      }
      if (!status.ok()) return status;
      space_ = false;
    }
    if (!pending_.empty()) {
      return Malformed(lexemes_[pending_.front().lexeme].line,
                       "unterminated heredoc");
    }
    return absl::OkStatus();
  }

  std::vector<Lexeme>& lexemes() { return lexemes_; }
  std::vector<Token>& comments() { return comments_; }

 private:
  char Peek(size_t k = 0) const {
    return pos_ + k < src_.size() ? src_[pos_ + k] : '\0';
  }

  void Advance(size_t n = 1) {
    for (size_t i = 0; i < n && pos_ < src_.size(); ++i, ++pos_) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  static absl::Status Malformed(int line, std::string_view what) {
    return absl::InvalidArgumentError(
        absl::StrCat("MALFORMED_SOURCE: ", std::string(what), " at line ", line));
  }

  void Push(LexKind kind, std::string text) {
    lexemes_.push_back(Lexeme{kind, std::move(text), start_line_, start_col_,
                              space_});
  }

  void Mark() {
    start_line_ = line_;
    start_col_ = col_;
  }

  void AddComment(std::string_view text, int line, int column) {
    text = internal::Trim(text);
    if (text.empty()) return;
    Token token;
    token.kind = TokenKind::kComment;
    token.value = std::string(text);
    token.line = line;
    token.column = column;
    comments_.push_back(std::move(token));
  }

  // Whether a '/', '%' or '<<' at the cursor starts a literal rather than
  // acting as a binary operator.
  bool ValuePosition() const {
    if (lexemes_.empty()) return true;
    const Lexeme& prev = lexemes_.back();
    switch (prev.kind) {
      case LexKind::kNewline:
      case LexKind::kLabel:
        return true;
      case LexKind::kOp:
        return prev.text != ")" && prev.text != "]" && prev.text != "}";
      case LexKind::kIdent:
        if (IsKeyword(prev.text) && prev.text != "self" &&
            prev.text != "end" && prev.text != "true" &&
            prev.text != "false" && prev.text != "nil") {
          return true;
        }
        // `source %w(a b)` or `match /x/`: a command call argument.
        return space_ && Peek(1) != ' ' && Peek(1) != '=' && Peek(1) != '\t';
      default:
        return false;
    }
  }

  void LineComment() {
    const int line = line_;
    const int column = col_;
    const size_t start = pos_ + 1;
    size_t end = src_.find('\n', pos_);
    if (end == std::string_view::npos) end = src_.size();
    AddComment(src_.substr(start, end - start), line, column);
    Advance(end - pos_);
  }

  absl::Status BlockComment() {
    const int begin_line = line_;
    size_t eol = src_.find('\n', pos_);
    if (eol == std::string_view::npos) {
      return Malformed(begin_line, "unterminated =begin comment");
    }
    Advance(eol + 1 - pos_);
    while (pos_ < src_.size()) {
      size_t end = src_.find('\n', pos_);
      if (end == std::string_view::npos) end = src_.size();
      std::string_view text = src_.substr(pos_, end - pos_);
      if (internal::StartsWith(text, "=end")) {
        Advance(end - pos_);
        return absl::OkStatus();
      }
      AddComment(text, line_, 1);
      Advance(std::min(end + 1, src_.size()) - pos_);
    }
    return Malformed(begin_line, "unterminated =begin comment");
  }

  void Identifier() {
    Mark();
    const size_t start = pos_;
    while (Peek() == '@' || Peek() == '$') Advance();
    while (IsIdentChar(Peek())) Advance();
    if ((Peek() == '?' || Peek() == '!') && Peek(1) != '=') Advance();
    std::string text(src_.substr(start, pos_ - start));
    if (Peek() == ':' && Peek(1) != ':' &&
        (lexemes_.empty() || !IsOp(lexemes_.back(), "?"))) {
      Advance();
      Push(LexKind::kLabel, std::move(text));
      return;
    }
    Push(LexKind::kIdent, std::move(text));
  }

  void Number() {
    Mark();
    const size_t start = pos_;
    while (IsIdentChar(Peek()) ||
           (Peek() == '.' &&
            absl::ascii_isdigit(static_cast<unsigned char>(Peek(1))))) {
      Advance();
    }
    Push(LexKind::kNumber, std::string(src_.substr(start, pos_ - start)));
  }

  void SymbolLiteral() {
    Mark();
    Advance();  // ':'
    const size_t start = pos_;
    while (IsIdentChar(Peek())) Advance();
    if (Peek() == '?' || Peek() == '!' ||
        (Peek() == '=' && Peek(1) != '>' && Peek(1) != '=')) {
      Advance();
    }
    Push(LexKind::kSymbol, std::string(src_.substr(start, pos_ - start)));
  }

  // Reads a delimited body starting after the opening delimiter. Nested
  // bracket pairs are balanced; `#{...}` holes are kept verbatim when
  // `interpolate` is set.
  absl::Status DelimitedBody(char open, bool interpolate, bool escapes,
                             std::string& body) {
    const int line = start_line_;
    const char close = ClosingDelimiter(open);
    int nesting = 0;
    while (pos_ < src_.size()) {
      const char c = Peek();
      if (c == '\\' && escapes) {
        const char next = Peek(1);
        switch (next) {
          case 'n':
            body.push_back(interpolate ? '\n' : '\\');
            if (!interpolate) body.push_back('n');
            break;
          case 't':
            body.push_back(interpolate ? '\t' : '\\');
            if (!interpolate) body.push_back('t');
            break;
          default:
            if (next == close || next == open || next == '\\' ||
                interpolate) {
              body.push_back(next);
            } else {
              body.push_back('\\');
              body.push_back(next);
            }
        }
        Advance(2);
        continue;
      }
      if (interpolate && c == '#' && Peek(1) == '{') {
        if (absl::Status s = InterpolationHole(body); !s.ok()) return s;
        continue;
      }
      if (c == close && nesting == 0) {
        Advance();
        return absl::OkStatus();
      }
      if (open != close) {
        if (c == open) ++nesting;
        if (c == close) --nesting;
      }
      body.push_back(c);
      Advance();
    }
    return Malformed(line, "unterminated literal");
  }

  // Copies `#{ ... }` verbatim, skipping over nested braces and strings.
  absl::Status InterpolationHole(std::string& body) {
    const int line = line_;
    int depth = 0;
    char quote = '\0';
    while (pos_ < src_.size()) {
      const char c = Peek();
      body.push_back(c);
      Advance();
      if (quote != '\0') {
        if (c == '\\' && pos_ < src_.size()) {
          body.push_back(Peek());
          Advance();
        } else if (c == quote) {
          quote = '\0';
        }
        continue;
      }
      if (c == '"' || c == '\'') {
        quote = c;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}') {
        if (--depth == 0) return absl::OkStatus();
      }
    }
    return Malformed(line, "unterminated interpolation");
  }

  absl::Status QuotedString(char quote) {
    Mark();
    Advance();
    std::string body;
    const bool interpolate = quote != '\'';
    if (absl::Status s = DelimitedBody(quote, interpolate, true, body);
        !s.ok()) {
      return s;
    }
    std::string value = interpolate ? StripInterpolation(body) : body;
    // "key": value
    if (Peek() == ':' && Peek(1) != ':' && !lexemes_.empty() &&
        (IsOp(lexemes_.back(), "{") || IsOp(lexemes_.back(), ",") ||
         IsOp(lexemes_.back(), "("))) {
      Advance();
      Push(LexKind::kLabel, std::move(value));
      return absl::OkStatus();
    }
    Push(LexKind::kString, std::move(value));
    return absl::OkStatus();
  }

  absl::Status QuotedSymbol() {
    Mark();
    Advance();  // ':'
    const char quote = Peek();
    Advance();
    std::string body;
    if (absl::Status s = DelimitedBody(quote, quote == '"', true, body);
        !s.ok()) {
      return s;
    }
    Push(LexKind::kSymbol, quote == '"' ? StripInterpolation(body) : body);
    return absl::OkStatus();
  }

  bool IsPercentLiteral() const {
    const char kind = Peek(1);
    if (std::string_view("wWiIqQrsx").find(kind) != std::string_view::npos) {
      const char open = Peek(2);
      return open != '\0' && !IsIdentChar(open) && !absl::ascii_isspace(open);
    }
    return kind == '(' || kind == '[' || kind == '{' || kind == '<' ||
           kind == '|' || kind == '!' || kind == '/';
  }

  absl::Status PercentLiteral() {
    Mark();
    char kind = Peek(1);
    if (std::string_view("wWiIqQrsx").find(kind) != std::string_view::npos) {
      Advance(2);
    } else {
      kind = 'Q';
      Advance(1);
    }
    const char open = Peek();
    Advance();
    std::string body;
    switch (kind) {
      case 'w':
      case 'W':
      case 'i':
      case 'I':
        if (absl::Status s = DelimitedBody(open, false, true, body); !s.ok()) {
          return s;
        }
        Push(LexKind::kWordArray, std::move(body));
        return absl::OkStatus();
      case 'r':
        if (absl::Status s = DelimitedBody(open, false, false, body);
            !s.ok()) {
          return s;
        }
        while (absl::ascii_isalpha(static_cast<unsigned char>(Peek()))) {
          Advance();
        }
        Push(LexKind::kRegex, std::move(body));
        return absl::OkStatus();
      case 's':
        if (absl::Status s = DelimitedBody(open, false, true, body); !s.ok()) {
          return s;
        }
        Push(LexKind::kSymbol, std::move(body));
        return absl::OkStatus();
      case 'q':
        if (absl::Status s = DelimitedBody(open, false, true, body); !s.ok()) {
          return s;
        }
        Push(LexKind::kString, std::move(body));
        return absl::OkStatus();
      default:
        if (absl::Status s = DelimitedBody(open, true, true, body); !s.ok()) {
          return s;
        }
        Push(LexKind::kString, StripInterpolation(body));
        return absl::OkStatus();
    }
  }

  absl::Status RegexLiteral(char open, bool mark) {
    if (mark) Mark();
    Advance();
    std::string body;
    bool in_class = false;
    while (pos_ < src_.size()) {
      const char c = Peek();
      if (c == '\\') {
        body.push_back(c);
        body.push_back(Peek(1));
        Advance(2);
        continue;
      }
      if (c == '\n' && open == '/') break;
      if (c == '[') in_class = true;
      if (c == ']') in_class = false;
      if (c == open && !in_class) {
        Advance();
        while (absl::ascii_isalpha(static_cast<unsigned char>(Peek()))) {
          Advance();
        }
        Push(LexKind::kRegex, std::move(body));
        return absl::OkStatus();
      }
      body.push_back(c);
      Advance();
    }
    return Malformed(start_line_, "unterminated regular expression");
  }

  // Recognizes `<<~ID`, `<<-ID`, `<<ID` and their quoted forms. The body is
  // filled in when the end of the current line is reached.
  bool HeredocStart() {
    size_t k = 2;
    bool squiggly = false;
    bool dash = false;
    if (Peek(k) == '~') {
      squiggly = true;
      ++k;
    } else if (Peek(k) == '-') {
      dash = true;
      ++k;
    }
    char quote = '\0';
    if (Peek(k) == '\'' || Peek(k) == '"' || Peek(k) == '`') {
      quote = Peek(k);
      ++k;
    }
    if (!IsIdentStart(Peek(k))) return false;
    if (!squiggly && !dash && quote == '\0' &&
        !absl::ascii_isupper(static_cast<unsigned char>(Peek(k)))) {
      return false;
    }
    const bool value_position =
        lexemes_.empty() || lexemes_.back().kind != LexKind::kIdent
            ? ValuePosition()
            : (space_ || IsKeyword(lexemes_.back().text));
    if (!value_position) return false;
    size_t end = k;
    while (IsIdentChar(Peek(end))) ++end;
    std::string terminator(src_.substr(pos_ + k, end - k));
    if (quote != '\0') {
      if (Peek(end) != quote) return false;
      ++end;
    }
    Mark();
    Advance(end);
    pending_.push_back(PendingHeredoc{lexemes_.size(), std::move(terminator),
                                      squiggly, squiggly || dash,
                                      quote != '\''});
    Push(LexKind::kString, "");
    return true;
  }

  absl::Status HeredocBodies() {
    for (PendingHeredoc& heredoc : pending_) {
      std::vector<std::string_view> body_lines;
      bool closed = false;
      while (pos_ < src_.size()) {
        size_t end = src_.find('\n', pos_);
        if (end == std::string_view::npos) end = src_.size();
        std::string_view text = src_.substr(pos_, end - pos_);
        if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
        Advance(std::min(end + 1, src_.size()) - pos_);
        std::string_view candidate =
            heredoc.indented_terminator ? internal::TrimLeft(text)
                                        : text;
        if (candidate == heredoc.terminator) {
          closed = true;
          break;
        }
        body_lines.push_back(text);
      }
      if (!closed) {
        return Malformed(lexemes_[heredoc.lexeme].line, "unterminated heredoc");
      }
      if (heredoc.squiggly) {
        size_t common = std::string_view::npos;
        for (std::string_view text : body_lines) {
          const size_t indent = text.find_first_not_of(" \t");
          if (indent == std::string_view::npos) continue;
          common = std::min(common, indent);
        }
        if (common != std::string_view::npos) {
          for (std::string_view& text : body_lines) {
            text.remove_prefix(std::min(common, text.size()));
          }
        }
      }
      std::string body = internal::Join(body_lines, "\n");
      lexemes_[heredoc.lexeme].text =
          heredoc.interpolate ? StripInterpolation(body) : std::move(body);
    }
    pending_.clear();
    return absl::OkStatus();
  }

  void Operator() {
    Mark();
    for (std::string_view op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        Advance(op.size());
        Push(LexKind::kOp, std::string(op));
        return;
      }
    }
    const char c = Peek();
    Advance();
    Push(LexKind::kOp, std::string(1, c));
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int start_line_ = 1;
  int start_col_ = 1;
  bool space_ = false;
  std::vector<Lexeme> lexemes_;
  std::vector<Token> comments_;
  std::vector<PendingHeredoc> pending_;
};

enum class BlockKind { kResource, kDo, kCase, kConditional, kDefinition };

struct Block {
  BlockKind kind;
  int line;
  int column;
  int id = 0;
  bool has_else = false;
  std::string subject;
};

Block Open(BlockKind kind, const Lexeme& at) {
  Block block{kind, at.line, at.column, 0, false, {}};
  return block;
}

struct Statement {
  size_t begin;
  size_t end;
};

constexpr std::string_view kPrecedenceLevels[] = {
    "default",        "override",        "normal",        "set",
    "force_default",  "force_override",  "default_unless", "override_unless",
    "normal_unless",  "set_unless",      "automatic",
};

bool IsPrecedenceLevel(std::string_view text) {
  return std::find(std::begin(kPrecedenceLevels), std::end(kPrecedenceLevels),
                   text) != std::end(kPrecedenceLevels);
}

bool IsDefaultRoot(std::string_view root) {
  return root == "default" || root == "default_unless" ||
         root == "node.default" || root == "node.default_unless";
}

bool IsLiteral(const Lexeme& lx) {
  switch (lx.kind) {
    case LexKind::kString:
    case LexKind::kNumber:
    case LexKind::kSymbol:
      return true;
    case LexKind::kIdent:
      return lx.text == "true" || lx.text == "false" || lx.text == "nil";
    default:
      return false;
  }
}

std::string LiteralValue(const Lexeme& lx) {
  if (lx.kind == LexKind::kIdent && lx.text == "nil") return "";
  return lx.text;
}

bool IsModifierKeyword(const Lexeme& lx) {
  return lx.kind == LexKind::kIdent &&
         (lx.text == "if" || lx.text == "unless" || lx.text == "while" ||
          lx.text == "until" || lx.text == "rescue");
}

bool ContinuesOnNextLine(const Lexeme& lx) {
  if (lx.kind == LexKind::kLabel) return true;
  if (lx.kind == LexKind::kIdent) {
    return lx.text == "and" || lx.text == "or" || lx.text == "not";
  }
  if (lx.kind != LexKind::kOp) return false;
  static constexpr std::string_view kContinuations[] = {
      ",",  "=",  "=>", "&&", "||", "+",  "*",  ".",   "&.", "||=",
      "&&=", "+=", "-=", "<<", "==", "!=", "?",  ":",   "::", "=~",
  };
  return std::find(std::begin(kContinuations), std::end(kContinuations),
                   lx.text) != std::end(kContinuations);
}

class RecipeParser {
 public:
  RecipeParser(std::string_view source, std::vector<Lexeme>& lexemes)
      : lines_(internal::SplitLines(source)), lx_(lexemes) {}

  absl::Status Run(std::vector<Token>& out) {
    out_ = &out;
    for (const Statement& statement : SplitStatements()) {
      Recognize(statement);
      if (absl::Status s = Structure(statement); !s.ok()) return s;
    }
    if (!stack_.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("MALFORMED_SOURCE: block opened at line ",
                       stack_.back().line, " is never closed"));
    }
    return absl::OkStatus();
  }

 private:
  bool AfterMemberAccess(size_t i) const {
    return i > 0 && (IsOp(lx_[i - 1], ".") || IsOp(lx_[i - 1], "&.") ||
                     IsOp(lx_[i - 1], "::"));
  }

  bool IsStructural(size_t i, std::string_view word) const {
    return IsKeywordLexeme(lx_[i], word) && !AfterMemberAccess(i);
  }

  std::vector<Statement> SplitStatements() const {
    std::vector<Statement> statements;
    size_t begin = 0;
    int depth = 0;
    auto cut = [&](size_t end, size_t next) {
      if (end > begin) statements.push_back(Statement{begin, end});
      begin = next;
    };
    for (size_t i = 0; i < lx_.size(); ++i) {
      const Lexeme& lx = lx_[i];
      if (lx.kind == LexKind::kOp) {
        if (lx.text == "(" || lx.text == "[" || lx.text == "{") ++depth;
        if (lx.text == ")" || lx.text == "]" || lx.text == "}") {
          depth = std::max(0, depth - 1);
        }
      }
      if (depth > 0) continue;
      if (lx.kind == LexKind::kNewline || IsOp(lx, ";")) {
        if (i == begin) {
          begin = i + 1;
          continue;
        }
        size_t next = i + 1;
        while (next < lx_.size() && lx_[next].kind == LexKind::kNewline) {
          ++next;
        }
        const bool chained = next < lx_.size() && (IsOp(lx_[next], ".") ||
                                                   IsOp(lx_[next], "&."));
        if (lx.kind == LexKind::kNewline &&
            (ContinuesOnNextLine(lx_[i - 1]) || chained)) {
          continue;
        }
        cut(i, i + 1);
        continue;
      }
      if (IsStructural(i, "do")) {
        size_t end = i + 1;
        if (end < lx_.size() && IsOp(lx_[end], "||")) {
          ++end;
        } else if (end < lx_.size() && IsOp(lx_[end], "|")) {
          ++end;
          while (end < lx_.size() && !IsOp(lx_[end], "|") &&
                 lx_[end].kind != LexKind::kNewline) {
            ++end;
          }
          if (end < lx_.size() && IsOp(lx_[end], "|")) ++end;
        }
        cut(end, end);
        i = end - 1;
        continue;
      }
      if (IsStructural(i, "then") || IsStructural(i, "else") ||
          IsStructural(i, "begin")) {
        cut(i + 1, i + 1);
        continue;
      }
      if (IsStructural(i, "end")) {
        cut(i, i);
        const bool trailing = i + 1 < lx_.size() &&
                              (IsOp(lx_[i + 1], ".") ||
                               IsOp(lx_[i + 1], "&.") ||
                               IsModifierKeyword(lx_[i + 1]));
        if (!trailing) cut(i + 1, i + 1);
      }
    }
    cut(lx_.size(), lx_.size());
    return statements;
  }

  // Innermost enclosing resource, looking through conditionals.
  const Block* EnclosingResource() const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      if (it->kind == BlockKind::kCase || it->kind == BlockKind::kConditional) {
        continue;
      }
      return it->kind == BlockKind::kResource ? &*it : nullptr;
    }
    return nullptr;
  }

  int CurrentBlockId() const {
    const Block* resource = EnclosingResource();
    return resource != nullptr ? resource->id : 0;
  }

  void Emit(TokenKind kind, std::string name, std::string value,
            const Lexeme& at, bool is_default = false) {
    Token token;
    token.kind = kind;
    token.name = std::move(name);
    token.value = std::move(value);
    token.line = at.line;
    token.column = at.column;
    token.is_default_attribute = is_default;
    token.block = CurrentBlockId();
    out_->push_back(std::move(token));
  }

  // Literal-valued `key => value` and `key: value` pairs in [begin, end).
  void EmitHashPairs(size_t begin, size_t end, TokenKind kind,
                     std::string_view prefix, bool is_default) {
    auto delimits = [&](size_t i) {
      return i >= end || IsOp(lx_[i], ",") || IsOp(lx_[i], ")") ||
             IsOp(lx_[i], "}") || IsOp(lx_[i], "]") ||
             lx_[i].kind == LexKind::kNewline;
    };
    for (size_t i = begin; i < end; ++i) {
      const Lexeme& key = lx_[i];
      size_t value_at = 0;
      if ((key.kind == LexKind::kString || key.kind == LexKind::kSymbol) &&
          i + 2 < end && IsOp(lx_[i + 1], "=>")) {
        value_at = i + 2;
      } else if (key.kind == LexKind::kLabel && i + 1 < end) {
        value_at = i + 1;
      } else {
        continue;
      }
      while (value_at < end && lx_[value_at].kind == LexKind::kNewline) {
        ++value_at;
      }
      if (value_at >= end || !IsLiteral(lx_[value_at]) ||
          !delimits(value_at + 1)) {
        continue;
      }
      std::string name = prefix.empty() ? key.text
                                        : absl::StrCat(std::string(prefix), ".", key.text);
      Emit(kind, std::move(name), LiteralValue(lx_[value_at]), key,
           is_default);
    }
  }

  struct AttributeRef {
    std::string path;
    bool is_default = false;
  };

  std::optional<AttributeRef> ParseAttributeRef(size_t begin,
                                                size_t end) const {
    size_t i = begin;
    std::string root;
    if (lx_[i].kind == LexKind::kIdent && IsPrecedenceLevel(lx_[i].text)) {
      root = lx_[i].text;
      ++i;
    } else if (IsKeywordLexeme(lx_[i], "node")) {
      root = "node";
      ++i;
      if (i + 1 < end && IsOp(lx_[i], ".") &&
          lx_[i + 1].kind == LexKind::kIdent &&
          IsPrecedenceLevel(lx_[i + 1].text)) {
        root = absl::StrCat("node.", lx_[i + 1].text);
        i += 2;
      }
    } else {
      return std::nullopt;
    }
    std::vector<std::string> segments;
    while (i < end) {
      if (IsOp(lx_[i], "[") && i + 2 < end &&
          (lx_[i + 1].kind == LexKind::kString ||
           lx_[i + 1].kind == LexKind::kSymbol) &&
          IsOp(lx_[i + 2], "]")) {
        segments.push_back(lx_[i + 1].text);
        i += 3;
      } else if (IsOp(lx_[i], ".") && i + 1 < end &&
                 lx_[i + 1].kind == LexKind::kIdent) {
        segments.push_back(lx_[i + 1].text);
        i += 2;
      } else {
        return std::nullopt;
      }
    }
    if (segments.empty()) return std::nullopt;
    return AttributeRef{internal::Join(segments, "."), IsDefaultRoot(root)};
  }

  void Recognize(const Statement& statement) {
    size_t begin = statement.begin;
    size_t end = statement.end;
    // Drop a trailing `if`/`unless` modifier.
    for (size_t i = begin + 1, depth = 0; i < end; ++i) {
      if (lx_[i].kind == LexKind::kOp) {
        if (lx_[i].text == "(" || lx_[i].text == "[" || lx_[i].text == "{") {
          ++depth;
        }
        if ((lx_[i].text == ")" || lx_[i].text == "]" || lx_[i].text == "}") &&
            depth > 0) {
          --depth;
        }
      }
      if (depth == 0 && IsModifierKeyword(lx_[i]) && !AfterMemberAccess(i)) {
        end = i;
        break;
      }
    }
    if (begin >= end) return;
    const Lexeme& head = lx_[begin];
    if (head.kind != LexKind::kIdent || IsKeyword(head.text)) return;

    if (RecognizeResource(begin, end)) return;
    if (RecognizeAssignment(begin, end)) return;
    RecognizeProperty(begin, end);
  }

  bool RecognizeResource(size_t begin, size_t end) {
    size_t i = begin + 1;
    const bool parenthesized = i < end && IsOp(lx_[i], "(");
    if (parenthesized) ++i;
    if (i >= end || lx_[i].kind != LexKind::kString) return false;
    const size_t literal = i++;
    if (parenthesized) {
      if (i >= end || !IsOp(lx_[i], ")")) return false;
      ++i;
    }
    if (i >= end || !IsKeywordLexeme(lx_[i], "do")) return false;
    pending_resource_ = Block{BlockKind::kResource, lx_[begin].line,
                              lx_[begin].column, ++next_block_id_, false, {}};
    Token token;
    token.kind = TokenKind::kResource;
    token.name = lx_[begin].text;
    token.value = lx_[literal].text;
    token.line = lx_[begin].line;
    token.column = lx_[begin].column;
    token.block = pending_resource_->id;
    out_->push_back(std::move(token));
    return true;
  }

  bool RecognizeAssignment(size_t begin, size_t end) {
    size_t op = end;
    for (size_t i = begin + 1, depth = 0; i < end; ++i) {
      const Lexeme& lx = lx_[i];
      if (lx.kind != LexKind::kOp) continue;
      if (lx.text == "(" || lx.text == "[" || lx.text == "{") ++depth;
      if ((lx.text == ")" || lx.text == "]" || lx.text == "}") && depth > 0) {
        --depth;
      }
      if (depth == 0 &&
          (lx.text == "=" || lx.text == "||=" || lx.text == "&&=")) {
        op = i;
        break;
      }
    }
    if (op == end) return false;

    size_t rhs = op + 1;
    size_t rhs_end = end;
    while (rhs < rhs_end && lx_[rhs].kind == LexKind::kNewline) ++rhs;
    // Tolerate a trailing `.freeze`.
    if (rhs_end - rhs == 3 && IsOp(lx_[rhs + 1], ".") &&
        IsKeywordLexeme(lx_[rhs + 2], "freeze")) {
      rhs_end = rhs + 1;
    }
    const bool literal = rhs_end - rhs == 1 && IsLiteral(lx_[rhs]);
    const bool hash = rhs < rhs_end && IsOp(lx_[rhs], "{");

    if (auto attribute = ParseAttributeRef(begin, op)) {
      if (literal) {
        Emit(TokenKind::kAttribute, attribute->path, LiteralValue(lx_[rhs]),
             lx_[begin], attribute->is_default);
      } else if (hash) {
        EmitHashPairs(rhs, rhs_end, TokenKind::kAttribute, attribute->path,
                      attribute->is_default);
      }
      return true;
    }
    if (op == begin + 1) {
      if (literal) {
        Emit(TokenKind::kVariable, lx_[begin].text, LiteralValue(lx_[rhs]),
             lx_[begin]);
      } else if (hash) {
        EmitHashPairs(rhs, rhs_end, TokenKind::kVariable, "", false);
      }
    }
    return true;
  }

  void RecognizeProperty(size_t begin, size_t end) {
    if (EnclosingResource() == nullptr) return;
    const Lexeme& name = lx_[begin];
    const size_t length = end - begin;
    if (length == 2 && IsLiteral(lx_[begin + 1])) {
      Emit(TokenKind::kProperty, name.text, LiteralValue(lx_[begin + 1]), name);
      return;
    }
    if (length == 4 && IsOp(lx_[begin + 1], "(") && IsLiteral(lx_[begin + 2]) &&
        IsOp(lx_[begin + 3], ")")) {
      Emit(TokenKind::kProperty, name.text, LiteralValue(lx_[begin + 2]), name);
      return;
    }
    EmitHashPairs(begin + 1, end, TokenKind::kProperty, "", false);
  }

  bool OpensConditional(size_t i) const {
    if (i == 0) return true;
    const Lexeme& prev = lx_[i - 1];
    if (prev.kind == LexKind::kNewline) return true;
    if (prev.kind == LexKind::kLabel) return true;
    if (prev.kind == LexKind::kOp) {
      static constexpr std::string_view kOpeners[] = {
          ";", "=", "||=", "&&=", "+=", "(", "[", "{", ",", "=>", "<<", "|",
      };
      return std::find(std::begin(kOpeners), std::end(kOpeners), prev.text) !=
             std::end(kOpeners);
    }
    return IsKeywordLexeme(prev, "then") || IsKeywordLexeme(prev, "else") ||
           IsKeywordLexeme(prev, "do") || IsKeywordLexeme(prev, "begin") ||
           IsKeywordLexeme(prev, "return");
  }

  std::string CaseSubject(const Lexeme& keyword) const {
    std::string_view line = internal::LineAt(lines_, keyword.line);
    const size_t start = static_cast<size_t>(keyword.column - 1) + 4;
    if (start >= line.size()) return "";
    std::string_view subject = line.substr(start);
    if (size_t hash = subject.find(" #"); hash != std::string_view::npos) {
      subject = subject.substr(0, hash);
    }
    return std::string(internal::Trim(subject));
  }

  absl::Status Structure(const Statement& statement) {
    bool loop_pending = false;
    for (size_t i = statement.begin; i < statement.end; ++i) {
      const Lexeme& lx = lx_[i];
      if (lx.kind != LexKind::kIdent || AfterMemberAccess(i)) continue;
      const std::string& word = lx.text;
      if (word == "do") {
        if (loop_pending) {
          loop_pending = false;
          continue;
        }
        if (pending_resource_.has_value()) {
          stack_.push_back(*pending_resource_);
          pending_resource_.reset();
        } else {
          stack_.push_back(Open(BlockKind::kDo, lx));
        }
      } else if (word == "case") {
        Block block = Open(BlockKind::kCase, lx);
        block.subject = CaseSubject(lx);
        stack_.push_back(std::move(block));
      } else if (word == "if" || word == "unless" || word == "while" ||
                 word == "until") {
        if (OpensConditional(i)) {
          stack_.push_back(Open(BlockKind::kConditional, lx));
          loop_pending = word == "while" || word == "until";
        }
      } else if (word == "for") {
        stack_.push_back(Open(BlockKind::kConditional, lx));
        loop_pending = true;
      } else if (word == "begin") {
        stack_.push_back(Open(BlockKind::kConditional, lx));
      } else if (word == "def" || word == "class" || word == "module") {
        stack_.push_back(Open(BlockKind::kDefinition, lx));
      } else if (word == "else") {
        if (!stack_.empty() && stack_.back().kind == BlockKind::kCase) {
          stack_.back().has_else = true;
        }
      } else if (word == "end") {
        if (stack_.empty()) {
          return absl::InvalidArgumentError(absl::StrCat(
              "MALFORMED_SOURCE: unexpected 'end' at line ", lx.line));
        }
        Block block = std::move(stack_.back());
        stack_.pop_back();
        if (block.kind == BlockKind::kCase) {
          Token token;
          token.kind = TokenKind::kCaseStmt;
          token.name = "case";
          token.value = std::move(block.subject);
          token.line = block.line;
          token.column = block.column;
          token.else_branch_present = block.has_else;
          token.block = CurrentBlockId();
          out_->push_back(std::move(token));
        }
      }
    }
    pending_resource_.reset();
    return absl::OkStatus();
  }

  std::vector<std::string_view> lines_;
  std::vector<Lexeme>& lx_;
  std::vector<Token>* out_ = nullptr;
  std::vector<Block> stack_;
  std::optional<Block> pending_resource_;
  int next_block_id_ = 0;
};

}  // namespace

std::string StripInterpolation(std::string_view literal) {
  std::string out;
  bool only_holes = true;
  bool any_hole = false;
  size_t i = 0;
  while (i < literal.size()) {
    if (literal[i] == '#' && i + 1 < literal.size() && literal[i + 1] == '{') {
      size_t j = i + 2;
      int depth = 1;
      while (j < literal.size() && depth > 0) {
        if (literal[j] == '{') ++depth;
        if (literal[j] == '}') --depth;
        ++j;
      }
      if (depth == 0) {
        out.append(kInterpolationPlaceholder);
        any_hole = true;
        i = j;
        continue;
      }
    }
    out.push_back(literal[i]);
    only_holes = false;
    ++i;
  }
  if (any_hole && only_holes) return "";
  return out;
}

TokenStream ParseChef(std::string_view source, std::string script) {
  TokenStream stream;
  stream.script = std::move(script);
  stream.dialect = Dialect::kChef;
  stream.loc = internal::CountLines(source);

  Lexer lexer(source);
  const absl::Status lexed = lexer.Run();
  if (!lexed.ok()) {
    stream.status = lexed;
    stream.tokens = std::move(lexer.comments());
    SortTokens(stream.tokens);
    return stream;
  }

  std::vector<Token> tokens;
  RecipeParser parser(source, lexer.lexemes());
  if (absl::Status parsed = parser.Run(tokens); !parsed.ok()) {
    stream.status = parsed;
    stream.tokens = std::move(lexer.comments());
    SortTokens(stream.tokens);
    return stream;
  }
  stream.tokens = std::move(lexer.comments());
  for (Token& token : tokens) stream.tokens.push_back(std::move(token));
  SortTokens(stream.tokens);
  return stream;
}

}  // namespace iaclint
