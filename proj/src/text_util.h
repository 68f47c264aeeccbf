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

// String helpers over std::string_view. The distribution build of abseil
// ships its own string_view type, so its string utilities are not used on
// std::string_view arguments.

#ifndef IACLINT_SRC_TEXT_UTIL_H_
#define IACLINT_SRC_TEXT_UTIL_H_

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace iaclint::internal {

inline bool IsSpace(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

inline std::string_view TrimLeft(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  return s;
}

inline std::string_view Trim(std::string_view s) {
  s = TrimLeft(s);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

inline std::string ToLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  });
  return out;
}

inline bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

inline bool Contains(std::string_view haystack, std::string_view needle) {
  return haystack.find(needle) != std::string_view::npos;
}

template <typename Range>
std::string Join(const Range& parts, std::string_view separator) {
  std::string out;
  bool first = true;
  for (const auto& part : parts) {
    if (!first) out.append(separator);
    out.append(part);
    first = false;
  }
  return out;
}

// Physical line count: the number of newline-terminated lines plus a final
// unterminated one, if any.
inline int CountLines(std::string_view source) {
  if (source.empty()) return 0;
  int lines = static_cast<int>(std::count(source.begin(), source.end(), '\n'));
  if (source.back() != '\n') ++lines;
  return lines;
}

// Splits into physical lines without their terminators ("\r\n" tolerated).
inline std::vector<std::string_view> SplitLines(std::string_view source) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos < source.size()) {
    size_t end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

inline std::string_view LineAt(const std::vector<std::string_view>& lines,
                               int line) {
  if (line < 1 || static_cast<size_t>(line) > lines.size()) return {};
  return lines[line - 1];
}

}  // namespace iaclint::internal

#endif  // IACLINT_SRC_TEXT_UTIL_H_
