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

#include "iaclint/patterns.h"

#include <initializer_list>
#include <regex>
#include <string>
#include <string_view>

#include "absl/strings/ascii.h"
#include "src/text_util.h"

namespace iaclint {

namespace {

// The URL body is the union [a-zA-Z] | [0-9] | [$-_@.&+] | [!*\(\),] | %hh.
// Every alternative is a subset of the single class below (the range $-_
// already holds digits, upper case letters and '%'), so the class accepts the
// same language without the exponential backtracking of the alternation.
constexpr std::string_view kDownloadPattern =
    R"(https?://[$-_@.&+!*(),a-zA-Z0-9]+\.(?:dmg|rpm|tar\.gz|tgz|zip|tar))";

constexpr auto kRegexFlags =
    std::regex::ECMAScript | std::regex::icase | std::regex::optimize;

const std::regex& DownloadRegex() {
  static const auto* re =
      new std::regex(std::string(kDownloadPattern), kRegexFlags);
  return *re;
}

const std::regex& BugInfoRegex() {
  static const auto* re = new std::regex(
      R"(bug[# \t]*[0-9]+|show_bug\.cgi\?id=[0-9]+)", kRegexFlags);
  return *re;
}

const std::regex& WrongWordRegex() {
  static const auto* re = new std::regex(
      R"(\b(?:bug|hack|fixme|later|later2|todo)\b)", kRegexFlags);
  return *re;
}

bool ContainsAny(std::string_view lowered,
                 std::initializer_list<std::string_view> keywords) {
  for (std::string_view keyword : keywords) {
    if (internal::Contains(lowered, keyword)) return true;
  }
  return false;
}

bool Search(const std::regex& re, std::string_view subject) {
  return std::regex_search(subject.begin(), subject.end(), re);
}

// libstdc++'s regex executor recurses per matched character, so the
// download expression only runs over whitespace-free chunks that contain a
// scheme. None of the URL characters is whitespace, so a match can never
// span two chunks.
constexpr size_t kMaxUrlChunk = 8192;

bool SearchDownload(std::string_view subject, std::string_view lowered) {
  if (!internal::Contains(lowered, "http")) return false;
  size_t pos = 0;
  while (pos < subject.size()) {
    while (pos < subject.size() &&
           absl::ascii_isspace(static_cast<unsigned char>(subject[pos]))) {
      ++pos;
    }
    size_t end = pos;
    while (end < subject.size() &&
           !absl::ascii_isspace(static_cast<unsigned char>(subject[end]))) {
      ++end;
    }
    std::string_view chunk_lower = lowered.substr(pos, end - pos);
    if (internal::Contains(chunk_lower, "http")) {
      std::string_view chunk = subject.substr(pos, end - pos);
      if (chunk.size() > kMaxUrlChunk) chunk = chunk.substr(0, kMaxUrlChunk);
      if (Search(DownloadRegex(), chunk)) return true;
    }
    pos = end;
  }
  return false;
}

}  // namespace

std::string_view PatternFnName(PatternFn fn) {
  switch (fn) {
    case PatternFn::kHasBugInfo:
      return "hasBugInfo";
    case PatternFn::kHasWrongWord:
      return "hasWrongWord";
    case PatternFn::kIsAdmin:
      return "isAdmin";
    case PatternFn::kIsDownload:
      return "isDownload";
    case PatternFn::kIsHttp:
      return "isHTTP";
    case PatternFn::kIsInvalidBind:
      return "isInvalidBind";
    case PatternFn::kIsIntegrityCheck:
      return "isIntegrityCheck";
    case PatternFn::kIsPassword:
      return "isPassword";
    case PatternFn::kIsPvtKey:
      return "isPvtKey";
    case PatternFn::kIsRole:
      return "isRole";
    case PatternFn::kIsUser:
      return "isUser";
    case PatternFn::kUsesWeakAlgo:
      return "usesWeakAlgo";
  }
  return "unknown";
}

std::string_view DownloadUrlPattern() { return kDownloadPattern; }

bool Match(PatternFn fn, std::string_view subject) {
  if (subject.empty()) return false;
  const std::string lowered = internal::ToLower(subject);
  switch (fn) {
    case PatternFn::kHasBugInfo:
      return Search(BugInfoRegex(), subject);
    case PatternFn::kHasWrongWord:
      return Search(WrongWordRegex(), subject);
    case PatternFn::kIsAdmin:
      return internal::Contains(lowered, "admin");
    case PatternFn::kIsDownload:
      return SearchDownload(subject, lowered);
    case PatternFn::kIsHttp:
      return internal::Contains(lowered, "http:");
    case PatternFn::kIsInvalidBind:
      return internal::Contains(lowered, "0.0.0.0");
    case PatternFn::kIsIntegrityCheck:
      return ContainsAny(lowered,
                         {"gpgcheck", "check_sha", "checksum", "checksha"});
    case PatternFn::kIsPassword:
      // "password" is subsumed by "pass"; kept to mirror the keyword list.
      return ContainsAny(lowered, {"pwd", "pass", "password"});
    case PatternFn::kIsPvtKey:
      return ContainsAny(lowered, {"pvt", "priv"}) &&
             ContainsAny(lowered, {"cert", "key", "rsa", "secret", "ssl"});
    case PatternFn::kIsRole:
      return internal::Contains(lowered, "role");
    case PatternFn::kIsUser:
      return internal::Contains(lowered, "user");
    case PatternFn::kUsesWeakAlgo:
      return ContainsAny(lowered, {"md5", "sha1"});
  }
  return false;
}

}  // namespace iaclint
