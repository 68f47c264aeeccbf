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

// String pattern functions used by the detection rules. All matching is
// case-insensitive. Keyword functions match substrings, except
// kHasWrongWord which matches whole words.

#ifndef IACLINT_PATTERNS_H_
#define IACLINT_PATTERNS_H_

#include <array>
#include <string_view>

namespace iaclint {

enum class PatternFn {
  kHasBugInfo,
  kHasWrongWord,
  kIsAdmin,
  kIsDownload,
  kIsHttp,
  kIsInvalidBind,
  kIsIntegrityCheck,
  kIsPassword,
  kIsPvtKey,
  kIsRole,
  kIsUser,
  kUsesWeakAlgo,
};

inline constexpr std::array<PatternFn, 12> kAllPatternFns = {
    PatternFn::kHasBugInfo,       PatternFn::kHasWrongWord,
    PatternFn::kIsAdmin,          PatternFn::kIsDownload,
    PatternFn::kIsHttp,           PatternFn::kIsInvalidBind,
    PatternFn::kIsIntegrityCheck, PatternFn::kIsPassword,
    PatternFn::kIsPvtKey,         PatternFn::kIsRole,
    PatternFn::kIsUser,           PatternFn::kUsesWeakAlgo,
};

std::string_view PatternFnName(PatternFn fn);

bool Match(PatternFn fn, std::string_view subject);

// Source text of the download-URL expression (ECMAScript syntax). Exposed so
// documentation and tests can show exactly what is matched.
std::string_view DownloadUrlPattern();

}  // namespace iaclint

#endif  // IACLINT_PATTERNS_H_
