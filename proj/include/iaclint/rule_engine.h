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


#ifndef IACLINT_RULE_ENGINE_H_
#define IACLINT_RULE_ENGINE_H_

#include <string_view>
#include <vector>

#include "iaclint/model.h"
#include "iaclint/token_stream.h"

namespace iaclint {

// Applies the rule set of `stream.dialect` to every token. Occurrences come
// out in token order, at most one per (token, smell), with duplicates on
// (script, smell, line, snippet) removed.
//
// When `source` is the text the stream was parsed from, snippets are the
// trimmed source line; otherwise they are rebuilt from the token.
std::vector<Occurrence> Detect(const TokenStream& stream,
                               std::string_view source = {});

// Subtype of a name that matched the hard-coded secret rule. Private-key
// names, and names containing key/rsa/cert/ssl, are KEY; otherwise password
// names are PASSWORD; everything else is USERNAME.
SecretSubtype ClassifySecret(std::string_view name);

// True when `value` switches an integrity check off: "", false, no, 0, off
// (any case).
bool IsNegativeSetting(std::string_view value);

}  // namespace iaclint

#endif  // IACLINT_RULE_ENGINE_H_
