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

#ifndef IACLINT_CHEF_PARSER_H_
#define IACLINT_CHEF_PARSER_H_

#include <string>
#include <string_view>

#include "iaclint/token_stream.h"

namespace iaclint {

// Stands in for an interpolation hole `#{...}` in a string literal.
inline constexpr std::string_view kInterpolationPlaceholder = "⟦·⟧";

// Tokenizes a Chef recipe (or attributes file) from its surface syntax.
//
// Recognized constructs:
//   # comment / =begin ... =end           COMMENT
//   file '/var/x' do ... end              RESOURCE (name = type, value = literal)
//     content ''    (inside the block)    PROPERTY for literal-valued lines
//     variables('user' => 'x')            PROPERTY per literal hash pair
//   repo = 'http://...'                   VARIABLE
//   default['a']['b'] = '...'             ATTRIBUTE (name = "a.b")
//   case ... when ... [else] ... end      CASE_STMT
//
// Properties inside a conditional nested in a resource block still belong to
// the resource. Tokens written through a `default` precedence root carry
// is_default_attribute. When the source cannot be tokenized (unterminated
// literal, unbalanced do/end) the stream holds only the comments read so far
// and a MALFORMED_SOURCE status.
TokenStream ParseChef(std::string_view source, std::string script);

// Replaces every `#{...}` hole with kInterpolationPlaceholder. A literal made
// of holes only yields "".
std::string StripInterpolation(std::string_view literal);

}  // namespace iaclint

#endif  // IACLINT_CHEF_PARSER_H_
