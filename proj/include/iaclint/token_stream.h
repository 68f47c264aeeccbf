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

#ifndef IACLINT_TOKEN_STREAM_H_
#define IACLINT_TOKEN_STREAM_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "iaclint/model.h"

namespace iaclint {

// Parser output for one script. Tokens are ordered by (line, column).
//
// A parser that hits malformed input still returns a stream: `status` is
// then kInvalidArgument with a "MALFORMED_SOURCE" message and `tokens` holds
// whatever comments could be recovered.
struct TokenStream {
  std::string script;
  Dialect dialect = Dialect::kAnsible;
  std::vector<Token> tokens;
  // Physical line count of the source.
  int loc = 0;
  absl::Status status;

  bool ok() const { return status.ok(); }
};

// Stable sort on (line, column).
void SortTokens(std::vector<Token>& tokens);

}  // namespace iaclint

#endif  // IACLINT_TOKEN_STREAM_H_
