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


// Minimal RFC 4180 reading and writing.

#ifndef IACLINT_SRC_CSV_H_
#define IACLINT_SRC_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace iaclint::internal {

using CsvRow = std::vector<std::string>;

// Splits `text` into records. Quoted fields may hold commas, doubled quotes
// and line breaks; CRLF and LF both end a record. Blank lines are dropped.
std::vector<CsvRow> ParseCsv(std::string_view text);

// Quotes `field` when it contains a comma, quote, CR or LF.
std::string CsvField(std::string_view field);

// Joins already-formatted fields with commas (no trailing newline).
std::string CsvLine(const std::vector<std::string>& fields);

}  // namespace iaclint::internal

#endif  // IACLINT_SRC_CSV_H_
