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


#ifndef IACLINT_CLI_H_
#define IACLINT_CLI_H_

#include <ostream>

namespace iaclint {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitThresholdExceeded = 2;

// Entry point of the command-line tool with injectable streams:
//
//   scan   --path DIR [--dialect auto|ansible|chef] [--format csv|json]
//          [--out FILE] [--metrics FILE] [--fail-threshold N] [--jobs N]
//          [--strict-ansible]
//   eval   --path DIR --oracle FILE [--granularity script|line]
//          [--format csv|json] [--out FILE]
//   curate --metadata FILE
//
// Reports go to `out` (or the --out file); diagnostics go to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace iaclint

#endif  // IACLINT_CLI_H_
