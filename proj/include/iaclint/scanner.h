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


#ifndef IACLINT_SCANNER_H_
#define IACLINT_SCANNER_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "iaclint/model.h"

namespace iaclint {

// Bytes of content inspected by ClassifyScript.
inline constexpr std::size_t kClassifyHeadBytes = 4096;

// Decides which parser, if any, handles a file. `path` uses '/' separators
// and is relative to the scan root.
//
//   .yml / .yaml  Ansible. With `strict_ansible`, only when the head looks
//                 like a play or task list, or the file sits under tasks/,
//                 handlers/, vars/, defaults/, meta/, group_vars/ or
//                 host_vars/.
//   .rb           Chef when under recipes/, attributes/ or cookbooks/, or
//                 when the head contains a resource block opener.
std::optional<Dialect> ClassifyScript(std::string_view path,
                                      std::string_view head,
                                      bool strict_ansible = false);

struct ScanOptions {
  // Only scripts of this dialect are scanned when set.
  std::optional<Dialect> dialect;
  // Worker threads; 0 picks the hardware concurrency, 1 scans serially.
  int jobs = 0;
  bool strict_ansible = false;
};

struct ScriptReport {
  std::string path;
  Dialect dialect = Dialect::kAnsible;
  // OK, MALFORMED_SOURCE (comments still analyzed) or an I/O error.
  absl::Status status;
  bool readable = true;
  int loc = 0;
  std::size_t token_count = 0;
  std::vector<Occurrence> occurrences;
};

struct ScanError {
  std::string path;
  absl::Status status;
};

struct ScanResult {
  // Sorted by path.
  std::vector<ScriptReport> scripts;
  SmellCounts totals{};
  // Physical lines over readable scripts.
  long long total_loc = 0;
  // Directory entries that could not be visited.
  std::vector<ScanError> errors;

  std::size_t TotalOccurrences() const;
};

// Parses and checks one script held in memory.
ScriptReport ScanSource(std::string path, Dialect dialect,
                        std::string_view source);

// Walks `root` (a directory or a single file). Symbolic links are not
// followed and hidden directories are skipped. Fails with NotFound
// ("ROOT_NOT_FOUND") when `root` does not exist; per-entry failures are
// recorded in the result instead.
absl::StatusOr<ScanResult> ScanTree(const std::filesystem::path& root,
                                    const ScanOptions& options = {});

}  // namespace iaclint

#endif  // IACLINT_SCANNER_H_
