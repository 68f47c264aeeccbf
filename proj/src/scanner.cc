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


#include "iaclint/scanner.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iterator>
#include <regex>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "iaclint/ansible_parser.h"
#include "iaclint/chef_parser.h"
#include "iaclint/rule_engine.h"
#include "src/text_util.h"

namespace iaclint {

namespace fs = std::filesystem;

namespace {

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool HasDirectory(std::string_view path, std::string_view dir) {
  const std::string segment = std::string(dir) + "/";
  return internal::StartsWith(path, segment) ||
         internal::Contains(path, "/" + segment);
}

bool LooksLikePlaybook(std::string_view head) {
  // A top-level sequence whose first mapping carries a play or task key.
  static const auto* re = new std::regex(
      R"(^-[ \t]+(hosts|tasks|roles|name|import_playbook|include)[ \t]*:)",
      std::regex::ECMAScript | std::regex::multiline);
  for (std::string_view line : internal::SplitLines(head)) {
    if (line.empty() || line[0] != '-') continue;
    if (std::regex_search(line.begin(), line.end(), *re)) return true;
  }
  return false;
}

bool HasResourceOpener(std::string_view head) {
  static const auto* re = new std::regex(
      R"(^[ \t]*[a-z_][a-z0-9_]*[ \t]*\(?[ \t]*(['"]).*\1[ \t]*\)?[ \t]+do\b)");
  for (std::string_view line : internal::SplitLines(head)) {
    if (line.size() > 512) continue;
    if (std::regex_search(line.begin(), line.end(), *re)) return true;
  }
  return false;
}

absl::StatusOr<std::string> ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::PermissionDeniedError("IO_FAILURE: cannot open " +
                                       path.string());
  }
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (in.bad()) {
    return absl::DataLossError("IO_FAILURE: read error on " + path.string());
  }
  return content;
}

std::string ReadHead(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::string head(kClassifyHeadBytes, '\0');
  in.read(head.data(), static_cast<std::streamsize>(head.size()));
  head.resize(static_cast<size_t>(std::max<std::streamsize>(in.gcount(), 0)));
  return head;
}

struct Candidate {
  std::string relative;
  fs::path absolute;
};

void Walk(const fs::path& root, std::vector<fs::path>& files,
          std::vector<ScanError>& errors) {
  std::vector<fs::path> pending = {root};
  while (!pending.empty()) {
    const fs::path dir = std::move(pending.back());
    pending.pop_back();
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) {
      errors.push_back(ScanError{
          dir.lexically_relative(root).generic_string(),
          absl::PermissionDeniedError("PERMISSION_DENIED: " + ec.message())});
      continue;
    }
    for (; it != fs::directory_iterator(); it.increment(ec)) {
      if (ec) break;
      const fs::path& entry = it->path();
      const fs::file_status status = it->symlink_status(ec);
      if (ec) continue;
      if (fs::is_symlink(status)) continue;
      if (fs::is_directory(status)) {
        const std::string name = entry.filename().string();
        if (!name.empty() && name[0] == '.') continue;
        pending.push_back(entry);
      } else if (fs::is_regular_file(status)) {
        files.push_back(entry);
      }
    }
    if (ec) {
      errors.push_back(ScanError{
          dir.lexically_relative(root).generic_string(),
          absl::PermissionDeniedError("PERMISSION_DENIED: " + ec.message())});
    }
  }
}

ScriptReport ScanCandidate(const Candidate& candidate, Dialect dialect) {
  absl::StatusOr<std::string> content = ReadFile(candidate.absolute);
  if (!content.ok()) {
    ScriptReport report;
    report.path = candidate.relative;
    report.dialect = dialect;
    report.status = content.status();
    report.readable = false;
    return report;
  }
  return ScanSource(candidate.relative, dialect, *content);
}

}  // namespace

std::size_t ScanResult::TotalOccurrences() const {
  std::size_t total = 0;
  for (std::size_t count : totals) total += count;
  return total;
}

std::optional<Dialect> ClassifyScript(std::string_view path,
                                      std::string_view head,
                                      bool strict_ansible) {
  const std::string lowered = internal::ToLower(path);
  if (EndsWith(lowered, ".yml") || EndsWith(lowered, ".yaml")) {
    if (!strict_ansible) return Dialect::kAnsible;
    for (std::string_view dir : {"tasks", "handlers", "vars", "defaults",
                                 "meta", "group_vars", "host_vars"}) {
      if (HasDirectory(lowered, dir)) return Dialect::kAnsible;
    }
    if (LooksLikePlaybook(head)) return Dialect::kAnsible;
    return std::nullopt;
  }
  if (EndsWith(lowered, ".rb")) {
    for (std::string_view dir : {"recipes", "attributes", "cookbooks"}) {
      if (HasDirectory(lowered, dir)) return Dialect::kChef;
    }
    if (HasResourceOpener(head)) return Dialect::kChef;
  }
  return std::nullopt;
}

ScriptReport ScanSource(std::string path, Dialect dialect,
                        std::string_view source) {
  TokenStream stream = dialect == Dialect::kAnsible
                           ? ParseAnsible(source, path)
                           : ParseChef(source, path);
  ScriptReport report;
  report.path = std::move(path);
  report.dialect = dialect;
  report.status = stream.status;
  report.loc = stream.loc;
  report.token_count = stream.tokens.size();
  report.occurrences = Detect(stream, source);
  return report;
}

absl::StatusOr<ScanResult> ScanTree(const fs::path& root,
                                    const ScanOptions& options) {
  std::error_code ec;
  const fs::file_status root_status = fs::status(root, ec);
  if (ec || !fs::exists(root_status)) {
    return absl::NotFoundError("ROOT_NOT_FOUND: " + root.string());
  }

  ScanResult result;
  std::vector<fs::path> files;
  if (fs::is_directory(root_status)) {
    Walk(root, files, result.errors);
  } else {
    files.push_back(root);
  }

  std::vector<std::pair<Candidate, Dialect>> work;
  for (const fs::path& file : files) {
    std::string relative = fs::is_directory(root_status)
                               ? file.lexically_relative(root).generic_string()
                               : file.filename().generic_string();
    const std::optional<Dialect> dialect =
        ClassifyScript(relative, ReadHead(file), options.strict_ansible);
    if (!dialect.has_value()) continue;
    if (options.dialect.has_value() && *options.dialect != *dialect) continue;
    work.emplace_back(Candidate{std::move(relative), file}, *dialect);
  }
  std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) {
    return a.first.relative < b.first.relative;
  });
  std::sort(result.errors.begin(), result.errors.end(),
            [](const ScanError& a, const ScanError& b) {
              return a.path < b.path;
            });

  result.scripts.resize(work.size());
  int jobs = options.jobs > 0
                 ? options.jobs
                 : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, std::max(1, static_cast<int>(work.size())));
  if (jobs == 1) {
    for (size_t i = 0; i < work.size(); ++i) {
      result.scripts[i] = ScanCandidate(work[i].first, work[i].second);
    }
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (size_t i = next++; i < work.size(); i = next++) {
          result.scripts[i] = ScanCandidate(work[i].first, work[i].second);
        }
      });
    }
    for (std::thread& worker : workers) worker.join();
  }

  for (const ScriptReport& script : result.scripts) {
    if (script.readable) result.total_loc += script.loc;
    for (const Occurrence& occurrence : script.occurrences) {
      ++result.totals[SmellIndex(occurrence.smell)];
    }
  }
  return result;
}

}  // namespace iaclint
