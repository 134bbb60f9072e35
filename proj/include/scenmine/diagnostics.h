// Copyright 2026 The scenmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCENMINE_DIAGNOSTICS_H_
#define SCENMINE_DIAGNOSTICS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace scenmine {

// Bad or unreadable input (maps to CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid tunable or option value (maps to CLI exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Severity { kInfo, kWarning, kError };

struct Diagnostic {
  Severity severity = Severity::kWarning;
  std::string where;  // e.g. "corpus.jsonl:12" or a snippet id
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

// Accumulates non-fatal problems. Fatal problems are thrown instead.
class Diagnostics {
 public:
  void Add(Severity severity, std::string where, std::string message) {
    items_.push_back({severity, std::move(where), std::move(message)});
  }
  void Warn(std::string where, std::string message) {
    Add(Severity::kWarning, std::move(where), std::move(message));
  }
  void Error(std::string where, std::string message) {
    Add(Severity::kError, std::move(where), std::move(message));
  }
  void Append(const Diagnostics& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }

  const std::vector<Diagnostic>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::size_t Count(Severity severity) const;

 private:
  std::vector<Diagnostic> items_;
};

const char* SeverityName(Severity severity);

}  // namespace scenmine

#endif  // SCENMINE_DIAGNOSTICS_H_
