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

#ifndef SCENMINE_CONFIG_H_
#define SCENMINE_CONFIG_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "scenmine/linker.h"
#include "scenmine/reactions.h"
#include "scenmine/summarizer.h"

namespace scenmine {

// Every pipeline tunable. Loaded from a `key = value` file; CLI flags
// override individual keys.
struct Config {
  SummaryOptions summary;
  ReactionOptions reactions;
  double max_error_line_ratio = 0.5;
  LinkMode mode = LinkMode::kFull;
  std::string stopwords_file;  // empty: built-in list
  std::string pronouns_file;   // empty: built-in list
  std::string negations_file;  // empty: built-in list

  // Throws ConfigError for unknown keys or out-of-range values.
  void Set(std::string_view key, std::string_view value);
  void Validate() const;
};

Config ParseConfig(std::string_view contents);
Config LoadConfig(const std::string& path);

LinkMode ParseLinkMode(std::string_view text);

}  // namespace scenmine

#endif  // SCENMINE_CONFIG_H_
