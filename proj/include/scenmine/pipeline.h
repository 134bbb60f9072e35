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

#ifndef SCENMINE_PIPELINE_H_
#define SCENMINE_PIPELINE_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scenmine/catalog.h"
#include "scenmine/config.h"
#include "scenmine/corpus.h"
#include "scenmine/linker.h"
#include "scenmine/opinion.h"
#include "scenmine/reactions.h"
#include "scenmine/summarizer.h"

namespace scenmine {

// A mined scenario: code example, linked API, task description, reactions.
struct UsageScenario {
  std::string thread_id;
  std::string post_id;
  std::size_t snippet_index = 0;  // ordinal among the post's code blocks
  std::size_t block_index = 0;
  std::string code;
  std::set<std::string> types;  // T after user-type removal
  LinkDecision api;
  std::optional<TaskDescription> description;  // answer posts only
  std::vector<Reaction> reactions;

  std::string SnippetId() const;
};

std::string MakeSnippetId(const std::string& thread_id,
                          const std::string& post_id,
                          std::size_t snippet_index);

enum class SnippetStatus { kLinked, kInvalid, kUndecided };

// Per-snippet outcome for every code block, including the excluded ones.
struct SnippetPrediction {
  std::string snippet_id;
  SnippetStatus status = SnippetStatus::kUndecided;
  std::string api;                 // kLinked
  std::string invalid_reason;      // kInvalid
  std::vector<std::string> summary;    // sentence ids
  std::vector<std::string> reactions;  // sentence ids
};

struct MineStats {
  std::size_t threads = 0;
  std::size_t snippets = 0;
  std::size_t invalid = 0;
  std::size_t proximity_linked = 0;
  std::size_t probabilistic_linked = 0;
  std::size_t undecided = 0;

  bool operator==(const MineStats&) const = default;
};

struct MineResult {
  std::vector<UsageScenario> scenarios;  // by (thread, post, snippet)
  std::vector<SnippetPrediction> predictions;
  MineStats stats;
  Diagnostics diagnostics;
};

// Phase 1 (parallel per thread): parse, extract, proximity-link.
// Phase 2 (after a barrier): probabilistic-link the undecided, then
// summarize and attach reactions. Output does not depend on `workers`.
MineResult Mine(const std::vector<Thread>& threads, const ApiCatalog& catalog,
                const SentimentLexicon& lexicon, const Config& config,
                const Lexicons& lexicons, std::size_t workers = 1);

// Lexicons named by the config, or the built-in lists.
Lexicons LoadLexicons(const Config& config);

}  // namespace scenmine

#endif  // SCENMINE_PIPELINE_H_
