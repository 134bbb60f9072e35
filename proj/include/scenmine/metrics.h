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

#ifndef SCENMINE_METRICS_H_
#define SCENMINE_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scenmine {

enum class EvalTask { kLink, kValidity, kSummary, kReactions };
EvalTask ParseEvalTask(std::string_view name);
const char* EvalTaskName(EvalTask task);

// Ratios are nullopt when their denominator is zero.
struct EvalReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
  std::optional<double> accuracy;
};

EvalReport MakeReport(std::size_t tp, std::size_t fp, std::size_t tn,
                      std::size_t fn);

// One labelled snippet. `label` holds an API name, "invalid", "valid" or
// "undecided" for link/validity; `ids` holds sentence ids for
// summary/reactions. `candidates` optionally lists every sentence id that
// could have been chosen, enabling true-negative counts for set tasks.
struct LabelRecord {
  std::string snippet_id;
  std::string label;
  std::vector<std::string> ids;
  std::optional<std::vector<std::string>> candidates;
};

// Reads JSONL `{"snippet_id", "label"}` records. For prediction files
// written by `mine --pred-out` the task-specific field is used when
// "label" is absent.
std::vector<LabelRecord> ParseLabels(std::string_view jsonl, EvalTask task);
std::vector<LabelRecord> LoadLabels(const std::string& path, EvalTask task);

// Throws InputError listing prediction ids absent from `gold`.
EvalReport Evaluate(const std::vector<LabelRecord>& predictions,
                    const std::vector<LabelRecord>& gold, EvalTask task);

}  // namespace scenmine

#endif  // SCENMINE_METRICS_H_
