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

#ifndef SCENMINE_OUTPUT_H_
#define SCENMINE_OUTPUT_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "scenmine/metrics.h"
#include "scenmine/pipeline.h"
#include "scenmine/snippet.h"

namespace scenmine {

inline constexpr int kSchemaVersion = 1;

using OrderedJson = nlohmann::ordered_json;

OrderedJson ScenarioToJson(const UsageScenario& scenario);
UsageScenario ScenarioFromJson(const nlohmann::json& json);

// {"schema_version", "meta", "scenarios": [...]}; stable key order.
std::string ScenariosDocument(const std::vector<UsageScenario>& scenarios,
                              const MineStats& stats);
std::vector<UsageScenario> ParseScenariosDocument(const std::string& text);

// Throws InputError when the path cannot be written.
void EmitScenarios(const std::vector<UsageScenario>& scenarios,
                   const MineStats& stats, const std::string& path);
std::vector<UsageScenario> LoadScenarios(const std::string& path);

std::string PredictionsJsonl(const std::vector<SnippetPrediction>& predictions);

OrderedJson ParsedSnippetToJson(const ParsedSnippet& snippet);
OrderedJson ReportToJson(const EvalReport& report);

// index.html plus api/<slug>.html per API. Returns the files written,
// relative to `out_dir`.
std::vector<std::string> RenderHtml(const std::vector<UsageScenario>& scenarios,
                                    const std::string& out_dir);

std::string HtmlEscape(const std::string& text);
std::string ApiSlug(const std::string& api);

}  // namespace scenmine

#endif  // SCENMINE_OUTPUT_H_
