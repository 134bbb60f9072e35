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

#include "scenmine/metrics.h"

#include <set>
#include <sstream>

#include "json.hpp"
#include "scenmine/diagnostics.h"
#include "scenmine/text.h"

namespace scenmine {
namespace {

using nlohmann::json;

std::optional<double> Ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string StringField(const json& record, const char* key) {
  if (!record.contains(key) || record.at(key).is_null()) return {};
  return record.at(key).get<std::string>();
}

std::vector<std::string> ListField(const json& record, const char* key) {
  if (!record.contains(key) || record.at(key).is_null()) return {};
  return record.at(key).get<std::vector<std::string>>();
}

bool IsNoApi(const std::string& label) {
  return label == "invalid" || label == "undecided" || label.empty();
}

}  // namespace

EvalTask ParseEvalTask(std::string_view name) {
  if (name == "link") return EvalTask::kLink;
  if (name == "validity") return EvalTask::kValidity;
  if (name == "summary") return EvalTask::kSummary;
  if (name == "reactions") return EvalTask::kReactions;
  throw ConfigError("unknown eval task '" + std::string(name) + "'");
}

const char* EvalTaskName(EvalTask task) {
  switch (task) {
    case EvalTask::kLink:
      return "link";
    case EvalTask::kValidity:
      return "validity";
    case EvalTask::kSummary:
      return "summary";
    case EvalTask::kReactions:
      return "reactions";
  }
  return "link";
}

EvalReport MakeReport(std::size_t tp, std::size_t fp, std::size_t tn,
                      std::size_t fn) {
  EvalReport report{tp, fp, tn, fn, {}, {}, {}, {}};
  report.precision = Ratio(tp, tp + fp);
  report.recall = Ratio(tp, tp + fn);
  if (report.precision && report.recall &&
      *report.precision + *report.recall > 0.0) {
    report.f1 = 2.0 * *report.precision * *report.recall /
                (*report.precision + *report.recall);
  }
  report.accuracy = Ratio(tp + tn, tp + fp + tn + fn);
  return report;
}

std::vector<LabelRecord> ParseLabels(std::string_view jsonl, EvalTask task) {
  std::vector<LabelRecord> records;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (IsBlank(line)) continue;
    try {
      json record = json::parse(line);
      LabelRecord label;
      label.snippet_id = record.at("snippet_id").get<std::string>();
      bool set_task =
          task == EvalTask::kSummary || task == EvalTask::kReactions;
      const char* set_key = task == EvalTask::kSummary ? "summary" : "reactions";
      if (set_task) {
        label.ids = record.contains("label") && record.at("label").is_array()
                        ? ListField(record, "label")
                        : ListField(record, set_key);
        if (record.contains("candidates"))
          label.candidates = ListField(record, "candidates");
      } else if (record.contains("label")) {
        label.label = record.at("label").get<std::string>();
      } else {
        // Prediction records written by `mine --pred-out`.
        std::string status = StringField(record, "status");
        if (task == EvalTask::kValidity) {
          label.label = status == "invalid" ? "invalid" : "valid";
        } else {
          label.label = status == "linked" ? StringField(record, "api") : status;
        }
      }
      records.push_back(std::move(label));
    } catch (const json::exception& e) {
      throw InputError("label line " + std::to_string(number) + ": " +
                       e.what());
    }
  }
  return records;
}

std::vector<LabelRecord> LoadLabels(const std::string& path, EvalTask task) {
  return ParseLabels(ReadFile(path), task);
}

EvalReport Evaluate(const std::vector<LabelRecord>& predictions,
                    const std::vector<LabelRecord>& gold, EvalTask task) {
  std::map<std::string, const LabelRecord*> gold_by_id;
  for (const auto& g : gold) {
    if (!gold_by_id.emplace(g.snippet_id, &g).second)
      throw InputError("duplicate gold id: " + g.snippet_id);
  }
  std::map<std::string, const LabelRecord*> pred_by_id;
  std::string missing;
  for (const auto& p : predictions) {
    if (!gold_by_id.contains(p.snippet_id)) {
      missing += (missing.empty() ? "" : ", ") + p.snippet_id;
      continue;
    }
    pred_by_id[p.snippet_id] = &p;
  }
  if (!missing.empty())
    throw InputError("prediction ids missing from gold: " + missing);

  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
  for (const auto& [id, g] : gold_by_id) {
    auto it = pred_by_id.find(id);
    const LabelRecord* p = it == pred_by_id.end() ? nullptr : it->second;
    switch (task) {
      case EvalTask::kLink: {
        std::string predicted = p == nullptr ? "undecided" : p->label;
        if (IsNoApi(g->label)) {
          if (IsNoApi(predicted)) {
            ++tn;
          } else {
            ++fp;
          }
        } else if (predicted == g->label) {
          ++tp;
        } else if (IsNoApi(predicted)) {
          ++fn;
        } else {
          ++fp;
        }
        break;
      }
      case EvalTask::kValidity: {
        bool gold_invalid = g->label == "invalid";
        bool pred_invalid = p != nullptr && p->label == "invalid";
        if (gold_invalid && pred_invalid) {
          ++tp;
        } else if (pred_invalid) {
          ++fp;
        } else if (gold_invalid) {
          ++fn;
        } else {
          ++tn;
        }
        break;
      }
      case EvalTask::kSummary:
      case EvalTask::kReactions: {
        std::set<std::string> want(g->ids.begin(), g->ids.end());
        std::set<std::string> got;
        if (p != nullptr) got.insert(p->ids.begin(), p->ids.end());
        for (const auto& s : got) (want.contains(s) ? tp : fp)++;
        for (const auto& s : want) {
          if (!got.contains(s)) ++fn;
        }
        if (g->candidates) {
          std::set<std::string> universe(g->candidates->begin(),
                                         g->candidates->end());
          for (const auto& s : universe) {
            if (!want.contains(s) && !got.contains(s)) ++tn;
          }
        }
        break;
      }
    }
  }
  return MakeReport(tp, fp, tn, fn);
}

}  // namespace scenmine
