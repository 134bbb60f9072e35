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

#include "scenmine/output.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "scenmine/diagnostics.h"

namespace scenmine {
namespace {

using nlohmann::json;

OrderedJson SentencesToJson(const std::vector<Sentence>& sentences) {
  OrderedJson out = OrderedJson::array();
  for (const auto& s : sentences) {
    OrderedJson item;
    item["id"] = s.id;
    item["text"] = s.text;
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<Sentence> SentencesFromJson(const json& array) {
  std::vector<Sentence> out;
  for (const auto& item : array) {
    Sentence s;
    s.id = item.at("id").get<std::string>();
    s.text = item.at("text").get<std::string>();
    out.push_back(std::move(s));
  }
  return out;
}

Bucket ParseBucket(const std::string& name) {
  if (name == "before") return Bucket::kBefore;
  if (name == "after") return Bucket::kAfter;
  if (name == "thread") return Bucket::kThread;
  return Bucket::kNone;
}

Polarity ParsePolarity(const std::string& name) {
  if (name == "positive") return Polarity::kPositive;
  if (name == "negative") return Polarity::kNegative;
  return Polarity::kNeutral;
}

ReferenceBasis ParseBasis(const std::string& name) {
  if (name == "explicit_name") return ReferenceBasis::kExplicitName;
  if (name == "pronoun") return ReferenceBasis::kPronoun;
  return ReferenceBasis::kImplicit;
}

const char* StatusName(SnippetStatus status) {
  switch (status) {
    case SnippetStatus::kLinked:
      return "linked";
    case SnippetStatus::kInvalid:
      return "invalid";
    case SnippetStatus::kUndecided:
      return "undecided";
  }
  return "undecided";
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw InputError("error writing " + path.string());
}

std::string ScenarioTitle(const UsageScenario& s) {
  if (s.description && !s.description->title.empty())
    return s.description->title;
  return "Snippet " + s.SnippetId();
}

void AppendSentenceList(std::string& html, const char* heading,
                        const std::vector<Sentence>& sentences) {
  if (sentences.empty()) return;
  html += "<h4>" + std::string(heading) + "</h4>\n<ul>\n";
  for (const auto& s : sentences) html += "<li>" + HtmlEscape(s.text) + "</li>\n";
  html += "</ul>\n";
}

constexpr const char* kStyle =
    "<style>body{font-family:sans-serif;max-width:60em;margin:auto}"
    "pre{background:#f4f4f4;padding:.5em;overflow-x:auto}"
    ".positive{color:#1a7f37}.negative{color:#b3261e}</style>\n";

}  // namespace

OrderedJson ScenarioToJson(const UsageScenario& scenario) {
  OrderedJson out;
  out["snippet_id"] = scenario.SnippetId();
  out["thread_id"] = scenario.thread_id;
  out["post_id"] = scenario.post_id;
  out["snippet_index"] = scenario.snippet_index;
  out["block_index"] = scenario.block_index;

  OrderedJson api;
  api["name"] = scenario.api.api;
  api["mention"] = scenario.api.mention;
  api["method"] = LinkMethodName(scenario.api.method);
  api["bucket"] = BucketName(scenario.api.bucket);
  api["tie_break"] = scenario.api.tie_break;
  api["coverage"] = scenario.api.coverage;
  OrderedJson trace = OrderedJson::array();
  for (const auto& step : scenario.api.trace) {
    OrderedJson item;
    item["filter"] = step.filter;
    item["input"] = step.input;
    item["output"] = step.output;
    item["max_score"] = step.max_score;
    item["no_signal"] = step.no_signal;
    trace.push_back(std::move(item));
  }
  api["filter_trace"] = std::move(trace);
  out["api"] = std::move(api);

  out["code"] = scenario.code;
  out["types"] = scenario.types;
  if (scenario.description) {
    const TaskDescription& d = *scenario.description;
    OrderedJson description;
    description["title"] = d.title;
    description["problem"] = SentencesToJson(d.problem_summary);
    description["solution"] = SentencesToJson(d.solution_summary);
    description["problem_low_confidence"] = d.problem_low_confidence;
    description["solution_low_confidence"] = d.solution_low_confidence;
    out["description"] = std::move(description);
  } else {
    out["description"] = nullptr;
  }
  OrderedJson reactions = OrderedJson::array();
  for (const auto& r : scenario.reactions) {
    OrderedJson item;
    item["id"] = r.sentence.id;
    item["text"] = r.sentence.text;
    item["comment_order"] = r.comment_order;
    item["polarity"] = PolarityName(r.polarity);
    item["basis"] = ReferenceBasisName(r.basis);
    reactions.push_back(std::move(item));
  }
  out["reactions"] = std::move(reactions);
  return out;
}

UsageScenario ScenarioFromJson(const json& in) {
  UsageScenario s;
  s.thread_id = in.at("thread_id").get<std::string>();
  s.post_id = in.at("post_id").get<std::string>();
  s.snippet_index = in.at("snippet_index").get<std::size_t>();
  s.block_index = in.value("block_index", std::size_t{0});
  s.code = in.at("code").get<std::string>();
  for (const auto& t : in.value("types", json::array()))
    s.types.insert(t.get<std::string>());
  const json& api = in.at("api");
  s.api.api = api.at("name").get<std::string>();
  s.api.mention = api.value("mention", "");
  s.api.method = api.value("method", "proximity") == "probabilistic"
                     ? LinkMethod::kProbabilistic
                     : LinkMethod::kProximity;
  s.api.bucket = ParseBucket(api.value("bucket", "none"));
  s.api.tie_break = api.value("tie_break", false);
  s.api.coverage = api.value("coverage", std::size_t{0});
  for (const auto& step : api.value("filter_trace", json::array())) {
    s.api.trace.push_back({step.at("filter").get<std::string>(),
                           step.at("input").get<std::size_t>(),
                           step.at("output").get<std::size_t>(),
                           step.at("max_score").get<double>(),
                           step.at("no_signal").get<bool>()});
  }
  if (in.contains("description") && !in.at("description").is_null()) {
    const json& d = in.at("description");
    TaskDescription description;
    description.title = d.value("title", "");
    description.problem_summary = SentencesFromJson(d.value("problem", json::array()));
    description.solution_summary =
        SentencesFromJson(d.value("solution", json::array()));
    description.problem_low_confidence = d.value("problem_low_confidence", false);
    description.solution_low_confidence =
        d.value("solution_low_confidence", false);
    s.description = std::move(description);
  }
  for (const auto& r : in.value("reactions", json::array())) {
    Reaction reaction;
    reaction.sentence.id = r.at("id").get<std::string>();
    reaction.sentence.text = r.at("text").get<std::string>();
    reaction.sentence.container = SentenceContainer::kComment;
    reaction.comment_order = r.value("comment_order", std::size_t{0});
    reaction.polarity = ParsePolarity(r.at("polarity").get<std::string>());
    reaction.basis = ParseBasis(r.value("basis", "implicit"));
    s.reactions.push_back(std::move(reaction));
  }
  return s;
}

std::string ScenariosDocument(const std::vector<UsageScenario>& scenarios,
                              const MineStats& stats) {
  OrderedJson doc;
  doc["schema_version"] = kSchemaVersion;
  OrderedJson meta;
  meta["generator"] = "scenmine";
  meta["threads"] = stats.threads;
  meta["snippets"] = stats.snippets;
  meta["invalid"] = stats.invalid;
  meta["proximity_linked"] = stats.proximity_linked;
  meta["probabilistic_linked"] = stats.probabilistic_linked;
  meta["undecided"] = stats.undecided;
  doc["meta"] = std::move(meta);
  OrderedJson list = OrderedJson::array();
  for (const auto& s : scenarios) list.push_back(ScenarioToJson(s));
  doc["scenarios"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::vector<UsageScenario> ParseScenariosDocument(const std::string& text) {
  try {
    json doc = json::parse(text);
    const json* list = &doc;
    if (doc.is_object()) {
      int version = doc.value("schema_version", 0);
      if (version != kSchemaVersion)
        throw InputError("unsupported scenario schema_version " +
                         std::to_string(version));
      list = &doc.at("scenarios");
    }
    if (!list->is_array()) throw InputError("scenarios must be an array");
    std::vector<UsageScenario> scenarios;
    for (const auto& item : *list) scenarios.push_back(ScenarioFromJson(item));
    return scenarios;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed scenario document: ") + e.what());
  }
}

void EmitScenarios(const std::vector<UsageScenario>& scenarios,
                   const MineStats& stats, const std::string& path) {
  WriteFile(path, ScenariosDocument(scenarios, stats));
}

std::vector<UsageScenario> LoadScenarios(const std::string& path) {
  return ParseScenariosDocument(ReadFile(path));
}

std::string PredictionsJsonl(const std::vector<SnippetPrediction>& predictions) {
  std::string out;
  for (const auto& p : predictions) {
    OrderedJson line;
    line["snippet_id"] = p.snippet_id;
    line["status"] = StatusName(p.status);
    line["api"] = p.api;
    line["invalid_reason"] = p.invalid_reason;
    line["summary"] = p.summary;
    line["reactions"] = p.reactions;
    out += line.dump() + "\n";
  }
  return out;
}

OrderedJson ParsedSnippetToJson(const ParsedSnippet& snippet) {
  OrderedJson out;
  out["post_id"] = snippet.post_id;
  out["block_index"] = snippet.block_index;
  out["valid"] = snippet.validity.valid;
  out["invalid_reason"] = snippet.validity.valid
                              ? OrderedJson(nullptr)
                              : OrderedJson(InvalidReasonName(snippet.validity.reason));
  out["types_used"] = snippet.types_used;
  out["methods_used"] = snippet.methods_used;
  out["imports"] = snippet.imports;
  out["declarations"] = snippet.declarations;
  out["declared_types"] = snippet.declared_types;
  out["error_line_count"] = snippet.error_line_count;
  OrderedJson lines = OrderedJson::array();
  for (const auto& o : snippet.line_outcomes) {
    OrderedJson line;
    line["index"] = o.line_index;
    line["status"] = LineStatusName(o.status);
    line["text"] = o.text;
    line["extracted"] = o.extracted;
    lines.push_back(std::move(line));
  }
  out["lines"] = std::move(lines);
  return out;
}

OrderedJson ReportToJson(const EvalReport& report) {
  auto ratio = [](const std::optional<double>& v) {
    return v ? OrderedJson(*v) : OrderedJson(nullptr);
  };
  OrderedJson out;
  out["tp"] = report.tp;
  out["fp"] = report.fp;
  out["tn"] = report.tn;
  out["fn"] = report.fn;
  out["precision"] = ratio(report.precision);
  out["recall"] = ratio(report.recall);
  out["f1"] = ratio(report.f1);
  out["accuracy"] = ratio(report.accuracy);
  return out;
}

std::string HtmlEscape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&#39;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string ApiSlug(const std::string& api) {
  std::string slug;
  for (char c : api) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      slug += static_cast<char>(std::tolower(u));
    } else if (!slug.empty() && slug.back() != '-') {
      slug += '-';
    }
  }
  while (!slug.empty() && slug.back() == '-') slug.pop_back();
  return slug.empty() ? "api" : slug;
}

std::vector<std::string> RenderHtml(const std::vector<UsageScenario>& scenarios,
                                    const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(fs::path(out_dir) / "api", ec);
  if (ec) throw InputError("cannot create " + out_dir + ": " + ec.message());

  std::map<std::string, std::vector<const UsageScenario*>> by_api;
  for (const auto& s : scenarios) by_api[s.api.api].push_back(&s);

  std::map<std::string, std::string> slugs;
  std::set<std::string> taken;
  for (const auto& [api, list] : by_api) {
    std::string slug = ApiSlug(api);
    std::string unique = slug;
    for (int n = 2; taken.contains(unique); ++n)
      unique = slug + "-" + std::to_string(n);
    taken.insert(unique);
    slugs[api] = unique;
  }

  std::vector<std::pair<std::string, std::size_t>> ranking;
  for (const auto& [api, list] : by_api) ranking.emplace_back(api, list.size());
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  std::vector<std::string> written;
  std::string index =
      "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\">"
      "<title>API usage scenarios</title>\n" +
      std::string(kStyle) +
      "</head><body>\n<h1>API usage scenarios</h1>\n<ol>\n";
  for (const auto& [api, count] : ranking) {
    index += "<li><a href=\"api/" + slugs[api] + ".html\">" + HtmlEscape(api) +
             "</a> (" + std::to_string(count) + ")</li>\n";
  }
  index += "</ol>\n</body></html>\n";
  WriteFile(fs::path(out_dir) / "index.html", index);
  written.push_back("index.html");

  for (const auto& [api, list] : by_api) {
    std::string html =
        "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>" +
        HtmlEscape(api) + "</title>\n" + kStyle + "</head><body>\n" +
        "<p><a href=\"../index.html\">All APIs</a></p>\n<h1>" +
        HtmlEscape(api) + "</h1>\n";
    for (std::size_t i = 0; i < list.size(); ++i) {
      const UsageScenario& s = *list[i];
      html += "<section id=\"s" + std::to_string(i) + "\">\n<h2>" +
              HtmlEscape(ScenarioTitle(s)) + "</h2>\n";
      html += "<p class=\"provenance\">" + HtmlEscape(s.SnippetId()) + "</p>\n";
      html += "<pre><code>" + HtmlEscape(s.code) + "</code></pre>\n";
      if (s.description) {
        AppendSentenceList(html, "Problem", s.description->problem_summary);
        AppendSentenceList(html, "Solution", s.description->solution_summary);
      }
      if (!s.reactions.empty()) {
        html += "<h4>Reactions</h4>\n<ul>\n";
        for (const auto& r : s.reactions) {
          html += "<li class=\"" + std::string(PolarityName(r.polarity)) +
                  "\">" + HtmlEscape(r.sentence.text) + "</li>\n";
        }
        html += "</ul>\n";
      }
      std::string see_also;
      for (std::size_t j = 0; j < list.size(); ++j) {
        if (j == i) continue;
        const auto& other = list[j]->types;
        bool shares = std::any_of(s.types.begin(), s.types.end(),
                                  [&](const std::string& t) {
                                    return other.contains(t);
                                  });
        if (shares) {
          see_also += "<li><a href=\"#s" + std::to_string(j) + "\">" +
                      HtmlEscape(ScenarioTitle(*list[j])) + "</a></li>\n";
        }
      }
      if (!see_also.empty())
        html += "<h4>See Also</h4>\n<ul class=\"see-also\">\n" + see_also +
                "</ul>\n";
      html += "</section>\n";
    }
    html += "</body></html>\n";
    std::string name = "api/" + slugs[api] + ".html";
    WriteFile(fs::path(out_dir) / name, html);
    written.push_back(name);
  }
  return written;
}

}  // namespace scenmine
