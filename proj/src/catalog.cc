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

#include "scenmine/catalog.h"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "resources.h"

namespace scenmine {
namespace {

using nlohmann::json;

constexpr std::size_t kMinMatchLength = 3;

const WordSet& MentionStopWords() {
  static const WordSet words = ParseWordList(DefaultStopWordsText());
  return words;
}

// Lowercase strings a token must equal for an exact match.
std::vector<std::string> ExactKeys(const ApiRecord& record) {
  std::vector<std::string> keys;
  keys.push_back(ToLower(record.name));
  for (const auto& m : record.modules) keys.push_back(ToLower(m));
  for (const auto& a : record.aliases) keys.push_back(ToLower(a));
  return keys;
}

// Lowercase segments a token may be a substring of (or contain).
std::vector<std::string> FuzzySegments(const ApiRecord& record) {
  std::vector<std::string> segments;
  segments.push_back(ToLower(TerminalSegment(record.name)));
  for (const auto& m : record.modules)
    segments.push_back(ToLower(TerminalSegment(m)));
  for (const auto& a : record.aliases) segments.push_back(ToLower(a));
  return segments;
}

bool FuzzyRelated(std::string_view token, std::string_view segment) {
  if (token == segment) return false;
  if (std::min(token.size(), segment.size()) < kMinMatchLength) return false;
  return segment.find(token) != std::string_view::npos ||
         token.find(segment) != std::string_view::npos;
}

bool HasLetter(std::string_view token) {
  return std::any_of(token.begin(), token.end(), [](char c) {
    return std::isalpha(static_cast<unsigned char>(c));
  });
}

// "JSONObject", "TypeToken": class names that merely contain an API name.
bool CompoundTypeName(std::string_view token) {
  if (!IsCamelCaseType(token)) return false;
  return std::any_of(token.begin() + 1, token.end(), [](char c) {
    return std::isupper(static_cast<unsigned char>(c));
  });
}

std::vector<std::string> StringList(const json& object, const char* key) {
  if (!object.contains(key)) return {};
  return object.at(key).get<std::vector<std::string>>();
}

}  // namespace

const char* MatchKindName(MatchKind kind) {
  switch (kind) {
    case MatchKind::kNone:
      return "none";
    case MatchKind::kExact:
      return "exact";
    case MatchKind::kFuzzy:
      return "fuzzy";
  }
  return "none";
}

void ApiRecord::Finalize() {
  simple_types_.clear();
  qualified_simple_.clear();
  all_methods_.clear();
  for (const auto& type : types) {
    std::string simple = TerminalSegment(type);
    simple_types_.insert(simple);
    if (simple.size() != type.size()) qualified_simple_.insert(simple);
  }
  for (const auto& [type, names] : methods) {
    all_methods_.insert(names.begin(), names.end());
  }
}

bool ApiRecord::HasSimpleType(std::string_view simple) const {
  return simple_types_.contains(simple);
}

bool ApiRecord::HasType(std::string_view name) const {
  return types.contains(std::string(name));
}

bool ApiRecord::HasQualifiedTypeFor(std::string_view simple) const {
  return qualified_simple_.contains(simple);
}

MatchKind MatchName(std::string_view token, const ApiRecord& record) {
  if (token.size() < kMinMatchLength) return MatchKind::kNone;
  for (const auto& key : ExactKeys(record)) {
    if (key == token) return MatchKind::kExact;
  }
  for (const auto& segment : FuzzySegments(record)) {
    if (FuzzyRelated(token, segment)) return MatchKind::kFuzzy;
  }
  return MatchKind::kNone;
}

bool MentionCandidateList::Contains(std::string_view api) const {
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const Candidate& c) { return c.api == api; });
}

ApiCatalog::ApiCatalog(std::vector<ApiRecord> records,
                       Diagnostics* diagnostics) {
  for (auto& record : records) {
    if (record.name.empty()) throw InputError("API record with empty name");
    if (records_.contains(record.name))
      throw InputError("duplicate API name: " + record.name);
    if (record.types.empty() && diagnostics != nullptr)
      diagnostics->Warn(record.name, "API has no types");
    record.Finalize();
    std::string name = record.name;
    records_.emplace(std::move(name), std::move(record));
  }
  if (diagnostics != nullptr) {
    for (const auto& [name, record] : records_) {
      for (const auto& dep : record.dependencies) {
        if (!records_.contains(dep))
          diagnostics->Warn(name, "dangling dependency " + dep);
      }
    }
  }
  BuildIndexes();
}

void ApiCatalog::BuildIndexes() {
  name_index_.clear();
  type_index_.clear();
  for (const auto& [name, record] : records_) {
    for (const auto& key : ExactKeys(record)) name_index_[key].insert(name);
    for (const auto& type : record.types) {
      type_index_[type].insert(name);
      std::string simple = TerminalSegment(type);
      if (simple != type) type_index_[simple].insert(name);
    }
  }
}

const ApiRecord* ApiCatalog::Find(std::string_view name) const {
  auto it = records_.find(name);
  return it == records_.end() ? nullptr : &it->second;
}

std::vector<Candidate> ApiCatalog::Candidates(std::string_view token) const {
  std::vector<Candidate> exact;
  std::vector<Candidate> fuzzy;
  if (token.size() < kMinMatchLength) return {};
  auto hit = name_index_.find(token);
  if (hit != name_index_.end()) {
    for (const auto& name : hit->second) exact.push_back({name, MatchKind::kExact});
  }
  for (const auto& [name, record] : records_) {
    if (hit != name_index_.end() && hit->second.contains(name)) continue;
    if (MatchName(token, record) == MatchKind::kFuzzy)
      fuzzy.push_back({name, MatchKind::kFuzzy});
  }
  // records_ and the index sets are name-ordered already.
  exact.insert(exact.end(), fuzzy.begin(), fuzzy.end());
  return exact;
}

ApiCatalog ParseCatalog(std::string_view manifest_json,
                        Diagnostics* diagnostics) {
  json manifest;
  try {
    manifest = json::parse(manifest_json.empty() ? std::string_view("[]")
                                                 : manifest_json);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("catalog manifest is not valid JSON: ") +
                     e.what());
  }
  if (!manifest.is_array())
    throw InputError("catalog manifest must be a JSON array");
  std::vector<ApiRecord> records;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    const json& item = manifest[i];
    try {
      if (!item.is_object() || !item.contains("name") ||
          !item.at("name").is_string())
        throw InputError("missing string \"name\"");
      ApiRecord record;
      record.name = item.at("name").get<std::string>();
      record.modules = StringList(item, "modules");
      record.packages = StringList(item, "packages");
      for (auto& type : StringList(item, "types")) record.types.insert(type);
      if (item.contains("methods")) {
        for (const auto& [type, names] : item.at("methods").items()) {
          for (const auto& m : names.get<std::vector<std::string>>())
            record.methods[type].insert(m);
        }
      }
      record.dependencies = StringList(item, "dependencies");
      record.aliases = StringList(item, "aliases");
      records.push_back(std::move(record));
    } catch (const json::exception& e) {
      throw InputError("catalog entry " + std::to_string(i) + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError("catalog entry " + std::to_string(i) + ": " + e.what());
    }
  }
  return ApiCatalog(std::move(records), diagnostics);
}

ApiCatalog LoadCatalog(const std::string& path, Diagnostics* diagnostics) {
  return ParseCatalog(ReadFile(path), diagnostics);
}

std::vector<MentionCandidateList> DetectMentions(const Sentence& sentence,
                                                 const ApiCatalog& catalog) {
  std::vector<MentionCandidateList> out;
  if (catalog.empty()) return out;
  for (const auto& token : WordTokens(sentence.text)) {
    std::string lower = ToLower(token.text);
    if (lower.size() < kMinMatchLength || !HasLetter(lower) ||
        MentionStopWords().contains(lower))
      continue;
    std::vector<Candidate> candidates = catalog.Candidates(lower);
    if (CompoundTypeName(token.text)) {
      std::erase_if(candidates, [](const Candidate& c) {
        return c.kind == MatchKind::kFuzzy;
      });
    }
    if (candidates.empty()) continue;
    MentionCandidateList mcl;
    mcl.mention.token = token.text;
    mcl.mention.sentence_id = sentence.id;
    mcl.mention.char_offset = token.offset;
    mcl.mention.kind = candidates.front().kind;
    mcl.mention.container = sentence.container;
    mcl.mention.owner = sentence.owner;
    mcl.mention.block = sentence.block;
    mcl.mention.sentence_index = sentence.index;
    mcl.mention.comment = sentence.comment;
    mcl.candidates = std::move(candidates);
    out.push_back(std::move(mcl));
  }
  return out;
}

std::vector<MentionCandidateList> DetectMentions(
    const std::vector<Sentence>& sentences, const ApiCatalog& catalog) {
  std::vector<MentionCandidateList> out;
  for (const auto& sentence : sentences) {
    auto found = DetectMentions(sentence, catalog);
    out.insert(out.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  return out;
}

std::map<std::string, std::size_t> IncomingEdgeCounts(
    const std::set<std::string>& candidates, const ApiCatalog& catalog) {
  std::map<std::string, std::size_t> incoming;
  for (const auto& name : candidates) incoming[name] = 0;
  for (const auto& name : candidates) {
    const ApiRecord* record = catalog.Find(name);
    if (record == nullptr) continue;
    std::set<std::string> targets(record->dependencies.begin(),
                                  record->dependencies.end());
    for (const auto& dep : targets) {
      if (dep != name && candidates.contains(dep)) ++incoming[dep];
    }
  }
  return incoming;
}

std::set<std::string> DependencyMaxIncoming(
    const std::set<std::string>& candidates, const ApiCatalog& catalog) {
  std::map<std::string, std::size_t> incoming =
      IncomingEdgeCounts(candidates, catalog);
  std::size_t best = 0;
  for (const auto& [name, count] : incoming) best = std::max(best, count);
  std::set<std::string> winners;
  for (const auto& [name, count] : incoming) {
    if (count == best) winners.insert(name);
  }
  return winners;
}

}  // namespace scenmine
