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

#ifndef SCENMINE_CATALOG_H_
#define SCENMINE_CATALOG_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scenmine/corpus.h"
#include "scenmine/diagnostics.h"
#include "scenmine/text.h"

namespace scenmine {

// One API of the database: name, modules, packages, code elements and the
// APIs it depends on.
struct ApiRecord {
  std::string name;
  std::vector<std::string> modules;
  std::vector<std::string> packages;
  std::set<std::string> types;  // simple and fully-qualified names
  std::map<std::string, std::set<std::string>> methods;  // type -> methods
  std::vector<std::string> dependencies;
  std::vector<std::string> aliases;

  // Simple names of `types` (terminal segment of qualified names).
  bool HasSimpleType(std::string_view simple) const;
  bool HasType(std::string_view name) const;
  // True when some qualified type ends in ".<simple>".
  bool HasQualifiedTypeFor(std::string_view simple) const;
  // Union of method names across all types.
  const std::set<std::string>& AllMethods() const { return all_methods_; }

  // Recomputes derived lookup sets; called by ApiCatalog.
  void Finalize();

  bool operator==(const ApiRecord& other) const {
    return name == other.name && modules == other.modules &&
           packages == other.packages && types == other.types &&
           methods == other.methods && dependencies == other.dependencies &&
           aliases == other.aliases;
  }

 private:
  std::set<std::string, std::less<>> simple_types_;
  std::set<std::string, std::less<>> qualified_simple_;
  std::set<std::string> all_methods_;
};

enum class MatchKind { kNone, kExact, kFuzzy };

const char* MatchKindName(MatchKind kind);

// `token` must already be lowercased and punctuation-trimmed.
MatchKind MatchName(std::string_view token, const ApiRecord& record);

struct Mention {
  std::string token;  // as written in the sentence
  std::string sentence_id;
  std::size_t char_offset = 0;
  MatchKind kind = MatchKind::kExact;  // best match among candidates
  // Provenance copied from the sentence.
  SentenceContainer container = SentenceContainer::kPostBlock;
  std::string owner;
  std::size_t block = 0;
  std::size_t sentence_index = 0;
  std::size_t comment = 0;

  bool operator==(const Mention&) const = default;
};

struct Candidate {
  std::string api;
  MatchKind kind = MatchKind::kExact;

  bool operator==(const Candidate&) const = default;
};

struct MentionCandidateList {
  Mention mention;
  std::vector<Candidate> candidates;  // exact first, then by name

  bool Contains(std::string_view api) const;
  bool operator==(const MentionCandidateList&) const = default;
};

class ApiCatalog {
 public:
  ApiCatalog() = default;
  // Throws InputError on duplicate names. Warnings go to `diagnostics`.
  explicit ApiCatalog(std::vector<ApiRecord> records,
                      Diagnostics* diagnostics = nullptr);

  const ApiRecord* Find(std::string_view name) const;
  bool Contains(std::string_view name) const { return Find(name) != nullptr; }
  const std::map<std::string, ApiRecord, std::less<>>& records() const {
    return records_;
  }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  // lowercase token -> record names (names, modules, aliases, segments)
  const std::map<std::string, std::set<std::string>, std::less<>>&
  name_index() const {
    return name_index_;
  }
  // type name (simple and qualified) -> record names
  const std::map<std::string, std::set<std::string>, std::less<>>&
  type_index() const {
    return type_index_;
  }

  // All records matching a lowercase token, exact first then by name.
  std::vector<Candidate> Candidates(std::string_view token) const;

 private:
  void BuildIndexes();

  std::map<std::string, ApiRecord, std::less<>> records_;
  std::map<std::string, std::set<std::string>, std::less<>> name_index_;
  std::map<std::string, std::set<std::string>, std::less<>> type_index_;
};

ApiCatalog ParseCatalog(std::string_view manifest_json,
                        Diagnostics* diagnostics = nullptr);
ApiCatalog LoadCatalog(const std::string& path,
                       Diagnostics* diagnostics = nullptr);

// Mentions of catalog APIs in `sentences`, in document order.
std::vector<MentionCandidateList> DetectMentions(
    const std::vector<Sentence>& sentences, const ApiCatalog& catalog);
std::vector<MentionCandidateList> DetectMentions(const Sentence& sentence,
                                                 const ApiCatalog& catalog);

// Candidates with the most incoming dependency edges, counting only edges
// between members of `candidates`. Ties return every maximizer.
std::set<std::string> DependencyMaxIncoming(
    const std::set<std::string>& candidates, const ApiCatalog& catalog);

// Incoming edge count per candidate within the candidate-induced subgraph.
std::map<std::string, std::size_t> IncomingEdgeCounts(
    const std::set<std::string>& candidates, const ApiCatalog& catalog);

}  // namespace scenmine

#endif  // SCENMINE_CATALOG_H_
