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

#ifndef SCENMINE_LINKER_H_
#define SCENMINE_LINKER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scenmine/catalog.h"
#include "scenmine/corpus.h"
#include "scenmine/snippet.h"

namespace scenmine {

enum class Bucket { kBefore, kAfter, kThread, kNone };
const char* BucketName(Bucket bucket);

enum class LinkMethod { kProximity, kProbabilistic };
const char* LinkMethodName(LinkMethod method);

// Which filters run inside each bucket. Partial mode keeps the type filter
// only; both modes fall back to probabilistic linking.
enum class LinkMode { kFull, kPartial };

struct MentionBuckets {
  std::vector<MentionCandidateList> before;
  std::vector<MentionCandidateList> after;
  std::vector<MentionCandidateList> thread;

  bool empty() const {
    return before.empty() && after.empty() && thread.empty();
  }
};

struct MentionApiTuple {
  Mention mention;
  std::string api;
  MatchKind kind = MatchKind::kExact;
  std::size_t distance = 0;  // rank of the mention by nearness to the snippet

  bool operator==(const MentionApiTuple&) const = default;
};

struct FilterStep {
  std::string filter;  // "type", "method", "dependency"
  std::size_t input = 0;
  std::size_t output = 0;
  double max_score = 0.0;
  bool no_signal = false;  // returned the input unchanged

  bool operator==(const FilterStep&) const = default;
};

struct LinkDecision {
  std::string mention;  // empty for probabilistic links
  std::string api;
  LinkMethod method = LinkMethod::kProximity;
  Bucket bucket = Bucket::kNone;
  std::vector<FilterStep> trace;
  bool tie_break = false;  // >1 tuples survived every filter
  std::size_t coverage = 0;  // probabilistic only

  bool operator==(const LinkDecision&) const = default;
};

// Where a snippet sits inside its thread.
struct SnippetLocation {
  std::string post_id;
  std::size_t block_index = 0;
  bool in_question = false;
};

// `mentions` are all MCLs detected in the thread's title and post text.
MentionBuckets BuildBuckets(const SnippetLocation& location,
                            const Thread& thread,
                            const std::vector<MentionCandidateList>& mentions);

std::vector<MentionApiTuple> MentionApiTuples(
    const std::vector<MentionCandidateList>& bucket, Bucket which);

// Type similarity |T ∩ Types(c)| / |T|; resolved FQNs are matched exactly,
// unresolved simple names against the record's simple names.
double TypeSimilarity(const CodeElements& code, const ApiRecord& api);
// Method similarity |E ∩ Methods(c)| / |E|.
double MethodSimilarity(const CodeElements& code, const ApiRecord& api);

std::vector<MentionApiTuple> TypeFilter(
    const std::vector<MentionApiTuple>& tuples, const CodeElements& code,
    const ApiCatalog& catalog, FilterStep* step = nullptr);
std::vector<MentionApiTuple> MethodFilter(
    const std::vector<MentionApiTuple>& tuples, const CodeElements& code,
    const ApiCatalog& catalog, FilterStep* step = nullptr);
std::vector<MentionApiTuple> DependencyFilter(
    const std::vector<MentionApiTuple>& tuples, const ApiCatalog& catalog,
    FilterStep* step = nullptr);

// Proximity learning over the buckets in order before, after, thread.
std::optional<LinkDecision> Associate(const CodeElements& code,
                                      const MentionBuckets& buckets,
                                      const ApiCatalog& catalog,
                                      LinkMode mode = LinkMode::kFull);

struct LinkedSnippet {
  std::set<std::string> types;
  std::string api;
};

// Coverage of each API: prior snippets linked to it sharing a type with
// `code`. Exposed for testing.
std::map<std::string, std::size_t> ApiCoverage(
    const CodeElements& code, const std::vector<LinkedSnippet>& prior);

std::optional<LinkDecision> ProbabilisticLink(
    const CodeElements& code, const std::vector<LinkedSnippet>& prior);

}  // namespace scenmine

#endif  // SCENMINE_LINKER_H_
