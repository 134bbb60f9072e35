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

#include "scenmine/linker.h"

#include <algorithm>
#include <tuple>

namespace scenmine {
namespace {

bool InQuestionText(const Mention& m, const Thread& thread) {
  return m.container == SentenceContainer::kPostBlock &&
         m.owner == thread.question.id;
}

bool TextualLess(const MentionCandidateList& a, const MentionCandidateList& b) {
  auto key = [](const MentionCandidateList& m) {
    int container = m.mention.container == SentenceContainer::kTitle ? 0 : 1;
    return std::make_tuple(container, m.mention.block, m.mention.sentence_index,
                           m.mention.char_offset);
  };
  return key(a) < key(b);
}

template <typename Score>
std::vector<MentionApiTuple> KeepMaximizers(
    const std::vector<MentionApiTuple>& tuples, const char* name,
    Score score, FilterStep* step) {
  FilterStep local;
  local.filter = name;
  local.input = tuples.size();
  std::vector<double> scores;
  scores.reserve(tuples.size());
  double best = 0.0;
  for (const auto& t : tuples) {
    scores.push_back(score(t));
    best = std::max(best, scores.back());
  }
  local.max_score = best;
  std::vector<MentionApiTuple> out;
  if (best == 0.0) {
    local.no_signal = true;
    out = tuples;
  } else {
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (scores[i] == best) out.push_back(tuples[i]);
    }
  }
  local.output = out.size();
  if (step != nullptr) *step = local;
  return out;
}

}  // namespace

const char* BucketName(Bucket bucket) {
  switch (bucket) {
    case Bucket::kBefore:
      return "before";
    case Bucket::kAfter:
      return "after";
    case Bucket::kThread:
      return "thread";
    case Bucket::kNone:
      return "none";
  }
  return "none";
}

const char* LinkMethodName(LinkMethod method) {
  return method == LinkMethod::kProximity ? "proximity" : "probabilistic";
}

MentionBuckets BuildBuckets(const SnippetLocation& location,
                            const Thread& thread,
                            const std::vector<MentionCandidateList>& mentions) {
  MentionBuckets buckets;
  for (const auto& mcl : mentions) {
    const Mention& m = mcl.mention;
    if (m.container == SentenceContainer::kComment) continue;
    if (m.container == SentenceContainer::kPostBlock &&
        m.owner == location.post_id) {
      if (m.block < location.block_index) {
        buckets.before.push_back(mcl);
      } else if (m.block > location.block_index) {
        buckets.after.push_back(mcl);
      }
      continue;
    }
    if (m.container == SentenceContainer::kTitle && m.owner == thread.id) {
      buckets.thread.push_back(mcl);
    } else if (!location.in_question && InQuestionText(m, thread)) {
      buckets.thread.push_back(mcl);
    }
  }
  std::stable_sort(buckets.before.begin(), buckets.before.end(), TextualLess);
  std::stable_sort(buckets.after.begin(), buckets.after.end(), TextualLess);
  std::stable_sort(buckets.thread.begin(), buckets.thread.end(), TextualLess);
  return buckets;
}

std::vector<MentionApiTuple> MentionApiTuples(
    const std::vector<MentionCandidateList>& bucket, Bucket which) {
  std::vector<MentionApiTuple> tuples;
  for (std::size_t i = 0; i < bucket.size(); ++i) {
    // Mentions before a snippet are nearest when they come last.
    std::size_t distance = which == Bucket::kBefore ? bucket.size() - 1 - i : i;
    for (const auto& candidate : bucket[i].candidates) {
      tuples.push_back(
          {bucket[i].mention, candidate.api, candidate.kind, distance});
    }
  }
  return tuples;
}

double TypeSimilarity(const CodeElements& code, const ApiRecord& api) {
  if (code.types.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto& type : code.types) {
    auto fqn = code.imports.find(type);
    bool hit;
    if (fqn != code.imports.end()) {
      hit = api.HasType(fqn->second) || api.HasType(type);
    } else {
      hit = api.HasSimpleType(type);
    }
    if (hit) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(code.types.size());
}

double MethodSimilarity(const CodeElements& code, const ApiRecord& api) {
  if (code.methods.empty()) return 0.0;
  const auto& methods = api.AllMethods();
  std::size_t hits = static_cast<std::size_t>(
      std::count_if(code.methods.begin(), code.methods.end(),
                    [&](const std::string& m) { return methods.contains(m); }));
  return static_cast<double>(hits) / static_cast<double>(code.methods.size());
}

std::vector<MentionApiTuple> TypeFilter(
    const std::vector<MentionApiTuple>& tuples, const CodeElements& code,
    const ApiCatalog& catalog, FilterStep* step) {
  return KeepMaximizers(
      tuples, "type",
      [&](const MentionApiTuple& t) {
        const ApiRecord* record = catalog.Find(t.api);
        return record == nullptr ? 0.0 : TypeSimilarity(code, *record);
      },
      step);
}

std::vector<MentionApiTuple> MethodFilter(
    const std::vector<MentionApiTuple>& tuples, const CodeElements& code,
    const ApiCatalog& catalog, FilterStep* step) {
  return KeepMaximizers(
      tuples, "method",
      [&](const MentionApiTuple& t) {
        const ApiRecord* record = catalog.Find(t.api);
        return record == nullptr ? 0.0 : MethodSimilarity(code, *record);
      },
      step);
}

std::vector<MentionApiTuple> DependencyFilter(
    const std::vector<MentionApiTuple>& tuples, const ApiCatalog& catalog,
    FilterStep* step) {
  std::set<std::string> apis;
  for (const auto& t : tuples) apis.insert(t.api);
  std::map<std::string, std::size_t> incoming =
      IncomingEdgeCounts(apis, catalog);
  return KeepMaximizers(
      tuples, "dependency",
      [&](const MentionApiTuple& t) {
        return apis.size() < 2 ? 0.0 : static_cast<double>(incoming[t.api]);
      },
      step);
}

std::optional<LinkDecision> Associate(const CodeElements& code,
                                      const MentionBuckets& buckets,
                                      const ApiCatalog& catalog,
                                      LinkMode mode) {
  const std::vector<std::pair<Bucket, const std::vector<MentionCandidateList>*>>
      order = {{Bucket::kBefore, &buckets.before},
               {Bucket::kAfter, &buckets.after},
               {Bucket::kThread, &buckets.thread}};
  for (const auto& [which, bucket] : order) {
    std::vector<MentionApiTuple> hits = MentionApiTuples(*bucket, which);
    if (hits.empty()) continue;
    LinkDecision decision;
    decision.method = LinkMethod::kProximity;
    decision.bucket = which;

    auto decide = [&](const MentionApiTuple& t) {
      decision.mention = t.mention.token;
      decision.api = t.api;
      return decision;
    };
    if (hits.size() == 1) return decide(hits.front());

    FilterStep step;
    hits = TypeFilter(hits, code, catalog, &step);
    decision.trace.push_back(step);
    if (hits.size() == 1) return decide(hits.front());
    if (mode == LinkMode::kFull) {
      hits = MethodFilter(hits, code, catalog, &step);
      decision.trace.push_back(step);
      if (hits.size() == 1) return decide(hits.front());
      hits = DependencyFilter(hits, catalog, &step);
      decision.trace.push_back(step);
      if (hits.size() == 1) return decide(hits.front());
    }
    decision.tie_break = true;
    auto best = std::min_element(
        hits.begin(), hits.end(),
        [](const MentionApiTuple& a, const MentionApiTuple& b) {
          int ka = a.kind == MatchKind::kExact ? 0 : 1;
          int kb = b.kind == MatchKind::kExact ? 0 : 1;
          return std::tie(a.distance, ka, a.api) <
                 std::tie(b.distance, kb, b.api);
        });
    return decide(*best);
  }
  return std::nullopt;
}

std::map<std::string, std::size_t> ApiCoverage(
    const CodeElements& code, const std::vector<LinkedSnippet>& prior) {
  std::map<std::string, std::size_t> coverage;
  for (const auto& linked : prior) {
    std::size_t& count = coverage[linked.api];
    bool shares = std::any_of(
        linked.types.begin(), linked.types.end(),
        [&](const std::string& t) { return code.types.contains(t); });
    if (shares) ++count;
  }
  return coverage;
}

std::optional<LinkDecision> ProbabilisticLink(
    const CodeElements& code, const std::vector<LinkedSnippet>& prior) {
  std::map<std::string, std::size_t> coverage = ApiCoverage(code, prior);
  const std::string* best = nullptr;
  std::size_t best_count = 0;
  for (const auto& [api, count] : coverage) {
    if (count > best_count) {
      best = &api;
      best_count = count;
    }
  }
  if (best == nullptr) return std::nullopt;
  LinkDecision decision;
  decision.api = *best;
  decision.method = LinkMethod::kProbabilistic;
  decision.bucket = Bucket::kNone;
  decision.coverage = best_count;
  return decision;
}

}  // namespace scenmine
