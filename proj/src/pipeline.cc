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

#include "scenmine/pipeline.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "scenmine/snippet.h"

namespace scenmine {
namespace {

struct SnippetWork {
  const Post* post = nullptr;
  std::size_t snippet_index = 0;
  std::size_t block_index = 0;
  std::string code;
  Validity validity;
  CodeElements elements;
  std::optional<LinkDecision> decision;
  TaskDescription description;
  std::vector<Reaction> reactions;
};

struct ThreadWork {
  std::vector<SnippetWork> snippets;
  Diagnostics diagnostics;
};

std::string JoinLines(const std::vector<std::string>& lines) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    out += lines[i];
  }
  return out;
}

// Runs fn(i) for i in [0, n) on up to `workers` threads.
template <typename Fn>
void ParallelFor(std::size_t n, std::size_t workers, Fn fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

ThreadWork ProximityPhase(const Thread& thread, const ApiCatalog& catalog,
                          const Config& config) {
  ThreadWork work;
  std::vector<Sentence> prose;
  prose.push_back(thread.TitleSentence());
  std::vector<const Post*> posts{&thread.question};
  for (const auto& answer : thread.answers) posts.push_back(&answer);
  for (const Post* post : posts) {
    for (const Sentence* s : post->TextSentences()) prose.push_back(*s);
  }
  std::vector<MentionCandidateList> mentions = DetectMentions(prose, catalog);

  std::vector<ParsedSnippet> parsed;
  for (const Post* post : posts) {
    std::size_t ordinal = 0;
    for (const auto& block : post->blocks) {
      if (!block.is_code()) continue;
      ParsedSnippet snippet =
          ParseHybrid(block.code(), config.max_error_line_ratio);
      snippet.post_id = post->id;
      snippet.block_index = block.index;
      parsed.push_back(std::move(snippet));
      SnippetWork item;
      item.post = post;
      item.snippet_index = ordinal++;
      item.block_index = block.index;
      item.code = JoinLines(block.code().lines);
      work.snippets.push_back(std::move(item));
    }
  }
  ThreadTypeContext context = InferVariableTypes(parsed, &work.diagnostics);

  for (std::size_t i = 0; i < parsed.size(); ++i) {
    SnippetWork& item = work.snippets[i];
    item.validity = parsed[i].validity;
    if (!item.validity.valid) continue;
    item.elements = ExtractApiElements(parsed[i], context);
    SnippetLocation location{item.post->id, item.block_index,
                             item.post == &thread.question};
    MentionBuckets buckets = BuildBuckets(location, thread, mentions);
    item.decision = Associate(item.elements, buckets, catalog, config.mode);
  }
  return work;
}

void DescribePhase(const Thread& thread, ThreadWork& work,
                   const ApiCatalog& catalog, const SentimentLexicon& lexicon,
                   const Config& config, const Lexicons& lexicons) {
  // The last linked snippet of each post receives implicit reactions.
  std::map<const Post*, std::size_t> implicit_owner;
  for (std::size_t i = 0; i < work.snippets.size(); ++i) {
    if (work.snippets[i].decision) implicit_owner[work.snippets[i].post] = i;
  }
  for (std::size_t i = 0; i < work.snippets.size(); ++i) {
    SnippetWork& item = work.snippets[i];
    if (!item.decision) continue;
    if (item.post->kind == PostKind::kAnswer) {
      item.description =
          DescribeTask(thread, *item.post, item.block_index, *item.decision,
                       catalog, config.summary, lexicons);
    }
    item.reactions = AssociateReactions(
        *item.decision, item.post->comments, catalog, lexicon,
        lexicons.pronouns, implicit_owner[item.post] == i, config.reactions);
  }
}

}  // namespace

std::string MakeSnippetId(const std::string& thread_id,
                          const std::string& post_id,
                          std::size_t snippet_index) {
  return thread_id + "/" + post_id + "/" + std::to_string(snippet_index);
}

std::string UsageScenario::SnippetId() const {
  return MakeSnippetId(thread_id, post_id, snippet_index);
}

Lexicons LoadLexicons(const Config& config) {
  Lexicons lexicons = Lexicons::Defaults();
  if (!config.stopwords_file.empty())
    lexicons.stop_words = LoadWordList(config.stopwords_file);
  if (!config.pronouns_file.empty())
    lexicons.pronouns = LoadWordList(config.pronouns_file);
  return lexicons;
}

MineResult Mine(const std::vector<Thread>& threads, const ApiCatalog& catalog,
                const SentimentLexicon& lexicon, const Config& config,
                const Lexicons& lexicons, std::size_t workers) {
  std::vector<const Thread*> ordered;
  for (const auto& t : threads) ordered.push_back(&t);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Thread* a, const Thread* b) {
                     return IdLess(a->id, b->id);
                   });

  std::vector<ThreadWork> work(ordered.size());
  ParallelFor(ordered.size(), workers, [&](std::size_t i) {
    work[i] = ProximityPhase(*ordered[i], catalog, config);
  });

  // Barrier: the probabilistic prior is every proximity link in the corpus.
  std::vector<LinkedSnippet> prior;
  for (const auto& w : work) {
    for (const auto& s : w.snippets) {
      if (s.decision) prior.push_back({s.elements.types, s.decision->api});
    }
  }
  MineResult result;
  for (auto& w : work) {
    for (auto& s : w.snippets) {
      if (!s.validity.valid) {
        ++result.stats.invalid;
      } else if (s.decision) {
        ++result.stats.proximity_linked;
      } else if ((s.decision = ProbabilisticLink(s.elements, prior))) {
        ++result.stats.probabilistic_linked;
      } else {
        ++result.stats.undecided;
      }
    }
  }

  ParallelFor(ordered.size(), workers, [&](std::size_t i) {
    DescribePhase(*ordered[i], work[i], catalog, lexicon, config, lexicons);
  });

  result.stats.threads = ordered.size();
  for (std::size_t t = 0; t < ordered.size(); ++t) {
    const Thread& thread = *ordered[t];
    result.diagnostics.Append(work[t].diagnostics);
    for (auto& s : work[t].snippets) {
      ++result.stats.snippets;
      SnippetPrediction prediction;
      prediction.snippet_id =
          MakeSnippetId(thread.id, s.post->id, s.snippet_index);
      if (!s.validity.valid) {
        prediction.status = SnippetStatus::kInvalid;
        prediction.invalid_reason = InvalidReasonName(s.validity.reason);
      } else if (!s.decision) {
        prediction.status = SnippetStatus::kUndecided;
      } else {
        prediction.status = SnippetStatus::kLinked;
        prediction.api = s.decision->api;
        UsageScenario scenario;
        scenario.thread_id = thread.id;
        scenario.post_id = s.post->id;
        scenario.snippet_index = s.snippet_index;
        scenario.block_index = s.block_index;
        scenario.code = s.code;
        scenario.types = s.elements.types;
        scenario.api = *s.decision;
        if (s.post->kind == PostKind::kAnswer) {
          scenario.description = s.description;
          for (const auto& sentence : s.description.problem_summary)
            prediction.summary.push_back(sentence.id);
          for (const auto& sentence : s.description.solution_summary)
            prediction.summary.push_back(sentence.id);
        }
        for (const auto& reaction : s.reactions)
          prediction.reactions.push_back(reaction.sentence.id);
        scenario.reactions = std::move(s.reactions);
        result.scenarios.push_back(std::move(scenario));
      }
      result.predictions.push_back(std::move(prediction));
    }
  }
  auto key_less = [](const std::string& ta, const std::string& pa,
                     std::size_t ka, const std::string& tb,
                     const std::string& pb, std::size_t kb) {
    if (ta != tb) return IdLess(ta, tb);
    if (pa != pb) return IdLess(pa, pb);
    return ka < kb;
  };
  std::stable_sort(result.scenarios.begin(), result.scenarios.end(),
                   [&](const UsageScenario& a, const UsageScenario& b) {
                     return key_less(a.thread_id, a.post_id, a.snippet_index,
                                     b.thread_id, b.post_id, b.snippet_index);
                   });
  return result;
}

}  // namespace scenmine
