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

#include "scenmine/summarizer.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "resources.h"

namespace scenmine {
namespace {

constexpr std::size_t kFallbackWindow = 2;

constexpr std::string_view kNounSuffixes[] = {
    "tion", "ment", "ness", "ity",  "er",   "or",   "ance",
    "ence", "ism",  "ure",  "age",  "ship", "sion"};

bool HasAlnum(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c));
  });
}

bool NounSuffixed(std::string_view word) {
  if (word.size() < 5) return false;
  return std::any_of(std::begin(kNounSuffixes), std::end(kNounSuffixes),
                     [&](std::string_view suffix) {
                       return word.ends_with(suffix);
                     });
}

// Capitalized (not sentence-initial), code-like or noun-suffixed tokens.
WordSet NounHeads(const Sentence& sentence, const WordSet& stop_words) {
  WordSet heads;
  std::vector<Token> tokens = WordTokens(sentence.text);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& word = tokens[i].text;
    if (!HasAlnum(word)) continue;
    std::string lower = ToLower(word);
    bool code = IsCodeLikeToken(word);
    if (!code && stop_words.contains(lower)) continue;
    bool capital = i > 0 && std::isupper(static_cast<unsigned char>(word[0]));
    if (code || capital || NounSuffixed(lower)) heads.insert(lower);
  }
  return heads;
}

struct SentenceSignals {
  bool names_api = false;
  bool names_other = false;
  bool pronoun = false;
};

SentenceSignals Signals(const Sentence& sentence, const LinkDecision& decision,
                        const ApiCatalog& catalog, const Lexicons& lexicons) {
  SentenceSignals signals;
  std::string mention = ToLower(decision.mention);
  for (const auto& mcl : DetectMentions(sentence, catalog)) {
    bool ours = mcl.Contains(decision.api) ||
                (!mention.empty() && ToLower(mcl.mention.token) == mention);
    if (ours) {
      signals.names_api = true;
    } else {
      signals.names_other = true;
    }
  }
  for (const auto& token : WordTokens(sentence.text)) {
    if (lexicons.pronouns.contains(ToLower(token.text))) signals.pronoun = true;
  }
  return signals;
}

bool Intersects(const WordSet& a, const WordSet& b) {
  return std::any_of(a.begin(), a.end(),
                     [&](const std::string& w) { return b.contains(w); });
}

}  // namespace

Lexicons Lexicons::Defaults() {
  return {ParseWordList(DefaultStopWordsText()),
          ParseWordList(DefaultPronounsText())};
}

Selection SelectRelevant(const std::vector<Sentence>& post_sentences,
                         const LinkDecision& decision,
                         std::optional<std::size_t> snippet_block,
                         const ApiCatalog& catalog, const Lexicons& lexicons) {
  Selection selection;
  std::vector<SentenceSignals> signals;
  signals.reserve(post_sentences.size());
  for (const auto& s : post_sentences)
    signals.push_back(Signals(s, decision, catalog, lexicons));

  std::size_t start = post_sentences.size();
  for (std::size_t i = 0; i < post_sentences.size(); ++i) {
    if (signals[i].names_api) {
      start = i;
      break;
    }
  }

  if (start == post_sentences.size()) {
    selection.low_confidence = true;
    if (!snippet_block) return selection;
    std::vector<std::size_t> before;
    std::vector<std::size_t> after;
    for (std::size_t i = 0; i < post_sentences.size(); ++i) {
      if (post_sentences[i].block < *snippet_block) before.push_back(i);
      if (post_sentences[i].block > *snippet_block) after.push_back(i);
    }
    std::size_t skip = before.size() > kFallbackWindow
                           ? before.size() - kFallbackWindow
                           : 0;
    for (std::size_t k = skip; k < before.size(); ++k)
      selection.sentences.push_back(post_sentences[before[k]]);
    for (std::size_t k = 0; k < after.size() && k < kFallbackWindow; ++k)
      selection.sentences.push_back(post_sentences[after[k]]);
    return selection;
  }

  bool before_text =
      snippet_block && post_sentences[start].block < *snippet_block;
  WordSet heads = NounHeads(post_sentences[start], lexicons.stop_words);
  selection.sentences.push_back(post_sentences[start]);
  for (std::size_t i = start + 1; i < post_sentences.size(); ++i) {
    const Sentence& next = post_sentences[i];
    if (before_text && next.block > *snippet_block) break;
    if (signals[i].names_other) break;
    WordSet next_heads = NounHeads(next, lexicons.stop_words);
    bool accept = signals[i].names_api || signals[i].pronoun ||
                  Intersects(heads, next_heads);
    if (!accept) break;
    heads.insert(next_heads.begin(), next_heads.end());
    selection.sentences.push_back(next);
  }
  return selection;
}

std::map<std::string, double> TermVector(const std::string& text,
                                         const WordSet& stop_words) {
  std::map<std::string, double> vector;
  for (const auto& token : WordTokens(text)) {
    if (!HasAlnum(token.text)) continue;
    std::string lower = ToLower(token.text);
    if (!IsCodeLikeToken(token.text) && stop_words.contains(lower)) continue;
    vector[lower] += 1.0;
  }
  return vector;
}

double CosineSimilarity(const std::map<std::string, double>& a,
                        const std::map<std::string, double>& b) {
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (const auto& [term, value] : a) {
    na += value * value;
    auto it = b.find(term);
    if (it != b.end()) dot += value * it->second;
  }
  for (const auto& [term, value] : b) nb += value * value;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

TextGraph BuildTextGraph(const std::vector<Sentence>& sentences,
                         const WordSet& stop_words, double edge_threshold) {
  TextGraph graph;
  graph.nodes = sentences;
  std::vector<std::map<std::string, double>> vectors;
  vectors.reserve(sentences.size());
  for (const auto& s : sentences) vectors.push_back(TermVector(s.text, stop_words));
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    for (std::size_t j = i + 1; j < sentences.size(); ++j) {
      double sim = CosineSimilarity(vectors[i], vectors[j]);
      if (sim > edge_threshold) graph.edges.push_back({i, j, sim});
    }
  }
  return graph;
}

RankResult RankNodes(const TextGraph& graph, double damping, double tolerance,
                     std::size_t max_iterations) {
  const std::size_t n = graph.nodes.size();
  RankResult result;
  result.weights.assign(n, 1.0);
  std::vector<double> out_sum(n, 0.0);
  std::vector<std::vector<std::pair<std::size_t, double>>> neighbours(n);
  for (const auto& e : graph.edges) {
    out_sum[e.from] += e.weight;
    out_sum[e.to] += e.weight;
    neighbours[e.from].push_back({e.to, e.weight});
    neighbours[e.to].push_back({e.from, e.weight});
  }
  std::vector<double> next(n);
  while (result.iterations < max_iterations) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (const auto& [j, w] : neighbours[i])
        sum += w / out_sum[j] * result.weights[j];
      next[i] = (1.0 - damping) + damping * sum;
      change = std::max(change, std::abs(next[i] - result.weights[i]));
    }
    result.weights.swap(next);
    ++result.iterations;
    if (change < tolerance) {
      result.converged = true;
      break;
    }
  }
  return result;
}

std::vector<Sentence> ProduceSummary(const TextGraph& graph,
                                     const std::vector<double>& weights,
                                     std::size_t top_n) {
  std::vector<std::size_t> order(graph.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return weights[a] > weights[b];
                   });
  if (order.size() > top_n) order.resize(top_n);
  std::sort(order.begin(), order.end());
  std::vector<Sentence> summary;
  for (std::size_t i : order) summary.push_back(graph.nodes[i]);
  return summary;
}

std::vector<Sentence> SummarizePart(const std::vector<Sentence>& relevant,
                                    const SummaryOptions& options,
                                    const Lexicons& lexicons) {
  if (relevant.empty()) return {};
  TextGraph graph =
      BuildTextGraph(relevant, lexicons.stop_words, options.edge_threshold);
  RankResult rank = RankNodes(graph, options.damping, options.tolerance,
                              options.max_iterations);
  return ProduceSummary(graph, rank.weights, options.top_n);
}

TaskDescription DescribeTask(const Thread& thread, const Post& answer,
                             std::size_t snippet_block,
                             const LinkDecision& decision,
                             const ApiCatalog& catalog,
                             const SummaryOptions& options,
                             const Lexicons& lexicons) {
  auto copy = [](const std::vector<const Sentence*>& refs) {
    std::vector<Sentence> out;
    out.reserve(refs.size());
    for (const Sentence* s : refs) out.push_back(*s);
    return out;
  };
  TaskDescription description;
  description.title = thread.title;
  Selection problem = SelectRelevant(copy(thread.question.TextSentences()),
                                     decision, std::nullopt, catalog, lexicons);
  Selection solution = SelectRelevant(copy(answer.TextSentences()), decision,
                                      snippet_block, catalog, lexicons);
  description.problem_summary =
      SummarizePart(problem.sentences, options, lexicons);
  description.solution_summary =
      SummarizePart(solution.sentences, options, lexicons);
  description.problem_low_confidence = problem.low_confidence;
  description.solution_low_confidence = solution.low_confidence;
  return description;
}

}  // namespace scenmine
