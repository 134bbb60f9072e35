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

#ifndef SCENMINE_SUMMARIZER_H_
#define SCENMINE_SUMMARIZER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "scenmine/catalog.h"
#include "scenmine/corpus.h"
#include "scenmine/linker.h"
#include "scenmine/text.h"

namespace scenmine {

struct SummaryOptions {
  double damping = 0.85;
  double tolerance = 1e-6;
  std::size_t max_iterations = 100;
  double edge_threshold = 0.05;
  std::size_t top_n = 3;
  std::size_t beam_width = 1;
};

struct RelevantTexts {
  std::string title;
  std::vector<Sentence> problem_sentences;
  std::vector<Sentence> solution_sentences;
};

struct Selection {
  std::vector<Sentence> sentences;  // document order
  bool low_confidence = false;
};

// Word lists shared by selection, graph building and reaction linking.
struct Lexicons {
  WordSet stop_words;
  WordSet pronouns;

  static Lexicons Defaults();
};

// `post_sentences` are the post's text sentences in document order.
// `snippet_block` is the code block the description is for, or nullopt when
// selecting from a post that does not contain the snippet.
Selection SelectRelevant(const std::vector<Sentence>& post_sentences,
                         const LinkDecision& decision,
                         std::optional<std::size_t> snippet_block,
                         const ApiCatalog& catalog, const Lexicons& lexicons);

struct Edge {
  std::size_t from = 0;  // from < to
  std::size_t to = 0;
  double weight = 0.0;

  bool operator==(const Edge&) const = default;
};

struct TextGraph {
  std::vector<Sentence> nodes;
  std::vector<Edge> edges;
};

// Lowercased unigram term frequencies with stop words removed.
std::map<std::string, double> TermVector(const std::string& text,
                                         const WordSet& stop_words);
double CosineSimilarity(const std::map<std::string, double>& a,
                        const std::map<std::string, double>& b);

TextGraph BuildTextGraph(const std::vector<Sentence>& sentences,
                         const WordSet& stop_words,
                         double edge_threshold = 0.05);

struct RankResult {
  std::vector<double> weights;  // one per node
  std::size_t iterations = 0;
  bool converged = false;
};

// Weighted TextRank:
//   WS(i) = (1 - d) + d * sum_j [w_ji / sum_k w_jk] * WS(j)
// iterated from 1.0 until the largest per-node change is below `tolerance`.
RankResult RankNodes(const TextGraph& graph, double damping = 0.85,
                     double tolerance = 1e-6,
                     std::size_t max_iterations = 100);

// Top `top_n` nodes by weight (ties favour the earlier node), returned in
// original order.
std::vector<Sentence> ProduceSummary(const TextGraph& graph,
                                     const std::vector<double>& weights,
                                     std::size_t top_n);

struct TaskDescription {
  std::string title;
  std::vector<Sentence> problem_summary;
  std::vector<Sentence> solution_summary;
  bool problem_low_confidence = false;
  bool solution_low_confidence = false;
};

// Summarizes the relevant sentences of one part (selection, graph, rank,
// top-n). Empty input yields an empty summary.
std::vector<Sentence> SummarizePart(const std::vector<Sentence>& relevant,
                                    const SummaryOptions& options,
                                    const Lexicons& lexicons);

// The snippet must sit in one of the thread's answers.
TaskDescription DescribeTask(const Thread& thread, const Post& answer,
                             std::size_t snippet_block,
                             const LinkDecision& decision,
                             const ApiCatalog& catalog,
                             const SummaryOptions& options,
                             const Lexicons& lexicons);

}  // namespace scenmine

#endif  // SCENMINE_SUMMARIZER_H_
