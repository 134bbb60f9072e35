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

#ifndef SCENMINE_REACTIONS_H_
#define SCENMINE_REACTIONS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scenmine/catalog.h"
#include "scenmine/corpus.h"
#include "scenmine/linker.h"
#include "scenmine/opinion.h"

namespace scenmine {

enum class ReferenceBasis { kExplicitName, kPronoun, kImplicit };
const char* ReferenceBasisName(ReferenceBasis basis);

struct Reaction {
  Sentence sentence;
  std::size_t comment_order = 0;
  Polarity polarity = Polarity::kPositive;
  ReferenceBasis basis = ReferenceBasis::kImplicit;
};

// The API mention a comment sentence refers to.
struct Reference {
  ReferenceBasis basis = ReferenceBasis::kExplicitName;
  MentionCandidateList mention;

  const std::string& api() const { return mention.candidates.front().api; }
  bool RefersTo(const std::string& api_name) const {
    return mention.Contains(api_name);
  }
};

struct ReactionOptions {
  std::size_t negation_window = 3;
  std::size_t implicit_lookback = 2;
};

// `comments` are the post's comments in posting order; the sentence must be
// one of them. Only comment text up to the sentence is consulted.
std::optional<Reference> ResolveReference(const Sentence& sentence,
                                          const std::vector<Comment>& comments,
                                          const ApiCatalog& catalog,
                                          const WordSet& pronouns);

// `implicit_owner` marks the snippet that receives reactions without any
// reference (the post's last snippet).
std::vector<Reaction> AssociateReactions(const LinkDecision& decision,
                                         const std::vector<Comment>& comments,
                                         const ApiCatalog& catalog,
                                         const SentimentLexicon& lexicon,
                                         const WordSet& pronouns,
                                         bool implicit_owner = true,
                                         const ReactionOptions& options = {});

}  // namespace scenmine

#endif  // SCENMINE_REACTIONS_H_
