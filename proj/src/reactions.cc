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

#include "scenmine/reactions.h"

#include <algorithm>

namespace scenmine {
namespace {

bool HasPronoun(const Sentence& sentence, const WordSet& pronouns) {
  auto tokens = WordTokens(sentence.text);
  return std::any_of(tokens.begin(), tokens.end(), [&](const Token& t) {
    return pronouns.contains(ToLower(t.text));
  });
}

bool NamesForeignApi(const std::vector<Sentence>& sentences,
                     std::size_t count, const std::string& api,
                     const ApiCatalog& catalog) {
  for (std::size_t i = 0; i < count && i < sentences.size(); ++i) {
    for (const auto& mcl : DetectMentions(sentences[i], catalog)) {
      if (!mcl.Contains(api)) return true;
    }
  }
  return false;
}

}  // namespace

const char* ReferenceBasisName(ReferenceBasis basis) {
  switch (basis) {
    case ReferenceBasis::kExplicitName:
      return "explicit_name";
    case ReferenceBasis::kPronoun:
      return "pronoun";
    case ReferenceBasis::kImplicit:
      return "implicit";
  }
  return "implicit";
}

std::optional<Reference> ResolveReference(const Sentence& sentence,
                                          const std::vector<Comment>& comments,
                                          const ApiCatalog& catalog,
                                          const WordSet& pronouns) {
  auto own = DetectMentions(sentence, catalog);
  if (!own.empty()) return Reference{ReferenceBasis::kExplicitName, own.front()};
  if (!HasPronoun(sentence, pronouns)) return std::nullopt;

  // The latest mention in the comment stream before this sentence.
  std::optional<MentionCandidateList> latest;
  for (const auto& comment : comments) {
    for (const auto& s : comment.sentences) {
      if (s.id == sentence.id) {
        if (!latest) return std::nullopt;
        return Reference{ReferenceBasis::kPronoun, *latest};
      }
      auto found = DetectMentions(s, catalog);
      if (!found.empty()) latest = found.back();
    }
  }
  return std::nullopt;
}

std::vector<Reaction> AssociateReactions(const LinkDecision& decision,
                                         const std::vector<Comment>& comments,
                                         const ApiCatalog& catalog,
                                         const SentimentLexicon& lexicon,
                                         const WordSet& pronouns,
                                         bool implicit_owner,
                                         const ReactionOptions& options) {
  std::vector<Reaction> reactions;
  for (std::size_t c = 0; c < comments.size(); ++c) {
    const Comment& comment = comments[c];
    for (std::size_t s = 0; s < comment.sentences.size(); ++s) {
      const Sentence& sentence = comment.sentences[s];
      PolarityResult polarity =
          ClassifySentence(sentence.text, lexicon, options.negation_window);
      if (polarity.label == Polarity::kNeutral) continue;
      // Opinions about a competing API stay with that API.
      if (NamesForeignApi({sentence}, 1, decision.api, catalog)) continue;

      Reaction reaction{sentence, comment.order, polarity.label,
                        ReferenceBasis::kImplicit};
      if (auto reference =
              ResolveReference(sentence, comments, catalog, pronouns)) {
        if (!reference->RefersTo(decision.api)) continue;
        reaction.basis = reference->basis;
        reactions.push_back(std::move(reaction));
        continue;
      }
      if (!implicit_owner) continue;
      bool foreign = NamesForeignApi(comment.sentences, s, decision.api, catalog);
      std::size_t first = c > options.implicit_lookback
                              ? c - options.implicit_lookback
                              : 0;
      for (std::size_t p = first; p < c && !foreign; ++p) {
        foreign = NamesForeignApi(comments[p].sentences,
                                  comments[p].sentences.size(), decision.api,
                                  catalog);
      }
      if (!foreign) reactions.push_back(std::move(reaction));
    }
  }
  return reactions;
}

}  // namespace scenmine
