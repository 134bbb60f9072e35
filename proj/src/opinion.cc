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

#include "scenmine/opinion.h"

#include <sstream>

#include "resources.h"
#include "scenmine/diagnostics.h"

namespace scenmine {
namespace {

void CheckDisjoint(const SentimentLexicon& lexicon) {
  for (const auto& word : lexicon.negation_words) {
    if (lexicon.entries.contains(word))
      throw InputError("lexicon word is also a negation word: " + word);
  }
}

}  // namespace

const char* PolarityName(Polarity polarity) {
  switch (polarity) {
    case Polarity::kPositive:
      return "positive";
    case Polarity::kNegative:
      return "negative";
    case Polarity::kNeutral:
      return "neutral";
  }
  return "neutral";
}

WordSet SentimentLexicon::DefaultNegations() {
  return ParseWordList(DefaultNegationsText());
}

SentimentLexicon ParseLexicon(std::string_view tsv) {
  SentimentLexicon lexicon;
  lexicon.negation_words = SentimentLexicon::DefaultNegations();
  std::istringstream in{std::string(tsv)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::size_t split = trimmed.find('\t');
    if (split == std::string_view::npos) split = trimmed.find_last_of(" ");
    if (split == std::string_view::npos)
      throw InputError("lexicon line " + std::to_string(number) +
                       ": expected word<TAB>+1|-1");
    std::string word = ToLower(Trim(trimmed.substr(0, split)));
    std::string_view value = Trim(trimmed.substr(split + 1));
    int polarity;
    if (value == "+1" || value == "1") {
      polarity = 1;
    } else if (value == "-1") {
      polarity = -1;
    } else {
      throw InputError("lexicon line " + std::to_string(number) +
                       ": bad polarity '" + std::string(value) + "'");
    }
    if (word.empty())
      throw InputError("lexicon line " + std::to_string(number) +
                       ": empty word");
    auto [it, inserted] = lexicon.entries.emplace(word, polarity);
    if (!inserted && it->second != polarity)
      throw InputError("conflicting polarity for lexicon word: " + word);
  }
  CheckDisjoint(lexicon);
  return lexicon;
}

SentimentLexicon LoadLexicon(const std::string& path) {
  return ParseLexicon(ReadFile(path));
}

SentimentLexicon LoadLexicon(const std::string& path,
                             const std::string& negations_path) {
  SentimentLexicon lexicon = LoadLexicon(path);
  lexicon.negation_words = LoadWordList(negations_path);
  CheckDisjoint(lexicon);
  return lexicon;
}

const SentimentLexicon& DefaultLexicon() {
  static const SentimentLexicon lexicon = ParseLexicon(DefaultLexiconText());
  return lexicon;
}

PolarityResult ClassifySentence(std::string_view sentence,
                                const SentimentLexicon& lexicon,
                                std::size_t negation_window) {
  PolarityResult result;
  std::vector<std::string> tokens = SentimentTokens(sentence);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto entry = lexicon.entries.find(tokens[i]);
    if (entry == lexicon.entries.end()) continue;
    int orientation = entry->second;
    for (std::size_t back = 1; back <= negation_window && back <= i; ++back) {
      if (lexicon.negation_words.contains(tokens[i - back])) {
        orientation = -orientation;
        break;
      }
    }
    result.score += orientation;
    result.matched.emplace_back(tokens[i], orientation);
  }
  if (result.score > 0) {
    result.label = Polarity::kPositive;
  } else if (result.score < 0) {
    result.label = Polarity::kNegative;
  }
  return result;
}

}  // namespace scenmine
