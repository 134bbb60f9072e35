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

#ifndef SCENMINE_OPINION_H_
#define SCENMINE_OPINION_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scenmine/text.h"

namespace scenmine {

enum class Polarity { kPositive, kNegative, kNeutral };
const char* PolarityName(Polarity polarity);

// Sentiment words (adjectives) with orientation +1/-1, plus negators.
struct SentimentLexicon {
  std::map<std::string, int, std::less<>> entries;
  WordSet negation_words;

  static WordSet DefaultNegations();
};

struct PolarityResult {
  Polarity label = Polarity::kNeutral;
  int score = 0;
  std::vector<std::pair<std::string, int>> matched;  // word, orientation
};

// TSV `word<TAB>+1|-1`; '#' comment lines. Throws InputError on conflicting
// duplicates or malformed lines. Negations default to DefaultNegations().
SentimentLexicon ParseLexicon(std::string_view tsv);
SentimentLexicon LoadLexicon(const std::string& path);
SentimentLexicon LoadLexicon(const std::string& path,
                             const std::string& negations_path);
// The seed lexicon shipped with the library.
const SentimentLexicon& DefaultLexicon();

// Sum of orientations; a negator among the `negation_window` preceding
// tokens flips the sign of a match once.
PolarityResult ClassifySentence(std::string_view sentence,
                                const SentimentLexicon& lexicon,
                                std::size_t negation_window = 3);

}  // namespace scenmine

#endif  // SCENMINE_OPINION_H_
