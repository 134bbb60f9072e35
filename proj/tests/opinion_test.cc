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

#include <gtest/gtest.h>

#include <random>

#include "scenmine/diagnostics.h"

namespace scenmine {
namespace {

SentimentLexicon Lexicon() {
  return ParseLexicon("good\t+1\nbuggy\t-1\nflawless\t+1\nslow -1\n");
}

TEST(ParseLexicon, ReadsEntries) {
  SentimentLexicon lex = Lexicon();
  EXPECT_EQ(lex.entries.size(), 4u);
  EXPECT_EQ(lex.entries.at("good"), 1);
  EXPECT_EQ(lex.entries.at("slow"), -1);
  EXPECT_EQ(lex.negation_words, SentimentLexicon::DefaultNegations());
}

TEST(ParseLexicon, ThreeEntryRoundTrip) {
  SentimentLexicon lex = ParseLexicon("# header\nfast\t1\nugly\t-1\nneat\t+1\n");
  EXPECT_EQ(lex.entries.size(), 3u);
}

TEST(ParseLexicon, ConflictingPolarityNamesWord) {
  try {
    ParseLexicon("good\t+1\ngood\t-1\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("good"), std::string::npos);
  }
}

TEST(ParseLexicon, RepeatedAgreeingEntryIsAccepted) {
  EXPECT_EQ(ParseLexicon("good\t+1\ngood\t+1\n").entries.size(), 1u);
}

TEST(ParseLexicon, RejectsNegationWordsAndBadValues) {
  EXPECT_THROW(ParseLexicon("not\t-1\n"), InputError);
  EXPECT_THROW(ParseLexicon("good\t2\n"), InputError);
}

TEST(DefaultLexicon, EntriesAndNegationsAreDisjoint) {
  const SentimentLexicon& lex = DefaultLexicon();
  EXPECT_GT(lex.entries.size(), 150u);
  for (const auto& w : lex.negation_words) EXPECT_FALSE(lex.entries.contains(w));
  for (const auto& [w, o] : lex.entries) EXPECT_TRUE(o == 1 || o == -1);
}

TEST(ClassifySentence, NegatedPositiveIsNegative) {
  PolarityResult r = ClassifySentence("not good", Lexicon());
  EXPECT_EQ(r.score, -1);
  EXPECT_EQ(r.label, Polarity::kNegative);
}

TEST(ClassifySentence, MixedSentenceSumsToNeutral) {
  PolarityResult r = ClassifySentence("good but buggy", Lexicon());
  EXPECT_EQ(r.score, 0);
  EXPECT_EQ(r.label, Polarity::kNeutral);
  EXPECT_EQ(r.matched.size(), 2u);
}

TEST(ClassifySentence, ContractionNegates) {
  EXPECT_EQ(ClassifySentence("It isn't buggy at all.", Lexicon()).label,
            Polarity::kPositive);
}

TEST(ClassifySentence, NegationOutsideWindowIsIgnored) {
  EXPECT_EQ(ClassifySentence("not that it was ever good", Lexicon()).score, 1);
  EXPECT_EQ(ClassifySentence("not that it was ever good", Lexicon(), 5).score,
            -1);
}

TEST(ClassifySentence, DoubleNegationFlipsOnce) {
  EXPECT_EQ(ClassifySentence("not never good", Lexicon()).score, -1);
}

TEST(ClassifySentence, EmptyLexiconIsAlwaysNeutral) {
  SentimentLexicon empty;
  for (const char* s : {"good", "not good", "awful and buggy", ""})
    EXPECT_EQ(ClassifySentence(s, empty).label, Polarity::kNeutral);
}

TEST(ClassifySentence, LabelFollowsScoreSignUnderFuzzing) {
  const std::vector<std::string> words = {
      "good", "buggy", "not", "never", "flawless", "slow", "it", "is",
      "the", "api", "n't", "really", "works", "no"};
  std::mt19937 rng(23);
  SentimentLexicon lex = Lexicon();
  for (int i = 0; i < 500; ++i) {
    std::string sentence;
    for (std::size_t k = 0, n = rng() % 10; k < n; ++k)
      sentence += words[rng() % words.size()] + " ";
    PolarityResult r = ClassifySentence(sentence, lex);
    Polarity expected = r.score > 0   ? Polarity::kPositive
                        : r.score < 0 ? Polarity::kNegative
                                      : Polarity::kNeutral;
    EXPECT_EQ(r.label, expected) << sentence;
    int sum = 0;
    for (const auto& [w, o] : r.matched) sum += o;
    EXPECT_EQ(sum, r.score);
  }
}

}  // namespace
}  // namespace scenmine
