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

#include "scenmine/catalog.h"

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.h"
#include "support/oracles.h"

namespace scenmine {
namespace {

using testing::kGsonApi;

ApiRecord Record(std::string name, std::vector<std::string> deps = {}) {
  ApiRecord r;
  r.name = std::move(name);
  r.types = {r.name + ".Main"};
  r.dependencies = std::move(deps);
  return r;
}

// C1 -> C5, C3 -> C2, C4 -> C2, C5 -> C2.
ApiCatalog HitListCatalog() {
  return ApiCatalog({Record("C1", {"C5"}), Record("C2"), Record("C3", {"C2"}),
                     Record("C4", {"C2"}), Record("C5", {"C2"})});
}

TEST(ParseCatalog, ResolvesDependencyEdge) {
  Diagnostics d;
  ApiCatalog c = ParseCatalog(
      R"([{"name": "a.core", "types": ["a.core.A"]},
          {"name": "b.ext", "types": ["b.ext.B"], "dependencies": ["a.core"]}])",
      &d);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(c.Find("b.ext")->dependencies, std::vector<std::string>{"a.core"});
  EXPECT_EQ(IncomingEdgeCounts({"a.core", "b.ext"}, c).at("a.core"), 1u);
}

TEST(ParseCatalog, DuplicateNameIsNamed) {
  try {
    ParseCatalog(R"([{"name": "x.y", "types": ["x.y.A"]},
                     {"name": "x.y", "types": ["x.y.B"]}])");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("x.y"), std::string::npos);
  }
}

TEST(ParseCatalog, DanglingDependencyIsWarnedAndKept) {
  Diagnostics d;
  ApiCatalog c = ParseCatalog(
      R"([{"name": "a.b", "types": ["a.b.C"], "dependencies": ["gone"]}])", &d);
  EXPECT_EQ(d.Count(Severity::kWarning), 1u);
  EXPECT_EQ(c.Find("a.b")->dependencies, std::vector<std::string>{"gone"});
}

TEST(ParseCatalog, RejectsMalformedManifest) {
  EXPECT_THROW(ParseCatalog("{"), InputError);
  EXPECT_THROW(ParseCatalog(R"({"name": "x"})"), InputError);
  EXPECT_THROW(ParseCatalog(R"([{"types": []}])"), InputError);
}

TEST(ParseCatalog, IndexesRebuildIdentically) {
  ApiCatalog a = testing::MotivatingCatalog();
  std::vector<ApiRecord> records;
  for (const auto& [name, r] : a.records()) records.push_back(r);
  ApiCatalog b(records);
  EXPECT_EQ(a.name_index(), b.name_index());
  EXPECT_EQ(a.type_index(), b.type_index());
}

TEST(MatchName, ModuleIsExact) {
  ApiCatalog c = testing::MotivatingCatalog();
  EXPECT_EQ(MatchName("gson", *c.Find(kGsonApi)), MatchKind::kExact);
}

TEST(MatchName, SubstringIsFuzzy) {
  ApiCatalog c = testing::MotivatingCatalog();
  EXPECT_EQ(MatchName("gson", *c.Find("org.easygson")), MatchKind::kFuzzy);
}

TEST(MatchName, ShortTokensNeverMatch) {
  ApiCatalog c = ParseCatalog(
      R"([{"name": "io", "modules": ["io"], "types": ["io.File"]}])");
  for (const auto& [name, r] : c.records())
    EXPECT_EQ(MatchName("io", r), MatchKind::kNone);
}

TEST(MatchName, FuzzyClauseIsSymmetric) {
  ApiRecord shorter = Record("x.json");
  ApiRecord longer = Record("x.jsonlib");
  shorter.Finalize();
  longer.Finalize();
  EXPECT_EQ(MatchName("jsonlib", shorter), MatchKind::kFuzzy);
  EXPECT_EQ(MatchName("json", longer), MatchKind::kFuzzy);
}

TEST(Candidates, ExactBeforeFuzzyThenByName) {
  ApiCatalog c = testing::MotivatingCatalog();
  std::vector<Candidate> got = c.Candidates("gson");
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[0].api, kGsonApi);
  EXPECT_EQ(got[0].kind, MatchKind::kExact);
  EXPECT_EQ(got[1].api, "org.immutables");
  EXPECT_EQ(got[1].kind, MatchKind::kExact);
  EXPECT_EQ(got[2].api, "org.easygson");
  EXPECT_EQ(got[2].kind, MatchKind::kFuzzy);
}

TEST(DetectMentions, SingleMentionLeadsWithExactMatch) {
  ApiCatalog c = testing::MotivatingCatalog();
  auto mcls = DetectMentions(testing::MakeSentence("Use Gson for this"), c);
  ASSERT_EQ(mcls.size(), 1u);
  EXPECT_EQ(mcls[0].mention.token, "Gson");
  EXPECT_EQ(mcls[0].candidates.front().api, kGsonApi);
  EXPECT_EQ(mcls[0].candidates.front().kind, MatchKind::kExact);
}

TEST(DetectMentions, TwoApisInTextualOrder) {
  ApiCatalog c = testing::MotivatingCatalog();
  auto mcls = DetectMentions(
      testing::MakeSentence("Either org.json or Jackson will do."), c);
  ASSERT_EQ(mcls.size(), 2u);
  EXPECT_EQ(mcls[0].mention.token, "org.json");
  EXPECT_EQ(mcls[1].mention.token, "Jackson");
  EXPECT_LT(mcls[0].mention.char_offset, mcls[1].mention.char_offset);
}

TEST(DetectMentions, StableUnderTrailingPunctuation) {
  ApiCatalog c = testing::MotivatingCatalog();
  auto plain = DetectMentions(testing::MakeSentence("try gson"), c);
  auto punct = DetectMentions(testing::MakeSentence("try gson!"), c);
  ASSERT_EQ(plain.size(), 1u);
  ASSERT_EQ(punct.size(), 1u);
  EXPECT_EQ(plain[0].candidates, punct[0].candidates);
  EXPECT_EQ(plain, DetectMentions(testing::MakeSentence("try gson"), c));
}

TEST(DetectMentions, CompoundClassNamesAreNotFuzzyMentions) {
  ApiCatalog c = testing::MotivatingCatalog();
  EXPECT_TRUE(
      DetectMentions(testing::MakeSentence("Walk the JSONArray now"), c).empty());
}

TEST(DependencyMaxIncoming, HitListFigure) {
  ApiCatalog c = HitListCatalog();
  EXPECT_EQ(DependencyMaxIncoming({"C1", "C2", "C3", "C4", "C5"}, c),
            (std::set<std::string>{"C2"}));
}

TEST(DependencyMaxIncoming, TiesReturnAllMaximizers) {
  ApiCatalog c({Record("a"), Record("b")});
  EXPECT_EQ(DependencyMaxIncoming({"a", "b"}, c),
            (std::set<std::string>{"a", "b"}));
}

TEST(IncomingEdgeCounts, RestrictedToCandidatesAndBounded) {
  std::mt19937 rng(11);
  for (int round = 0; round < 100; ++round) {
    std::size_t n = 2 + rng() % 7;
    std::vector<ApiRecord> records;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> deps;
      for (std::size_t j = 0; j < i; ++j) {
        if (rng() % 3 == 0) {
          deps.push_back("n" + std::to_string(j));
          edges.push_back({"n" + std::to_string(i), "n" + std::to_string(j)});
        }
      }
      records.push_back(Record("n" + std::to_string(i), deps));
    }
    ApiCatalog c(records);
    std::set<std::string> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 4 != 0) subset.insert("n" + std::to_string(i));
    }
    auto counts = IncomingEdgeCounts(subset, c);
    EXPECT_EQ(counts, testing::IncomingOracle(subset, edges));
    for (const auto& [name, count] : counts)
      EXPECT_LE(count, subset.empty() ? 0 : subset.size() - 1);
  }
}

}  // namespace
}  // namespace scenmine
