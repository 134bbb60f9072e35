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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "scenmine/catalog.h"
#include "scenmine/linker.h"
#include "scenmine/metrics.h"
#include "scenmine/opinion.h"
#include "scenmine/output.h"
#include "scenmine/pipeline.h"
#include "scenmine/summarizer.h"
#include "support/fixtures.h"
#include "support/label_fixtures.h"
#include "support/oracles.h"
#include "support/synthetic.h"

namespace {

using namespace scenmine;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::vector<std::string> ReactionIds(const UsageScenario& s) {
  std::vector<std::string> ids;
  for (const auto& r : s.reactions) ids.push_back(r.sentence.id);
  return ids;
}

MineResult MineCorpus(const std::vector<Thread>& threads,
                      const ApiCatalog& catalog, LinkMode mode,
                      std::size_t workers) {
  Config config;
  config.mode = mode;
  return Mine(threads, catalog, DefaultLexicon(), config, Lexicons::Defaults(),
              workers);
}

EvalReport ScoreLinks(const MineResult& result,
                      const std::vector<LabelRecord>& gold) {
  auto predictions =
      ParseLabels(PredictionsJsonl(result.predictions), EvalTask::kLink);
  return Evaluate(predictions, gold, EvalTask::kLink);
}

Outcome MotivatingExample() {
  Outcome o;
  auto start = Clock::now();
  ApiCatalog catalog = testing::MotivatingCatalog();
  Thread thread = testing::MotivatingThread();
  MineResult r = MineCorpus({thread}, catalog, LinkMode::kFull, 1);
  double elapsed = Seconds(start);
  o.Check(r.scenarios.size() == 2, "expected 2 scenarios, got " +
                                       std::to_string(r.scenarios.size()));
  if (!o.pass) return o;
  const std::string off_topic =
      "Check the website first for an overview of the data format.";
  const std::vector<std::string> apis = {testing::kGsonApi,
                                         testing::kOrgJsonApi};
  const std::vector<std::vector<std::string>> reactions = {
      {"102/cc1/s0", "102/cc2/s0"}, {"102/cc3/s0", "102/cc4/s0"}};
  for (std::size_t i = 0; i < 2; ++i) {
    const UsageScenario& s = r.scenarios[i];
    o.Check(s.api.api == apis[i], "scenario " + std::to_string(i) +
                                      " linked to " + s.api.api);
    o.Check(ReactionIds(s) == reactions[i],
            "scenario " + std::to_string(i) + " has the wrong reactions");
    o.Check(s.description.has_value(), "missing description");
    if (!s.description) continue;
    for (const auto* part : {&s.description->problem_summary,
                             &s.description->solution_summary}) {
      for (const auto& sentence : *part)
        o.Check(sentence.text != off_topic, "off-topic sentence in summary");
    }
  }
  const auto& first = *r.scenarios[0].description;
  o.Check(!first.problem_summary.empty() && !first.solution_summary.empty(),
          "first scenario lacks a problem or solution summary");
  o.Check(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome SimilarityOracle() {
  Outcome o;
  std::mt19937 rng(101);
  const std::vector<std::string> type_pool = {
      "Gson", "JsonParser", "TypeToken", "JSONObject", "JSONArray", "List",
      "Map", "String", "ObjectMapper", "Client", "Request", "Response"};
  const std::vector<std::string> packages = {"com.a", "org.b", "net.c"};
  const std::vector<std::string> method_pool = {
      "fromJson", "toJson", "getType", "length", "get", "put", "readValue",
      "execute", "close", "parse"};
  auto pick = [&](const std::vector<std::string>& v) {
    return v[rng() % v.size()];
  };
  for (int i = 0; i < 1000; ++i) {
    CodeElements code;
    for (std::size_t k = 0, n = rng() % 6; k < n; ++k) {
      std::string t = pick(type_pool);
      code.types.insert(t);
      if (rng() % 3 == 0) code.imports[t] = pick(packages) + "." + t;
    }
    for (std::size_t k = 0, n = rng() % 5; k < n; ++k)
      code.methods.insert(pick(method_pool));

    ApiRecord api;
    api.name = "cand" + std::to_string(i);
    for (std::size_t k = 0, n = 1 + rng() % 5; k < n; ++k) {
      std::string t = pick(type_pool);
      api.types.insert(rng() % 2 ? pick(packages) + "." + t : t);
      for (std::size_t m = 0, c = rng() % 3; m < c; ++m)
        api.methods[t].insert(pick(method_pool));
    }
    api.Finalize();

    testing::OracleApi oracle{api.types, {}};
    for (const auto& [t, names] : api.methods)
      oracle.methods.insert(names.begin(), names.end());
    double type_score = TypeSimilarity(code, api);
    double method_score = MethodSimilarity(code, api);
    o.Check(type_score ==
                testing::TypeScoreOracle(code.types, code.imports, oracle),
            "type score mismatch on pair " + std::to_string(i));
    o.Check(method_score == testing::MethodScoreOracle(code.methods, oracle),
            "method score mismatch on pair " + std::to_string(i));
  }
  return o;
}

ApiRecord Node(const std::string& name, std::vector<std::string> deps) {
  ApiRecord r;
  r.name = name;
  r.types = {name + ".T"};
  r.dependencies = std::move(deps);
  return r;
}

Outcome DependencyOracle() {
  Outcome o;
  ApiCatalog hit_list({Node("C1", {"C5"}), Node("C2", {}), Node("C3", {"C2"}),
                       Node("C4", {"C2"}), Node("C5", {"C2"})});
  o.Check(DependencyMaxIncoming({"C1", "C2", "C3", "C4", "C5"}, hit_list) ==
              std::set<std::string>{"C2"},
          "hit-list example did not select C2");

  std::mt19937 rng(202);
  for (int round = 0; round < 200; ++round) {
    std::size_t n = 1 + rng() % 8;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
    // Edges only from higher to lower index keep the graph acyclic.
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<ApiRecord> records;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> deps;
      for (std::size_t j = 0; j < i; ++j) {
        if (rng() % 2) {
          deps.push_back(names[j]);
          edges.push_back({names[i], names[j]});
        }
      }
      records.push_back(Node(names[i], deps));
    }
    ApiCatalog catalog(records);
    std::set<std::string> all(names.begin(), names.end());
    auto expected = testing::IncomingOracle(all, edges);
    o.Check(IncomingEdgeCounts(all, catalog) == expected,
            "incoming counts differ on DAG " + std::to_string(round));
    std::size_t best = 0;
    for (const auto& [name, count] : expected) best = std::max(best, count);
    std::set<std::string> winners;
    for (const auto& [name, count] : expected)
      if (count == best) winners.insert(name);
    o.Check(DependencyMaxIncoming(all, catalog) == winners,
            "maximizers differ on DAG " + std::to_string(round));
  }
  return o;
}

Outcome CoverageOracle() {
  Outcome o;
  CodeElements c4;
  c4.types = {"T1", "T2"};
  std::vector<LinkedSnippet> worked = {
      {{"T1"}, "A1"}, {{"T1"}, "A1"}, {{"T2"}, "A2"}};
  auto decision = ProbabilisticLink(c4, worked);
  o.Check(decision && decision->api == "A1" && decision->coverage == 2,
          "worked example did not pick A1 with coverage 2");
  o.Check(ApiCoverage(c4, worked).at("A2") == 1, "A2 coverage is not 1");

  std::mt19937 rng(303);
  const std::vector<std::string> apis = {"A1", "A2", "A3", "A4"};
  const std::vector<std::string> types = {"T1", "T2", "T3", "T4", "T5", "T6"};
  for (int round = 0; round < 100; ++round) {
    std::vector<LinkedSnippet> prior;
    std::vector<testing::PriorLink> oracle_prior;
    for (std::size_t i = 0, n = rng() % 12; i < n; ++i) {
      std::set<std::string> ts;
      for (std::size_t k = 0, m = 1 + rng() % 3; k < m; ++k)
        ts.insert(types[rng() % types.size()]);
      std::string api = apis[rng() % apis.size()];
      prior.push_back({ts, api});
      oracle_prior.push_back({ts, api});
    }
    CodeElements code;
    for (std::size_t k = 0, m = 1 + rng() % 3; k < m; ++k)
      code.types.insert(types[rng() % types.size()]);
    auto expected = testing::CoverageOracle(code.types, oracle_prior);
    o.Check(ApiCoverage(code, prior) == expected,
            "coverage differs on prior set " + std::to_string(round));
    std::string best;
    std::size_t best_count = 0;
    for (const auto& [api, count] : expected) {
      if (count > best_count) {
        best = api;
        best_count = count;
      }
    }
    auto link = ProbabilisticLink(code, prior);
    o.Check(best_count == 0 ? !link.has_value()
                            : (link && link->api == best &&
                               link->coverage == best_count),
            "probabilistic pick differs on prior set " + std::to_string(round));
  }
  return o;
}

std::vector<std::size_t> RankOrder(const std::vector<double>& weights) {
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weights[a] > weights[b];
  });
  return order;
}

Outcome TextRankOracle() {
  Outcome o;
  const double d = 0.85;
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  double worst = 0.0;
  for (int round = 0; round < 100; ++round) {
    std::size_t n = 1 + rng() % 6;
    TextGraph graph;
    for (std::size_t i = 0; i < n; ++i)
      graph.nodes.push_back(testing::MakeSentence("s", std::to_string(i), 0, i));
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, double>> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng() % 2) {
          double w = weight(rng);
          graph.edges.push_back({i, j, w});
          edges.push_back({{i, j}, w});
        }
      }
    }
    RankResult ranked = RankNodes(graph, d, 1e-10, 1000);
    std::vector<double> expected = testing::TextRankOracle(n, edges, d);
    for (std::size_t i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(ranked.weights[i] - expected[i]));

    std::vector<bool> linked(n, false);
    for (const auto& e : graph.edges) linked[e.from] = linked[e.to] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!linked[i])
        o.Check(std::abs(ranked.weights[i] - (1.0 - d)) <= 1e-15,
                "isolated node weight is not 1 - d");
    }

    TextGraph scaled = graph;
    for (auto& e : scaled.edges) e.weight *= 10.0;
    RankResult ranked_scaled = RankNodes(scaled, d, 1e-10, 1000);
    o.Check(RankOrder(ranked.weights) == RankOrder(ranked_scaled.weights),
            "ranking changed under 10x edge scaling on graph " +
                std::to_string(round));
  }
  o.Check(worst < 1e-6, "max deviation " + std::to_string(worst));
  if (o.pass) {
    std::ostringstream s;
    s << "max deviation " << worst;
    o.detail = s.str();
  }
  return o;
}

Outcome Sentiment() {
  Outcome o;
  const SentimentLexicon& lexicon = DefaultLexicon();
  PolarityResult not_good = ClassifySentence("not good", lexicon);
  o.Check(not_good.label == Polarity::kNegative && not_good.score == -1,
          "\"not good\" is not negative with score -1");

  std::mt19937 rng(505);
  std::vector<std::string> words = {"it", "is", "the", "api", "this",
                                    "works", "really", "not", "never", "n't",
                                    "no", "hardly", "for", "me"};
  for (const auto& [word, orientation] : lexicon.entries) {
    if (rng() % 4 == 0) words.push_back(word);
  }
  SentimentLexicon empty;
  for (int i = 0; i < 500; ++i) {
    std::string sentence;
    for (std::size_t k = 0, n = 1 + rng() % 12; k < n; ++k)
      sentence += words[rng() % words.size()] + (rng() % 5 ? " " : ", ");
    PolarityResult r = ClassifySentence(sentence, lexicon);
    Polarity expected = r.score > 0   ? Polarity::kPositive
                        : r.score < 0 ? Polarity::kNegative
                                      : Polarity::kNeutral;
    o.Check(r.label == expected, "label/score mismatch on: " + sentence);
    o.Check(ClassifySentence(sentence, empty).label == Polarity::kNeutral,
            "empty lexicon produced a polar label on: " + sentence);
  }
  return o;
}

Outcome Metrics() {
  Outcome o;
  const auto& fixtures = testing::HandLabeledFixtures();
  o.Check(fixtures.size() == 20, "expected 20 fixtures");
  for (const auto& f : fixtures) {
    EvalReport r = Evaluate(f.predictions, f.gold, f.task);
    o.Check(r.tp == f.tp && r.fp == f.fp && r.tn == f.tn && r.fn == f.fn,
            "confusion matrix differs on " + f.name);
  }
  for (std::size_t tp = 0; tp < 8; ++tp)
    for (std::size_t fp = 0; fp < 8; ++fp)
      for (std::size_t tn = 0; tn < 8; ++tn)
        for (std::size_t fn = 0; fn < 8; ++fn) {
          EvalReport r = MakeReport(tp, fp, tn, fn);
          bool ok = r.precision.has_value() == (tp + fp > 0) &&
                    r.recall.has_value() == (tp + fn > 0) &&
                    r.accuracy.has_value() == (tp + fp + tn + fn > 0);
          if (r.precision) ok &= *r.precision == double(tp) / double(tp + fp);
          if (r.recall) ok &= *r.recall == double(tp) / double(tp + fn);
          if (r.accuracy)
            ok &= *r.accuracy == double(tp + tn) / double(tp + fp + tn + fn);
          bool f1_defined = r.precision && r.recall && tp > 0;
          ok &= r.f1.has_value() == f1_defined;
          if (r.f1) {
            ok &= *r.f1 == 2.0 * *r.precision * *r.recall /
                               (*r.precision + *r.recall);
            ok &= std::abs(*r.f1 - 2.0 * tp / double(2 * tp + fp + fn)) < 1e-12;
          }
          o.Check(ok, "formula identity fails at (" + std::to_string(tp) +
                          "," + std::to_string(fp) + "," + std::to_string(tn) +
                          "," + std::to_string(fn) + ")");
        }
  return o;
}

Outcome SyntheticLinking() {
  Outcome o;
  testing::SyntheticOptions clean_options;
  clean_options.ambiguous_threads = 0;
  testing::SyntheticCorpus clean = testing::GenerateCorpus(clean_options);
  ApiCatalog catalog = ParseCatalog(clean.catalog_json);
  auto clean_threads = ParseCorpusJsonl(clean.corpus_jsonl).threads;
  o.Check(clean_threads.size() == 50, "corpus does not have 50 threads");
  EvalReport exact = ScoreLinks(
      MineCorpus(clean_threads, catalog, LinkMode::kFull, 1), clean.link_gold);
  o.Check(exact.precision == 1.0 && exact.recall == 1.0,
          "unambiguous corpus not linked perfectly");

  testing::SyntheticCorpus mixed = testing::GenerateCorpus({});
  auto mixed_threads = ParseCorpusJsonl(mixed.corpus_jsonl).threads;
  EvalReport full = ScoreLinks(
      MineCorpus(mixed_threads, catalog, LinkMode::kFull, 1), mixed.link_gold);
  EvalReport partial =
      ScoreLinks(MineCorpus(mixed_threads, catalog, LinkMode::kPartial, 1),
                 mixed.link_gold);
  o.Check(full.precision && partial.precision &&
              *full.precision > *partial.precision,
          "full mode does not beat partial mode in precision");
  if (o.pass) {
    std::ostringstream s;
    s << "clean P=R=1; injected full P=" << *full.precision
      << " partial P=" << *partial.precision;
    o.detail = s.str();
  }
  return o;
}

std::string EmitToString(const MineResult& r, const std::string& path) {
  EmitScenarios(r.scenarios, r.stats, path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome Determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "scenmine_acceptance";
  fs::create_directories(dir);

  testing::SyntheticCorpus corpus = testing::GenerateCorpus({});
  ApiCatalog catalog = ParseCatalog(corpus.catalog_json);
  auto threads = ParseCorpusJsonl(corpus.corpus_jsonl).threads;
  std::string a = EmitToString(MineCorpus(threads, catalog, LinkMode::kFull, 1),
                               (dir / "a.json").string());
  std::string b = EmitToString(MineCorpus(threads, catalog, LinkMode::kFull, 1),
                               (dir / "b.json").string());
  std::string c = EmitToString(MineCorpus(threads, catalog, LinkMode::kFull, 8),
                               (dir / "c.json").string());
  o.Check(a == b, "two single-worker runs differ");
  o.Check(a == c, "1-worker and 8-worker runs differ");

  testing::SyntheticOptions large;
  large.seed = 99;
  large.threads = 250;
  large.answers_per_thread = 3;
  large.ambiguous_threads = 25;
  testing::SyntheticCorpus big = testing::GenerateCorpus(large);
  o.Check(big.posts == 1000, "large corpus has " + std::to_string(big.posts) +
                                 " posts");
  auto start = Clock::now();
  ApiCatalog big_catalog = ParseCatalog(big.catalog_json);
  auto big_threads = ParseCorpusJsonl(big.corpus_jsonl).threads;
  MineResult big_result =
      MineCorpus(big_threads, big_catalog, LinkMode::kFull, 1);
  EmitToString(big_result, (dir / "big.json").string());
  double elapsed = Seconds(start);
  o.Check(elapsed < 60.0, "1000-post run took " + std::to_string(elapsed) + " s");
  fs::remove_all(dir);
  if (o.pass) {
    std::ostringstream s;
    s << "1000 posts in " << elapsed << " s";
    o.detail = s.str();
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
      {{"motivating thread end to end", MotivatingExample},
       {"type/method scores vs set-intersection oracle", SimilarityOracle},
       {"dependency filter vs brute-force incoming edges", DependencyOracle},
       {"probabilistic linking vs brute-force coverage", CoverageOracle},
       {"sentence ranking vs direct linear solve", TextRankOracle},
       {"sentiment polarity", Sentiment},
       {"evaluation metrics", Metrics},
       {"synthetic linking benchmark", SyntheticLinking},
       {"determinism and throughput", Determinism}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    failures += outcome.pass ? 0 : 1;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << i + 1
              << ": " << criteria[i].first;
    if (!outcome.detail.empty()) std::cout << " (" << outcome.detail << ")";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
