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

// Command-line front end: mine, eval, render, dump-parse.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "scenmine/catalog.h"
#include "scenmine/config.h"
#include "scenmine/corpus.h"
#include "scenmine/metrics.h"
#include "scenmine/opinion.h"
#include "scenmine/output.h"
#include "scenmine/pipeline.h"
#include "scenmine/snippet.h"
#include "scenmine/text.h"

namespace {

using namespace scenmine;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct MineArgs {
  std::string corpus;
  std::string format = "jsonl";
  std::string catalog;
  std::string lexicon;
  std::string config;
  std::string out;
  std::string pred_out;
  std::string mode;
  std::vector<std::string> overrides;
  std::size_t workers = 1;
};

struct EvalArgs {
  std::string pred;
  std::string gold;
  std::string task;
};

struct RenderArgs {
  std::string scenarios;
  std::string out_dir;
};

struct DumpArgs {
  std::string corpus;
  std::string format = "jsonl";
  std::string code;
  double max_error_line_ratio = 0.5;
};

CorpusFormat ParseFormat(const std::string& name) {
  return name == "xml" ? CorpusFormat::kXmlDump : CorpusFormat::kJsonl;
}

void PrintDiagnostics(const Diagnostics& diagnostics, std::size_t limit = 20) {
  std::size_t shown = 0;
  for (const auto& d : diagnostics.items()) {
    if (shown++ == limit) {
      std::cerr << "... " << diagnostics.size() - limit << " more\n";
      break;
    }
    std::cerr << SeverityName(d.severity) << ": " << d.where << ": "
              << d.message << "\n";
  }
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

int RunMine(const MineArgs& args) {
  Config config = args.config.empty() ? Config() : LoadConfig(args.config);
  for (const auto& kv : args.overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--set expects key=value, got '" + kv + "'");
    config.Set(Trim(std::string_view(kv).substr(0, eq)),
               std::string_view(kv).substr(eq + 1));
  }
  if (!args.mode.empty()) config.mode = ParseLinkMode(args.mode);
  config.Validate();
  if (args.workers == 0) throw ConfigError("--workers must be at least 1");

  Diagnostics catalog_diagnostics;
  ApiCatalog catalog = LoadCatalog(args.catalog, &catalog_diagnostics);
  PrintDiagnostics(catalog_diagnostics);

  SentimentLexicon lexicon;
  if (args.lexicon.empty()) {
    lexicon = DefaultLexicon();
  } else if (config.negations_file.empty()) {
    lexicon = LoadLexicon(args.lexicon);
  } else {
    lexicon = LoadLexicon(args.lexicon, config.negations_file);
  }
  Lexicons lexicons = LoadLexicons(config);

  LoadResult corpus = LoadCorpus(args.corpus, ParseFormat(args.format));
  PrintDiagnostics(corpus.diagnostics);

  MineResult result =
      Mine(corpus.threads, catalog, lexicon, config, lexicons, args.workers);
  PrintDiagnostics(result.diagnostics);
  EmitScenarios(result.scenarios, result.stats, args.out);
  if (!args.pred_out.empty())
    WriteText(args.pred_out, PredictionsJsonl(result.predictions));

  const MineStats& s = result.stats;
  std::cerr << "threads=" << s.threads << " skipped=" << corpus.skipped
            << " snippets=" << s.snippets << " invalid=" << s.invalid
            << " proximity=" << s.proximity_linked
            << " probabilistic=" << s.probabilistic_linked
            << " undecided=" << s.undecided
            << " scenarios=" << result.scenarios.size() << "\n";
  return kExitOk;
}

int RunEval(const EvalArgs& args) {
  EvalTask task = ParseEvalTask(args.task);
  std::vector<LabelRecord> predictions = LoadLabels(args.pred, task);
  std::vector<LabelRecord> gold = LoadLabels(args.gold, task);
  EvalReport report = Evaluate(predictions, gold, task);
  OrderedJson out;
  out["task"] = EvalTaskName(task);
  out.update(ReportToJson(report));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int RunRender(const RenderArgs& args) {
  std::vector<UsageScenario> scenarios = LoadScenarios(args.scenarios);
  std::vector<std::string> files = RenderHtml(scenarios, args.out_dir);
  std::cerr << "wrote " << files.size() << " files to " << args.out_dir
            << "\n";
  return kExitOk;
}

int RunDumpParse(const DumpArgs& args) {
  OrderedJson out = OrderedJson::array();
  if (!args.code.empty()) {
    CodeBlock block;
    block.raw = ReadFile(args.code);
    std::istringstream in(block.raw);
    for (std::string line; std::getline(in, line);) block.lines.push_back(line);
    out.push_back(ParsedSnippetToJson(ParseHybrid(block, args.max_error_line_ratio)));
  } else {
    LoadResult corpus = LoadCorpus(args.corpus, ParseFormat(args.format));
    PrintDiagnostics(corpus.diagnostics);
    for (const auto& thread : corpus.threads) {
      std::vector<const Post*> posts{&thread.question};
      for (const auto& a : thread.answers) posts.push_back(&a);
      for (const Post* post : posts) {
        for (const auto& block : post->blocks) {
          if (!block.is_code()) continue;
          ParsedSnippet parsed =
              ParseHybrid(block.code(), args.max_error_line_ratio);
          parsed.post_id = post->id;
          parsed.block_index = block.index;
          OrderedJson item;
          item["thread_id"] = thread.id;
          item.update(ParsedSnippetToJson(parsed));
          out.push_back(std::move(item));
        }
      }
    }
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine API usage scenarios from developer-forum threads"};
  app.require_subcommand(1);

  MineArgs mine;
  CLI::App* mine_cmd = app.add_subcommand("mine", "Link, summarize, attach reactions");
  mine_cmd->add_option("--corpus", mine.corpus, "Thread dump")->required();
  mine_cmd->add_option("--format", mine.format, "Corpus format")
      ->check(CLI::IsMember({"jsonl", "xml"}));
  mine_cmd->add_option("--catalog", mine.catalog, "API catalog manifest")
      ->required();
  mine_cmd->add_option("--lexicon", mine.lexicon, "Sentiment lexicon TSV");
  mine_cmd->add_option("--config", mine.config, "key = value config file");
  mine_cmd->add_option("--out", mine.out, "Scenario JSON output")->required();
  mine_cmd->add_option("--pred-out", mine.pred_out,
                       "Per-snippet predictions JSONL");
  mine_cmd->add_option("--mode", mine.mode, "Linking mode")
      ->check(CLI::IsMember({"full", "partial"}));
  mine_cmd->add_option("--workers", mine.workers, "Worker threads");
  mine_cmd->add_option("--set", mine.overrides, "Override a config key=value");

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Score predictions against gold");
  eval_cmd->add_option("--pred", eval.pred, "Predictions JSONL")->required();
  eval_cmd->add_option("--gold", eval.gold, "Gold labels JSONL")->required();
  eval_cmd->add_option("--task", eval.task, "Evaluation task")
      ->required()
      ->check(CLI::IsMember({"link", "validity", "summary", "reactions"}));

  RenderArgs render;
  CLI::App* render_cmd = app.add_subcommand("render", "Write static HTML pages");
  render_cmd->add_option("--scenarios", render.scenarios, "Scenario JSON")
      ->required();
  render_cmd->add_option("--out-dir", render.out_dir, "Output directory")
      ->required();

  DumpArgs dump;
  CLI::App* dump_cmd =
      app.add_subcommand("dump-parse", "Print hybrid-parser output as JSON");
  auto* corpus_opt = dump_cmd->add_option("--corpus", dump.corpus, "Thread dump");
  auto* code_opt = dump_cmd->add_option("--code", dump.code, "Raw Java file");
  corpus_opt->excludes(code_opt);
  dump_cmd->add_option("--format", dump.format, "Corpus format")
      ->check(CLI::IsMember({"jsonl", "xml"}));
  dump_cmd->add_option("--max-error-line-ratio", dump.max_error_line_ratio,
                       "Failed-line ratio above which a snippet is invalid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mine_cmd->parsed()) return RunMine(mine);
    if (eval_cmd->parsed()) return RunEval(eval);
    if (render_cmd->parsed()) return RunRender(render);
    if (dump_cmd->parsed()) {
      if (dump.corpus.empty() && dump.code.empty()) {
        std::cerr << "dump-parse: one of --corpus or --code is required\n";
        return kExitUsage;
      }
      return RunDumpParse(dump);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
