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

#ifndef SCENMINE_SNIPPET_H_
#define SCENMINE_SNIPPET_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scenmine/corpus.h"
#include "scenmine/diagnostics.h"

namespace scenmine {

enum class InvalidReason { kXml, kJavaScript, kNonCode, kSyntax };

struct Validity {
  bool valid = true;
  InvalidReason reason = InvalidReason::kNonCode;  // meaningful when !valid

  static Validity Valid() { return {}; }
  static Validity Invalid(InvalidReason why) { return {false, why}; }
  bool operator==(const Validity&) const = default;
};

const char* InvalidReasonName(InvalidReason reason);

enum class LineStatus { kGrammarOk, kIslandRecovered, kFailed };

const char* LineStatusName(LineStatus status);

// Types and methods found on one logical line.
struct LineElements {
  std::set<std::string> types;    // simple names
  std::set<std::string> methods;  // invoked method names
  std::map<std::string, std::string> imports;       // simple -> qualified
  std::map<std::string, std::string> declarations;  // variable -> type
  std::set<std::string> declared_types;  // `class X`, `interface X`, ...
  std::set<std::string> receivers;       // lowercase names before `.m(`

  bool empty() const {
    return types.empty() && methods.empty() && imports.empty() &&
           declarations.empty() && declared_types.empty();
  }
  // Identifier set used to compare the two parsers.
  std::set<std::string> Identifiers() const;
  void Merge(const LineElements& other);
};

struct LineParseOutcome {
  std::size_t line_index = 0;
  std::string text;
  LineStatus status = LineStatus::kFailed;
  std::vector<std::string> extracted;  // sorted identifiers; empty if failed
};

struct ParsedSnippet {
  std::string post_id;
  std::size_t block_index = 0;
  Validity validity;
  std::set<std::string> types_used;    // T, before user-type removal
  std::set<std::string> methods_used;  // E
  std::map<std::string, std::string> imports;
  std::map<std::string, std::string> declarations;  // local variable -> type
  std::set<std::string> declared_types;
  std::set<std::string> receivers;
  std::vector<LineParseOutcome> line_outcomes;
  std::size_t error_line_count = 0;

  std::size_t FailedLineCount() const;
};

// The (T, E) pair consumed by the linker.
struct CodeElements {
  std::set<std::string> types;
  std::set<std::string> methods;
  std::map<std::string, std::string> imports;  // simple -> qualified

  bool operator==(const CodeElements&) const = default;
};

struct ThreadTypeContext {
  std::set<std::string> declared_user_types;
  // Thread-wide binding per variable: earliest declaration wins.
  std::map<std::string, std::string> variable_bindings;
  // (post id, variable) -> type, for same-post preference.
  std::map<std::pair<std::string, std::string>, std::string> post_bindings;

  std::optional<std::string> TypeOf(const std::string& post_id,
                                    const std::string& variable) const;
};

// Cheap cue-based check (xml, javascript, non-code).
Validity ClassifySnippet(const CodeBlock& block);

// Splits on ';', '{' and '}' outside literals and comments.
std::vector<std::string> SplitLogicalLines(std::string_view code);

// Grammar parse of one logical line; nullopt on a syntax error.
std::optional<LineElements> ParseLineGrammar(std::string_view line);
// Island scan of one logical line; never fails, may return nothing.
LineElements ScanLineIsland(std::string_view line);

// Total over any block. Validity is the cue-based verdict refined by the
// parse: every line failing makes it invalid(non-code), and a failed-line
// ratio above `max_error_line_ratio` makes it invalid(syntax).
ParsedSnippet ParseHybrid(const CodeBlock& block,
                          double max_error_line_ratio = 0.5);

CodeElements ExtractApiElements(const ParsedSnippet& snippet,
                                const ThreadTypeContext& context);

// `snippets` must be all parsed snippets of one thread in document order
// (question first, then answers).
ThreadTypeContext InferVariableTypes(const std::vector<ParsedSnippet>& snippets,
                                     Diagnostics* diagnostics = nullptr);
// Convenience overload: parses every code block of the thread.
ThreadTypeContext InferVariableTypes(const Thread& thread,
                                     Diagnostics* diagnostics = nullptr);

std::optional<std::string> ResolveFqn(std::string_view simple_type,
                                      const ParsedSnippet& snippet);

}  // namespace scenmine

#endif  // SCENMINE_SNIPPET_H_
