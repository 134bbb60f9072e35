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

#include "scenmine/snippet.h"

#include <algorithm>
#include <cctype>
#include <regex>

#include "java_parser.h"
#include "scenmine/text.h"

namespace scenmine {
namespace {

std::string JoinLines(const std::vector<std::string>& lines) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    out += lines[i];
  }
  return out;
}

bool IsXmlLike(std::string_view text) {
  std::string_view trimmed = Trim(text);
  if (trimmed.empty() || trimmed.front() != '<') return false;
  std::size_t inside = 0;
  std::size_t total = 0;
  bool in_tag = false;
  for (char c : trimmed) {
    if (c == '<') in_tag = true;
    if (!std::isspace(static_cast<unsigned char>(c))) {
      ++total;
      if (in_tag) ++inside;
    }
    if (c == '>') in_tag = false;
  }
  return total > 0 && 2 * inside >= total;
}

bool HasJavaScriptCue(const std::string& text) {
  static const std::regex kCues(
      R"((^|[^\w$])var\s+[A-Za-z_$][\w$]*\s*[=;,])"
      R"(|(^|[^\w$])function\s*[\w$]*\s*\()"
      R"(|\$\.|\$\(|=>)");
  return std::regex_search(text, kCues);
}

bool IsStatementLike(std::string_view line) {
  static const std::regex kCall(R"([A-Za-z_$][\w$]*\s*\()");
  if (line.find_first_of(";{}=") != std::string_view::npos) return true;
  std::string copy(line);
  if (std::regex_search(copy, kCall)) return true;
  return java::ParseLine(line).has_value();
}

}  // namespace

const char* InvalidReasonName(InvalidReason reason) {
  switch (reason) {
    case InvalidReason::kXml:
      return "xml";
    case InvalidReason::kJavaScript:
      return "javascript";
    case InvalidReason::kNonCode:
      return "non-code";
    case InvalidReason::kSyntax:
      return "syntax";
  }
  return "non-code";
}

const char* LineStatusName(LineStatus status) {
  switch (status) {
    case LineStatus::kGrammarOk:
      return "grammar_ok";
    case LineStatus::kIslandRecovered:
      return "island_recovered";
    case LineStatus::kFailed:
      return "failed";
  }
  return "failed";
}

std::set<std::string> LineElements::Identifiers() const {
  std::set<std::string> ids(types.begin(), types.end());
  ids.insert(methods.begin(), methods.end());
  ids.insert(declared_types.begin(), declared_types.end());
  for (const auto& [simple, fqn] : imports) ids.insert(fqn);
  for (const auto& [name, type] : declarations) ids.insert(name);
  return ids;
}

void LineElements::Merge(const LineElements& other) {
  types.insert(other.types.begin(), other.types.end());
  methods.insert(other.methods.begin(), other.methods.end());
  imports.insert(other.imports.begin(), other.imports.end());
  declarations.insert(other.declarations.begin(), other.declarations.end());
  declared_types.insert(other.declared_types.begin(),
                        other.declared_types.end());
  receivers.insert(other.receivers.begin(), other.receivers.end());
}

std::size_t ParsedSnippet::FailedLineCount() const {
  return static_cast<std::size_t>(
      std::count_if(line_outcomes.begin(), line_outcomes.end(),
                    [](const LineParseOutcome& o) {
                      return o.status == LineStatus::kFailed;
                    }));
}

std::optional<std::string> ThreadTypeContext::TypeOf(
    const std::string& post_id, const std::string& variable) const {
  auto local = post_bindings.find({post_id, variable});
  if (local != post_bindings.end()) return local->second;
  auto global = variable_bindings.find(variable);
  if (global != variable_bindings.end()) return global->second;
  return std::nullopt;
}

Validity ClassifySnippet(const CodeBlock& block) {
  std::string text = JoinLines(block.lines);
  if (IsXmlLike(text)) return Validity::Invalid(InvalidReason::kXml);
  if (HasJavaScriptCue(text))
    return Validity::Invalid(InvalidReason::kJavaScript);
  bool statement = std::any_of(
      block.lines.begin(), block.lines.end(),
      [](const std::string& line) { return IsStatementLike(line); });
  if (!statement) return Validity::Invalid(InvalidReason::kNonCode);
  return Validity::Valid();
}

std::vector<std::string> SplitLogicalLines(std::string_view code) {
  std::vector<std::string> lines;
  std::string current;
  int paren = 0;
  std::vector<bool> braces;  // true: initializer or nested body, kept inline

  auto flush = [&] {
    std::string_view trimmed = Trim(current);
    bool only_punct = std::all_of(trimmed.begin(), trimmed.end(), [](char c) {
      return c == '{' || c == '}' || c == ';' ||
             std::isspace(static_cast<unsigned char>(c));
    });
    if (!only_punct) {
      // Collapse runs of whitespace left by newlines and removed comments.
      std::string line;
      bool space = false;
      for (char c : trimmed) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          space = true;
          continue;
        }
        if (space && !line.empty()) line += ' ';
        space = false;
        line += c;
      }
      lines.push_back(std::move(line));
    }
    current.clear();
  };
  auto inline_depth = [&] {
    return std::count(braces.begin(), braces.end(), true);
  };
  auto last_non_space = [&]() -> char {
    for (auto it = current.rbegin(); it != current.rend(); ++it) {
      if (!std::isspace(static_cast<unsigned char>(*it))) return *it;
    }
    return '\0';
  };

  std::size_t i = 0;
  while (i < code.size()) {
    char c = code[i];
    if (c == '/' && i + 1 < code.size() && code[i + 1] == '/') {
      while (i < code.size() && code[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < code.size() && code[i + 1] == '*') {
      std::size_t close = code.find("*/", i + 2);
      i = close == std::string_view::npos ? code.size() : close + 2;
      current += ' ';
      continue;
    }
    if (c == '"' || c == '\'') {
      std::size_t j = i + 1;
      if (c == '"' && code.substr(i, 3) == "\"\"\"") {
        std::size_t close = code.find("\"\"\"", i + 3);
        j = close == std::string_view::npos ? code.size() : close + 3;
      } else {
        while (j < code.size() && code[j] != c && code[j] != '\n') {
          if (code[j] == '\\') ++j;
          ++j;
        }
        if (j < code.size() && code[j] == c) ++j;
      }
      j = std::min(j, code.size());
      current.append(code.substr(i, j - i));
      i = j;
      continue;
    }
    if (c == '(' || c == '[') {
      ++paren;
    } else if (c == ')' || c == ']') {
      paren = std::max(0, paren - 1);
    } else if (c == '{') {
      std::size_t j = i + 1;
      while (j < code.size() &&
             std::isspace(static_cast<unsigned char>(code[j])))
        ++j;
      if (j < code.size() && code[j] == '}') {
        current += "{}";
        i = j + 1;
        continue;
      }
      char prev = last_non_space();
      bool keep = paren > 0 || inline_depth() > 0 || prev == '=' ||
                  prev == ',' || prev == ']' || prev == '{';
      if (keep) {
        braces.push_back(true);
        current += c;
      } else {
        braces.push_back(false);
        current += c;
        flush();
      }
      ++i;
      continue;
    } else if (c == '}') {
      bool kept = !braces.empty() && braces.back();
      if (!braces.empty()) braces.pop_back();
      if (kept) {
        current += c;
      } else {
        flush();
      }
      ++i;
      continue;
    } else if (c == ';' && paren == 0 && inline_depth() == 0) {
      current += c;
      flush();
      ++i;
      continue;
    }
    current += c;
    ++i;
  }
  flush();
  return lines;
}

std::optional<LineElements> ParseLineGrammar(std::string_view line) {
  return java::ParseLine(line);
}

LineElements ScanLineIsland(std::string_view line) {
  return java::ScanIsland(line);
}

ParsedSnippet ParseHybrid(const CodeBlock& block,
                          double max_error_line_ratio) {
  ParsedSnippet parsed;
  parsed.validity = ClassifySnippet(block);

  LineElements all;
  std::vector<std::string> lines = SplitLogicalLines(JoinLines(block.lines));
  std::size_t failed = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    LineParseOutcome outcome;
    outcome.line_index = i;
    outcome.text = lines[i];
    LineElements found;
    if (auto grammar = java::ParseLine(lines[i])) {
      outcome.status = LineStatus::kGrammarOk;
      found = std::move(*grammar);
    } else {
      found = java::ScanIsland(lines[i]);
      if (found.empty()) {
        outcome.status = LineStatus::kFailed;
        found = LineElements();
        ++failed;
      } else {
        outcome.status = LineStatus::kIslandRecovered;
      }
      ++parsed.error_line_count;
    }
    std::set<std::string> ids = found.Identifiers();
    outcome.extracted.assign(ids.begin(), ids.end());
    all.Merge(found);
    parsed.line_outcomes.push_back(std::move(outcome));
  }

  if (parsed.validity.valid) {
    if (lines.empty() || failed == lines.size()) {
      parsed.validity = Validity::Invalid(InvalidReason::kNonCode);
    } else if (static_cast<double>(failed) /
                   static_cast<double>(lines.size()) >
               max_error_line_ratio) {
      parsed.validity = Validity::Invalid(InvalidReason::kSyntax);
    }
  }
  if (parsed.validity.valid) {
    parsed.types_used = std::move(all.types);
    parsed.methods_used = std::move(all.methods);
    parsed.imports = std::move(all.imports);
    parsed.declarations = std::move(all.declarations);
    parsed.declared_types = std::move(all.declared_types);
    parsed.receivers = std::move(all.receivers);
  }
  return parsed;
}

CodeElements ExtractApiElements(const ParsedSnippet& snippet,
                                const ThreadTypeContext& context) {
  CodeElements elements;
  if (!snippet.validity.valid) return elements;
  elements.types = snippet.types_used;
  for (const auto& receiver : snippet.receivers) {
    if (snippet.declarations.contains(receiver)) continue;
    if (auto type = context.TypeOf(snippet.post_id, receiver))
      elements.types.insert(*type);
  }
  for (const auto& user : context.declared_user_types) elements.types.erase(user);
  for (const auto& user : snippet.declared_types) elements.types.erase(user);
  elements.methods = snippet.methods_used;
  for (const auto& [simple, fqn] : snippet.imports) {
    if (elements.types.contains(simple)) elements.imports[simple] = fqn;
  }
  return elements;
}

ThreadTypeContext InferVariableTypes(const std::vector<ParsedSnippet>& snippets,
                                     Diagnostics* diagnostics) {
  ThreadTypeContext context;
  for (const auto& snippet : snippets) {
    if (!snippet.validity.valid) continue;
    context.declared_user_types.insert(snippet.declared_types.begin(),
                                       snippet.declared_types.end());
  }
  for (const auto& snippet : snippets) {
    if (!snippet.validity.valid) continue;
    for (const auto& [variable, type] : snippet.declarations) {
      if (context.declared_user_types.contains(variable)) continue;
      context.post_bindings.emplace(std::make_pair(snippet.post_id, variable),
                                    type);
      auto [it, inserted] = context.variable_bindings.emplace(variable, type);
      if (!inserted && it->second != type && diagnostics != nullptr) {
        diagnostics->Warn(snippet.post_id + "/" +
                              std::to_string(snippet.block_index),
                          "variable '" + variable + "' bound to " + type +
                              ", keeping earlier binding " + it->second);
      }
    }
  }
  return context;
}

ThreadTypeContext InferVariableTypes(const Thread& thread,
                                     Diagnostics* diagnostics) {
  std::vector<ParsedSnippet> snippets;
  auto add_post = [&](const Post& post) {
    for (const auto& block : post.blocks) {
      if (!block.is_code()) continue;
      ParsedSnippet parsed = ParseHybrid(block.code());
      parsed.post_id = post.id;
      parsed.block_index = block.index;
      snippets.push_back(std::move(parsed));
    }
  };
  add_post(thread.question);
  for (const auto& answer : thread.answers) add_post(answer);
  return InferVariableTypes(snippets, diagnostics);
}

std::optional<std::string> ResolveFqn(std::string_view simple_type,
                                      const ParsedSnippet& snippet) {
  auto it = snippet.imports.find(std::string(simple_type));
  if (it == snippet.imports.end()) return std::nullopt;
  if (TerminalSegment(it->second) != simple_type) return std::nullopt;
  return it->second;
}

}  // namespace scenmine
