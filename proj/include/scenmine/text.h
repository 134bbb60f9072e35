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

#ifndef SCENMINE_TEXT_H_
#define SCENMINE_TEXT_H_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace scenmine {

using WordSet = std::set<std::string, std::less<>>;

std::string ToLower(std::string_view text);
std::string_view Trim(std::string_view text);
bool IsBlank(std::string_view text);

// Decodes the handful of HTML entities found in forum dumps
// (&lt; &gt; &amp; &quot; &apos; &#39; &nbsp; and numeric &#NN;).
std::string DecodeEntities(std::string_view text);

// Removes markup tags from prose. Block-level tags (p, br, li, div, h1-h6,
// pre, blockquote) become blank lines so they act as sentence boundaries.
std::string StripMarkup(std::string_view text);

// A whitespace-delimited word with surrounding punctuation removed.
struct Token {
  std::string text;    // as written, punctuation-trimmed
  std::size_t offset;  // byte offset of `text` within the source
};

// Splits on whitespace and trims leading/trailing punctuation while keeping
// inner dots, hyphens and underscores ("org.json", "jackson-databind").
// A trailing possessive "'s" is dropped.
std::vector<Token> WordTokens(std::string_view text);

// Lowercased word tokens with "n't" contractions split off
// ("isn't" -> "is", "n't").
std::vector<std::string> SentimentTokens(std::string_view text);

// Java naming convention for class names: [A-Z][A-Za-z0-9]* with at least
// one lowercase letter, or a member of the all-caps whitelist (URL, UUID...).
bool IsCamelCaseType(std::string_view token);

// A dotted name whose terminal segment is a camel-case type.
bool IsQualifiedType(std::string_view token);

// Token looks like code rather than prose (camel-case, dotted, underscores,
// or call parentheses); such tokens are never treated as stop words.
bool IsCodeLikeToken(std::string_view token);

std::string TerminalSegment(std::string_view dotted);
std::vector<std::string> SplitDots(std::string_view dotted);

// Reads a one-token-per-line word list; '#' starts a comment line.
WordSet ParseWordList(std::string_view contents);
WordSet LoadWordList(const std::string& path);

std::string ReadFile(const std::string& path);

}  // namespace scenmine

#endif  // SCENMINE_TEXT_H_
