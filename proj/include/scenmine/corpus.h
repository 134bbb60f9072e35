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

#ifndef SCENMINE_CORPUS_H_
#define SCENMINE_CORPUS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scenmine/diagnostics.h"

namespace scenmine {

enum class SentenceContainer { kPostBlock, kComment, kTitle };

// One sentence of prose. `id` is globally unique within a corpus:
//   "<post>/b<block>/s<index>"      text block sentence
//   "<post>/c<comment>/s<index>"    comment sentence
//   "<thread>/title"                thread title
struct Sentence {
  std::string id;
  std::string text;
  std::size_t index = 0;  // dense 0..n-1 within its container
  SentenceContainer container = SentenceContainer::kPostBlock;
  std::string owner;        // post id (blocks, comments) or thread id (title)
  std::size_t block = 0;    // content block index for kPostBlock
  std::size_t comment = 0;  // comment order for kComment

  bool operator==(const Sentence&) const = default;
};

struct TextBlock {
  std::string raw;  // markup exactly as found between code blocks
  std::vector<Sentence> sentences;

  bool operator==(const TextBlock&) const = default;
};

struct CodeBlock {
  std::string raw;                 // verbatim content of the code tag
  std::vector<std::string> lines;  // entity-decoded physical lines

  bool operator==(const CodeBlock&) const = default;
};

struct ContentBlock {
  std::size_t index = 0;
  std::variant<TextBlock, CodeBlock> payload;

  bool is_code() const { return std::holds_alternative<CodeBlock>(payload); }
  const CodeBlock& code() const { return std::get<CodeBlock>(payload); }
  const TextBlock& text() const { return std::get<TextBlock>(payload); }

  bool operator==(const ContentBlock&) const = default;
};

struct Comment {
  std::string id;
  std::size_t order = 0;  // posting-time rank, 0 = earliest
  std::vector<Sentence> sentences;

  bool operator==(const Comment&) const = default;
};

enum class PostKind { kQuestion, kAnswer };

struct Post {
  std::string id;
  PostKind kind = PostKind::kQuestion;
  long score = 0;
  std::vector<ContentBlock> blocks;
  std::vector<Comment> comments;  // sorted by order

  // All text-block sentences in document order.
  std::vector<const Sentence*> TextSentences() const;

  bool operator==(const Post&) const = default;
};

struct Thread {
  std::string id;
  std::string title;
  Post question;
  std::vector<Post> answers;
  std::vector<std::string> tags;

  Sentence TitleSentence() const;
  const Post* FindPost(std::string_view post_id) const;

  bool operator==(const Thread&) const = default;
};

// Numeric ids compare by value, everything else lexicographically.
bool IdLess(const std::string& a, const std::string& b);

enum class CorpusFormat { kJsonl, kXmlDump };

struct LoadResult {
  std::vector<Thread> threads;  // ascending by id
  std::size_t skipped = 0;      // malformed records
  Diagnostics diagnostics;
};

// Throws InputError when the file cannot be read.
LoadResult LoadCorpus(const std::string& path, CorpusFormat format);

// In-memory variants used by tests and the XML importer.
LoadResult ParseCorpusJsonl(std::string_view contents,
                            std::string_view source_name = "<memory>");
LoadResult ParseStackExchangeXml(std::string_view posts_xml,
                                 std::string_view comments_xml,
                                 std::string_view source_name = "<memory>");

struct SegmentResult {
  std::vector<ContentBlock> blocks;
  Diagnostics diagnostics;
};

// Splits post markup into alternating text and code blocks on <code> tags.
// Sentence ids are left empty; AssignSentenceIds fills them in.
SegmentResult SegmentBody(std::string_view body);

std::vector<Sentence> SplitSentences(std::string_view text);

// Builds a normalized post from raw markup; used by both importers.
Post BuildPost(std::string id, PostKind kind, long score,
               std::string_view body, Diagnostics& diagnostics);
Comment BuildComment(std::string id, std::size_t order, std::string_view owner,
                     std::string_view body);

}  // namespace scenmine

#endif  // SCENMINE_CORPUS_H_
