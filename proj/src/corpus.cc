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

#include "scenmine/corpus.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "scenmine/text.h"

namespace scenmine {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 19> kAbbreviations = {
    "e.g", "i.e", "etc", "vs", "mr", "mrs", "ms", "dr", "cf", "approx",
    "fig", "eg", "ie", "al", "resp", "incl", "esp", "jr", "ver"};

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  bool space = false;
  for (char c : Trim(text)) {
    if (IsSpace(c)) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

// Case-insensitive search for an opening <code> or <code ...> tag.
std::size_t FindCodeOpen(std::string_view body, std::size_t from,
                         std::size_t* tag_end) {
  while (true) {
    std::size_t lt = body.find('<', from);
    if (lt == std::string_view::npos) return lt;
    if (lt + 5 <= body.size() &&
        ToLower(body.substr(lt + 1, 4)) == "code" &&
        (lt + 5 == body.size() || body[lt + 5] == '>' || IsSpace(body[lt + 5]))) {
      std::size_t gt = body.find('>', lt);
      if (gt == std::string_view::npos) return std::string_view::npos;
      *tag_end = gt + 1;
      return lt;
    }
    from = lt + 1;
  }
}

std::size_t FindCodeClose(std::string_view body, std::size_t from) {
  while (true) {
    std::size_t lt = body.find("</", from);
    if (lt == std::string_view::npos) return lt;
    if (lt + 7 <= body.size() && ToLower(body.substr(lt + 2, 4)) == "code" &&
        body[lt + 6] == '>')
      return lt;
    from = lt + 2;
  }
}

std::string IdString(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw std::runtime_error("id must be a string or integer");
}

void AssignBlockSentenceIds(Post& post) {
  for (auto& block : post.blocks) {
    if (block.is_code()) continue;
    auto& text = std::get<TextBlock>(block.payload);
    for (auto& sentence : text.sentences) {
      sentence.container = SentenceContainer::kPostBlock;
      sentence.owner = post.id;
      sentence.block = block.index;
      sentence.id = post.id + "/b" + std::to_string(block.index) + "/s" +
                    std::to_string(sentence.index);
    }
  }
}

struct RawComment {
  std::string id;
  std::optional<long long> order;
  std::string created;
  std::string body;
};

std::vector<Comment> OrderComments(std::vector<RawComment> raw,
                                   std::string_view owner) {
  bool all_dated = !raw.empty() && std::all_of(raw.begin(), raw.end(),
                                               [](const RawComment& c) {
                                                 return !c.created.empty();
                                               });
  bool all_ordered = !raw.empty() && std::all_of(raw.begin(), raw.end(),
                                                 [](const RawComment& c) {
                                                   return c.order.has_value();
                                                 });
  if (all_dated) {
    std::stable_sort(raw.begin(), raw.end(),
                     [](const RawComment& a, const RawComment& b) {
                       return a.created < b.created;
                     });
  } else if (all_ordered) {
    std::stable_sort(raw.begin(), raw.end(),
                     [](const RawComment& a, const RawComment& b) {
                       return *a.order < *b.order;
                     });
  }
  std::vector<Comment> comments;
  comments.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    comments.push_back(BuildComment(raw[i].id, i, owner, raw[i].body));
  }
  return comments;
}

Post PostFromJson(const json& object, PostKind kind, Diagnostics& diagnostics,
                  const std::string& where) {
  if (!object.is_object()) throw std::runtime_error("post must be an object");
  if (!object.contains("id")) throw std::runtime_error("post missing \"id\"");
  std::string id = IdString(object.at("id"));
  long score = object.value("score", 0L);
  std::string body = object.value("body", std::string());
  Diagnostics local;
  Post post = BuildPost(id, kind, score, body, local);
  for (const auto& d : local.items())
    diagnostics.Add(d.severity, where + " post " + id, d.message);
  std::vector<RawComment> raw;
  if (object.contains("comments")) {
    for (const auto& c : object.at("comments")) {
      RawComment rc;
      if (!c.contains("id")) throw std::runtime_error("comment missing \"id\"");
      rc.id = IdString(c.at("id"));
      if (c.contains("order") && c.at("order").is_number_integer())
        rc.order = c.at("order").get<long long>();
      rc.created = c.value("creation_date", std::string());
      rc.body = c.value("body", std::string());
      raw.push_back(std::move(rc));
    }
  }
  post.comments = OrderComments(std::move(raw), post.id);
  return post;
}

void SortAndDeduplicate(LoadResult& result, std::string_view source) {
  std::stable_sort(result.threads.begin(), result.threads.end(),
                   [](const Thread& a, const Thread& b) {
                     return IdLess(a.id, b.id);
                   });
  std::vector<Thread> unique;
  for (auto& thread : result.threads) {
    if (!unique.empty() && unique.back().id == thread.id) {
      result.diagnostics.Error(std::string(source),
                               "duplicate thread id " + thread.id + " skipped");
      ++result.skipped;
      continue;
    }
    unique.push_back(std::move(thread));
  }
  result.threads = std::move(unique);
}

// Minimal reader for Stack Exchange dump rows: <row Attr="value" ... />.
struct XmlRow {
  std::size_t line = 0;
  std::map<std::string, std::string> attributes;
};

std::vector<XmlRow> ReadRows(std::string_view xml, Diagnostics& diagnostics,
                             std::string_view source) {
  std::vector<XmlRow> rows;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t counted = 0;
  while ((pos = xml.find("<row", pos)) != std::string_view::npos) {
    line += static_cast<std::size_t>(
        std::count(xml.begin() + static_cast<long>(counted),
                   xml.begin() + static_cast<long>(pos), '\n'));
    counted = pos;
    std::size_t end = xml.find("/>", pos);
    if (end == std::string_view::npos) {
      diagnostics.Error(std::string(source) + ":" + std::to_string(line),
                        "unterminated row");
      break;
    }
    XmlRow row;
    row.line = line;
    std::string_view body = xml.substr(pos + 4, end - pos - 4);
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && IsSpace(body[i])) ++i;
      std::size_t eq = body.find('=', i);
      if (eq == std::string_view::npos) break;
      std::string name(Trim(body.substr(i, eq - i)));
      std::size_t quote = eq + 1;
      while (quote < body.size() && IsSpace(body[quote])) ++quote;
      if (quote >= body.size() || (body[quote] != '"' && body[quote] != '\''))
        break;
      std::size_t close = body.find(body[quote], quote + 1);
      if (close == std::string_view::npos) break;
      row.attributes[name] =
          DecodeEntities(body.substr(quote + 1, close - quote - 1));
      i = close + 1;
    }
    rows.push_back(std::move(row));
    pos = end + 2;
  }
  return rows;
}

std::vector<std::string> ParseTags(std::string_view tags) {
  // "<java><json>" form.
  std::vector<std::string> out;
  std::size_t pos = 0;
  while ((pos = tags.find('<', pos)) != std::string_view::npos) {
    std::size_t end = tags.find('>', pos);
    if (end == std::string_view::npos) break;
    out.emplace_back(tags.substr(pos + 1, end - pos - 1));
    pos = end + 1;
  }
  return out;
}

}  // namespace

bool IdLess(const std::string& a, const std::string& b) {
  if (AllDigits(a) && AllDigits(b) && a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

std::vector<const Sentence*> Post::TextSentences() const {
  std::vector<const Sentence*> out;
  for (const auto& block : blocks) {
    if (block.is_code()) continue;
    for (const auto& sentence : block.text().sentences) out.push_back(&sentence);
  }
  return out;
}

Sentence Thread::TitleSentence() const {
  Sentence s;
  s.id = id + "/title";
  s.text = title;
  s.index = 0;
  s.container = SentenceContainer::kTitle;
  s.owner = id;
  return s;
}

const Post* Thread::FindPost(std::string_view post_id) const {
  if (question.id == post_id) return &question;
  for (const auto& answer : answers) {
    if (answer.id == post_id) return &answer;
  }
  return nullptr;
}

std::vector<Sentence> SplitSentences(std::string_view text) {
  std::vector<Sentence> out;
  auto emit = [&](std::size_t begin, std::size_t end) {
    std::string sentence = CollapseWhitespace(text.substr(begin, end - begin));
    if (sentence.empty()) return;
    Sentence s;
    s.text = std::move(sentence);
    s.index = out.size();
    out.push_back(std::move(s));
  };
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '\n' && IsSpace(text[j])) ++j;
      if (j < text.size() && text[j] == '\n') {
        emit(start, i);
        while (j < text.size() && IsSpace(text[j])) ++j;
        start = i = j;
        continue;
      }
      ++i;
      continue;
    }
    if (c != '.' && c != '?' && c != '!') {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    bool strong = false;
    while (run_end < text.size() &&
           (text[run_end] == '.' || text[run_end] == '?' ||
            text[run_end] == '!')) {
      if (text[run_end] != '.') strong = true;
      ++run_end;
    }
    std::size_t after = run_end;
    while (after < text.size() &&
           (text[after] == ')' || text[after] == '"' || text[after] == '\'' ||
            text[after] == ']')) {
      ++after;
    }
    bool at_gap = after == text.size() || IsSpace(text[after]);
    if (!at_gap) {
      i = run_end;
      continue;
    }
    if (!strong && run_end - i == 1) {
      // The word the period closes: an abbreviation or initial is no boundary.
      std::size_t word_start = i;
      while (word_start > start && !IsSpace(text[word_start - 1])) --word_start;
      std::string word = ToLower(text.substr(word_start, i - word_start));
      while (!word.empty() && (word.front() == '(' || word.front() == '"'))
        word.erase(word.begin());
      bool abbreviation =
          std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
          kAbbreviations.end();
      bool initial = word.size() == 1 &&
                     std::isalpha(static_cast<unsigned char>(word[0])) &&
                     std::isupper(static_cast<unsigned char>(text[i - 1]));
      if (abbreviation || initial) {
        i = run_end;
        continue;
      }
    }
    emit(start, after);
    start = i = after;
  }
  emit(start, text.size());
  return out;
}

SegmentResult SegmentBody(std::string_view body) {
  SegmentResult result;
  auto add_text = [&](std::string_view raw) {
    std::vector<Sentence> sentences = SplitSentences(StripMarkup(raw));
    if (sentences.empty()) return;
    ContentBlock block;
    block.index = result.blocks.size();
    block.payload = TextBlock{std::string(raw), std::move(sentences)};
    result.blocks.push_back(std::move(block));
  };
  auto add_code = [&](std::string_view raw) {
    if (IsBlank(raw)) return;
    CodeBlock code;
    code.raw = std::string(raw);
    std::string decoded = DecodeEntities(raw);
    std::istringstream in(decoded);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      code.lines.push_back(line);
    }
    ContentBlock block;
    block.index = result.blocks.size();
    block.payload = std::move(code);
    result.blocks.push_back(std::move(block));
  };

  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t content_start = 0;
    std::size_t open = FindCodeOpen(body, pos, &content_start);
    if (open == std::string_view::npos) {
      add_text(body.substr(pos));
      break;
    }
    add_text(body.substr(pos, open - pos));
    std::size_t close = FindCodeClose(body, content_start);
    if (close == std::string_view::npos) {
      result.diagnostics.Warn(
          "offset " + std::to_string(open),
          "unclosed <code> tag; remainder of body treated as code");
      add_code(body.substr(content_start));
      break;
    }
    add_code(body.substr(content_start, close - content_start));
    pos = close + 7;
  }
  return result;
}

Post BuildPost(std::string id, PostKind kind, long score,
               std::string_view body, Diagnostics& diagnostics) {
  Post post;
  post.id = std::move(id);
  post.kind = kind;
  post.score = score;
  SegmentResult segments = SegmentBody(body);
  diagnostics.Append(segments.diagnostics);
  post.blocks = std::move(segments.blocks);
  AssignBlockSentenceIds(post);
  return post;
}

Comment BuildComment(std::string id, std::size_t order, std::string_view owner,
                     std::string_view body) {
  Comment comment;
  comment.id = std::move(id);
  comment.order = order;
  comment.sentences = SplitSentences(StripMarkup(body));
  for (auto& sentence : comment.sentences) {
    sentence.container = SentenceContainer::kComment;
    sentence.owner = std::string(owner);
    sentence.comment = order;
    sentence.id = std::string(owner) + "/c" + comment.id + "/s" +
                  std::to_string(sentence.index);
  }
  return comment;
}

LoadResult ParseCorpusJsonl(std::string_view contents,
                            std::string_view source_name) {
  LoadResult result;
  std::istringstream in{std::string(contents)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    std::string where =
        std::string(source_name) + ":" + std::to_string(line_number);
    try {
      json record = json::parse(line);
      if (!record.is_object()) throw std::runtime_error("record is not an object");
      if (!record.contains("id")) throw std::runtime_error("missing \"id\"");
      if (!record.contains("question"))
        throw std::runtime_error("missing \"question\"");
      Diagnostics local;
      Thread thread;
      thread.id = IdString(record.at("id"));
      thread.title = CollapseWhitespace(
          DecodeEntities(record.value("title", std::string())));
      if (record.contains("tags")) {
        thread.tags = record.at("tags").get<std::vector<std::string>>();
      }
      thread.question =
          PostFromJson(record.at("question"), PostKind::kQuestion, local, where);
      if (record.contains("answers")) {
        for (const auto& answer : record.at("answers")) {
          thread.answers.push_back(
              PostFromJson(answer, PostKind::kAnswer, local, where));
        }
      }
      result.diagnostics.Append(local);
      result.threads.push_back(std::move(thread));
    } catch (const std::exception& e) {
      result.diagnostics.Error(where, std::string("record skipped: ") + e.what());
      ++result.skipped;
    }
  }
  SortAndDeduplicate(result, source_name);
  return result;
}

LoadResult ParseStackExchangeXml(std::string_view posts_xml,
                                 std::string_view comments_xml,
                                 std::string_view source_name) {
  LoadResult result;
  std::vector<XmlRow> post_rows =
      ReadRows(posts_xml, result.diagnostics, source_name);
  std::vector<XmlRow> comment_rows =
      ReadRows(comments_xml, result.diagnostics, source_name);

  std::map<std::string, std::vector<RawComment>> comments_by_post;
  for (const auto& row : comment_rows) {
    auto id = row.attributes.find("Id");
    auto post = row.attributes.find("PostId");
    if (id == row.attributes.end() || post == row.attributes.end()) continue;
    RawComment rc;
    rc.id = id->second;
    auto created = row.attributes.find("CreationDate");
    if (created != row.attributes.end()) rc.created = created->second;
    auto text = row.attributes.find("Text");
    if (text != row.attributes.end()) rc.body = text->second;
    comments_by_post[post->second].push_back(std::move(rc));
  }

  std::map<std::string, Thread> threads;
  std::vector<std::pair<std::string, Post>> answers;
  for (const auto& row : post_rows) {
    std::string where =
        std::string(source_name) + ":" + std::to_string(row.line);
    auto get = [&](const char* key) -> std::string {
      auto it = row.attributes.find(key);
      return it == row.attributes.end() ? std::string() : it->second;
    };
    std::string id = get("Id");
    std::string type = get("PostTypeId");
    if (id.empty() || (type != "1" && type != "2")) {
      if (id.empty()) {
        result.diagnostics.Error(where, "row without Id skipped");
        ++result.skipped;
      }
      continue;
    }
    long score = 0;
    try {
      score = get("Score").empty() ? 0 : std::stol(get("Score"));
    } catch (const std::exception&) {
      result.diagnostics.Warn(where, "non-numeric Score ignored");
    }
    Diagnostics local;
    PostKind kind = type == "1" ? PostKind::kQuestion : PostKind::kAnswer;
    Post post = BuildPost(id, kind, score, get("Body"), local);
    for (const auto& d : local.items())
      result.diagnostics.Add(d.severity, where, d.message);
    auto comments = comments_by_post.find(id);
    if (comments != comments_by_post.end())
      post.comments = OrderComments(std::move(comments->second), id);
    if (kind == PostKind::kQuestion) {
      Thread thread;
      thread.id = id;
      thread.title = CollapseWhitespace(get("Title"));
      thread.tags = ParseTags(get("Tags"));
      thread.question = std::move(post);
      threads.emplace(id, std::move(thread));
    } else {
      answers.emplace_back(get("ParentId"), std::move(post));
    }
  }
  for (auto& [parent, post] : answers) {
    auto it = threads.find(parent);
    if (it == threads.end()) {
      result.diagnostics.Warn(std::string(source_name),
                              "answer " + post.id + " has no question; skipped");
      continue;
    }
    it->second.answers.push_back(std::move(post));
  }
  for (auto& [id, thread] : threads) result.threads.push_back(std::move(thread));
  SortAndDeduplicate(result, source_name);
  return result;
}

LoadResult LoadCorpus(const std::string& path, CorpusFormat format) {
  std::string contents = ReadFile(path);
  if (format == CorpusFormat::kJsonl) return ParseCorpusJsonl(contents, path);
  namespace fs = std::filesystem;
  fs::path comments = fs::path(path).parent_path() / "Comments.xml";
  std::string comments_xml;
  if (fs::exists(comments)) comments_xml = ReadFile(comments.string());
  return ParseStackExchangeXml(contents, comments_xml, path);
}

}  // namespace scenmine
