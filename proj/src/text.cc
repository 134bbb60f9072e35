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

#include "scenmine/text.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "scenmine/diagnostics.h"

namespace scenmine {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool IsAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)); }
bool IsUpper(char c) { return std::isupper(static_cast<unsigned char>(c)); }
bool IsLower(char c) { return std::islower(static_cast<unsigned char>(c)); }

// Acronym-style class names accepted despite having no lowercase letter.
constexpr std::array<std::string_view, 8> kAllCapsTypes = {
    "URL", "URI", "UUID", "XML", "HTML", "SQL", "DOM", "BSON"};

bool IsWordChar(char c) {
  return IsAlnum(c) || c == '_' || c == '$' ||
         static_cast<unsigned char>(c) >= 0x80;
}

void AppendUtf8(std::string& out, unsigned long code) {
  if (code < 0x80) {
    out += static_cast<char>(code);
  } else if (code < 0x800) {
    out += static_cast<char>(0xC0 | (code >> 6));
    out += static_cast<char>(0x80 | (code & 0x3F));
  } else if (code < 0x10000) {
    out += static_cast<char>(0xE0 | (code >> 12));
    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (code & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (code >> 18));
    out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (code & 0x3F));
  }
}

}  // namespace

std::string ToLower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && IsSpace(text.front())) text.remove_prefix(1);
  while (!text.empty() && IsSpace(text.back())) text.remove_suffix(1);
  return text;
}

bool IsBlank(std::string_view text) { return Trim(text).empty(); }

std::string DecodeEntities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '&') {
      out += text[i];
      continue;
    }
    std::size_t semi = text.find(';', i);
    if (semi == std::string_view::npos || semi - i > 10) {
      out += text[i];
      continue;
    }
    std::string_view entity = text.substr(i + 1, semi - i - 1);
    if (entity == "lt") {
      out += '<';
    } else if (entity == "gt") {
      out += '>';
    } else if (entity == "amp") {
      out += '&';
    } else if (entity == "quot") {
      out += '"';
    } else if (entity == "apos") {
      out += '\'';
    } else if (entity == "nbsp") {
      out += ' ';
    } else if (entity.size() > 1 && entity[0] == '#') {
      unsigned long code = 0;
      bool ok = true;
      bool hex = entity[1] == 'x' || entity[1] == 'X';
      for (std::size_t k = hex ? 2 : 1; k < entity.size(); ++k) {
        char c = entity[k];
        int digit;
        if (c >= '0' && c <= '9') {
          digit = c - '0';
        } else if (hex && std::isxdigit(static_cast<unsigned char>(c))) {
          digit = std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
        } else {
          ok = false;
          break;
        }
        code = code * (hex ? 16 : 10) + static_cast<unsigned long>(digit);
      }
      if (!ok || code == 0 || code > 0x10FFFF) {
        out += text[i];
        continue;
      }
      AppendUtf8(out, code);
    } else {
      out += text[i];
      continue;
    }
    i = semi;
  }
  return out;
}

std::string StripMarkup(std::string_view text) {
  static const std::array<std::string_view, 12> kBlockTags = {
      "p", "br", "li", "div", "pre", "blockquote", "ul", "ol",
      "h1", "h2", "h3", "hr"};
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '<' && i + 1 < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[i + 1])) ||
         text[i + 1] == '/' || text[i + 1] == '!')) {
      std::size_t close = text.find('>', i);
      if (close == std::string_view::npos) {
        out.append(text.substr(i));
        break;
      }
      std::string_view tag = text.substr(i + 1, close - i - 1);
      if (!tag.empty() && tag.front() == '/') tag.remove_prefix(1);
      std::size_t name_end = 0;
      while (name_end < tag.size() && IsAlnum(tag[name_end])) ++name_end;
      std::string name = ToLower(tag.substr(0, name_end));
      bool block = std::find(kBlockTags.begin(), kBlockTags.end(), name) !=
                   kBlockTags.end();
      out += block ? "\n\n" : " ";
      i = close + 1;
      continue;
    }
    out += c;
    ++i;
  }
  return DecodeEntities(out);
}

std::vector<Token> WordTokens(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    std::size_t end = i;
    // Trim punctuation, keeping inner characters intact.
    while (start < end && !IsWordChar(text[start])) ++start;
    while (end > start && !IsWordChar(text[end - 1])) --end;
    if (start >= end) continue;
    std::string word(text.substr(start, end - start));
    if (word.size() > 2) {
      std::string tail = ToLower(word.substr(word.size() - 2));
      char apostrophe = word[word.size() - 2];
      if (tail[1] == 's' && (apostrophe == '\'')) word.resize(word.size() - 2);
    }
    tokens.push_back({std::move(word), start});
  }
  return tokens;
}

std::vector<std::string> SentimentTokens(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    std::string lower = ToLower(current);
    // "isn't" -> "is" "n't"; "can't"/"won't" keep their stem.
    if (lower.size() > 3 && lower.ends_with("n't")) {
      out.push_back(lower.substr(0, lower.size() - 3));
      out.push_back("n't");
    } else if (lower.size() > 3 && lower.ends_with("nt") &&
               (lower == "dont" || lower == "doesnt" || lower == "isnt" ||
                lower == "wasnt" || lower == "cant" || lower == "wont" ||
                lower == "didnt" || lower == "arent" || lower == "shouldnt")) {
      out.push_back(lower.substr(0, lower.size() - 2));
      out.push_back("n't");
    } else {
      out.push_back(std::move(lower));
    }
    current.clear();
  };
  for (char c : text) {
    if (IsAlnum(c) || c == '\'' || c == '-' || c == '_' ||
        static_cast<unsigned char>(c) >= 0x80) {
      current += c;
    } else {
      flush();
    }
  }
  flush();
  // Strip quote characters left at word edges.
  for (auto& token : out) {
    while (!token.empty() && (token.front() == '\'' || token.front() == '-'))
      token.erase(token.begin());
    while (!token.empty() && token != "n't" &&
           (token.back() == '\'' || token.back() == '-'))
      token.pop_back();
  }
  std::erase_if(out, [](const std::string& t) { return t.empty(); });
  return out;
}

bool IsCamelCaseType(std::string_view token) {
  if (token.empty() || !IsUpper(token[0])) return false;
  bool has_lower = false;
  for (char c : token) {
    if (!IsAlnum(c)) return false;
    if (IsLower(c)) has_lower = true;
  }
  if (has_lower) return true;
  return std::find(kAllCapsTypes.begin(), kAllCapsTypes.end(), token) !=
         kAllCapsTypes.end();
}

bool IsQualifiedType(std::string_view token) {
  std::size_t dot = token.rfind('.');
  if (dot == std::string_view::npos || dot == 0) return false;
  for (const auto& segment : SplitDots(token.substr(0, dot))) {
    if (segment.empty() || !std::all_of(segment.begin(), segment.end(),
                                        [](char c) { return IsWordChar(c); }))
      return false;
  }
  return IsCamelCaseType(token.substr(dot + 1));
}

bool IsCodeLikeToken(std::string_view token) {
  if (token.empty()) return false;
  if (token.find('_') != std::string_view::npos) return true;
  if (token.find('(') != std::string_view::npos) return true;
  std::size_t dot = token.find('.');
  if (dot != std::string_view::npos && dot > 0 && dot + 1 < token.size())
    return true;
  // Camel case with an inner capital ("fromJson", "TypeToken").
  for (std::size_t i = 1; i < token.size(); ++i) {
    if (IsUpper(token[i]) && IsLower(token[i - 1])) return true;
  }
  return false;
}

std::string TerminalSegment(std::string_view dotted) {
  std::size_t dot = dotted.rfind('.');
  return std::string(dot == std::string_view::npos ? dotted
                                                   : dotted.substr(dot + 1));
}

std::vector<std::string> SplitDots(std::string_view dotted) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = dotted.find('.', start);
    parts.emplace_back(dotted.substr(start, dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return parts;
}

WordSet ParseWordList(std::string_view contents) {
  WordSet words;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view word = Trim(line);
    if (word.empty() || word.front() == '#') continue;
    words.insert(ToLower(word));
  }
  return words;
}

WordSet LoadWordList(const std::string& path) {
  return ParseWordList(ReadFile(path));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw InputError("error reading " + path);
  return buffer.str();
}

}  // namespace scenmine
