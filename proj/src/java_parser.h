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

#ifndef SCENMINE_SRC_JAVA_PARSER_H_
#define SCENMINE_SRC_JAVA_PARSER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scenmine/snippet.h"

namespace scenmine::java {

enum class TokKind { kIdent, kNumber, kString, kChar, kPunct, kEnd };

struct Tok {
  TokKind kind = TokKind::kEnd;
  std::string text;
  std::size_t pos = 0;
  std::size_t end = 0;  // one past the last character
};

// Never fails: unterminated literals run to the end of the line and unknown
// characters become single-character punctuation.
std::vector<Tok> Tokenize(std::string_view line);

bool IsKeyword(std::string_view word);
bool IsPrimitive(std::string_view word);

// Recursive-descent parse of one logical line against the supported Java
// subset (imports, type and method headers, declarations, assignments,
// invocations, `new`, generics, class literals, control headers, lambdas).
std::optional<LineElements> ParseLine(std::string_view line);

// Pattern-based extraction that tolerates arbitrary syntax errors.
LineElements ScanIsland(std::string_view line);

}  // namespace scenmine::java

#endif  // SCENMINE_SRC_JAVA_PARSER_H_
