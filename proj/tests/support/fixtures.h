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

#ifndef SCENMINE_TESTS_SUPPORT_FIXTURES_H_
#define SCENMINE_TESTS_SUPPORT_FIXTURES_H_

#include <string>
#include <vector>

#include "scenmine/catalog.h"
#include "scenmine/corpus.h"

namespace scenmine::testing {

// The motivating forum thread: a JSON-conversion question answered with a
// Gson snippet and an org.json snippet, followed by six comments.
std::string MotivatingCatalogJson();
std::string MotivatingThreadJsonl();
ApiCatalog MotivatingCatalog();
Thread MotivatingThread();

inline constexpr const char* kGsonApi = "com.google.code.gson";
inline constexpr const char* kOrgJsonApi = "org.json";

// Builds a code block from source text, one line per '\n'.
CodeBlock MakeCodeBlock(const std::string& source);

// Sentence with the given text placed in a post text block.
Sentence MakeSentence(const std::string& text, const std::string& id = "s",
                      std::size_t block = 0, std::size_t index = 0);

}  // namespace scenmine::testing

#endif  // SCENMINE_TESTS_SUPPORT_FIXTURES_H_
