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

#include "support/fixtures.h"

#include <sstream>

#include "json.hpp"

namespace scenmine::testing {

std::string MotivatingCatalogJson() {
  return R"([
  {"name": "com.google.code.gson", "modules": ["gson"],
   "packages": ["com.google.gson"],
   "types": ["com.google.gson.Gson", "com.google.gson.GsonBuilder",
             "com.google.gson.JsonParser", "com.google.gson.reflect.TypeToken"],
   "methods": {"Gson": ["fromJson", "toJson"], "TypeToken": ["getType"]},
   "dependencies": []},
  {"name": "org.immutables", "modules": ["gson", "value"],
   "packages": ["org.immutables.gson"],
   "types": ["org.immutables.gson.Gson", "org.immutables.value.Value"],
   "methods": {"Gson": ["fromJson"]},
   "dependencies": ["com.google.code.gson"]},
  {"name": "org.easygson", "modules": ["easygson"],
   "types": ["org.easygson.JsonEntity"],
   "methods": {"JsonEntity": ["create"]},
   "dependencies": ["com.google.code.gson"]},
  {"name": "org.json", "modules": ["org.json"], "packages": ["org.json"],
   "types": ["org.json.JSONObject", "org.json.JSONArray", "org.json.JSONTokener"],
   "methods": {"JSONArray": ["length", "getJSONObject"],
               "JSONObject": ["getString", "getInt"]},
   "dependencies": []},
  {"name": "com.fasterxml.jackson", "modules": ["jackson-databind"],
   "aliases": ["jackson"],
   "types": ["com.fasterxml.jackson.databind.ObjectMapper"],
   "methods": {"ObjectMapper": ["readValue", "writeValueAsString"]},
   "dependencies": []},
  {"name": "java.util", "modules": ["java.util"],
   "types": ["java.util.List", "java.util.ArrayList", "java.util.Map"],
   "methods": {"List": ["add", "get", "size"]}, "dependencies": []},
  {"name": "java.lang", "modules": ["java.lang"],
   "types": ["java.lang.String", "java.lang.Class", "java.lang.reflect.Type"],
   "methods": {"String": ["length", "substring"]}, "dependencies": []}
])";
}

std::string MotivatingThreadJsonl() {
  nlohmann::json thread;
  thread["id"] = "100";
  thread["title"] = "Convert a JSON string to a list of Java objects";
  thread["tags"] = {"java", "json"};
  thread["question"] = {
      {"id", "101"},
      {"score", 4},
      {"body",
       "<p>I need to parse a JSON array into a list of Java objects. "
       "I tried Gson but the resulting list is always empty.</p>"},
      {"comments", nlohmann::json::array()}};
  nlohmann::json answer;
  answer["id"] = "102";
  answer["score"] = 11;
  answer["body"] =
      "<p>Check the website first for an overview of the data format. "
      "You can use Gson to convert the JSON string into a list of objects. "
      "It needs a TypeToken to capture the generic type of the list. "
      "This works with Gson version 2.2.4 and later.</p>\n"
      "<pre><code>Gson gson = new Gson();\n"
      "Type listType = new TypeToken&lt;List&lt;Data&gt;&gt;(){}.getType();\n"
      "List&lt;Data&gt; items = gson.fromJson(jsonString, listType);\n"
      "Class Data {\n"
      "  String name;\n"
      "}\n</code></pre>\n"
      "<p>If you prefer org.json, the JSONArray class can be walked "
      "directly. Its JSONObject entries expose typed getters.</p>\n"
      "<pre><code>JSONArray array = new JSONArray(jsonString);\n"
      "for (int i = 0; i &lt; array.length(); i++) {\n"
      "  JSONObject item = array.getJSONObject(i);\n"
      "  String name = item.getString(\"name\");\n"
      "}\n</code></pre>";
  answer["comments"] = {
      {{"id", "c1"}, {"order", 0},
       {"body", "The Gson approach is broken in the newer versions."}},
      {{"id", "c2"}, {"order", 1},
       {"body", "It is only valid for version 2.2.4."}},
      {{"id", "c3"}, {"order", 2},
       {"body", "The conversion of JsonArray with org.json is a bit buggy."}},
      {{"id", "c4"}, {"order", 3}, {"body", "It works flawlessly for me."}},
      {{"id", "c5"}, {"order", 4}, {"body", "Thanks for the answer."}},
      {{"id", "c6"}, {"order", 5},
       {"body", "I will try both approaches tomorrow."}}};
  thread["answers"] = {answer};
  return thread.dump() + "\n";
}

ApiCatalog MotivatingCatalog() { return ParseCatalog(MotivatingCatalogJson()); }

Thread MotivatingThread() {
  LoadResult loaded = ParseCorpusJsonl(MotivatingThreadJsonl());
  return loaded.threads.at(0);
}

CodeBlock MakeCodeBlock(const std::string& source) {
  CodeBlock block;
  block.raw = source;
  std::istringstream in(source);
  for (std::string line; std::getline(in, line);) block.lines.push_back(line);
  return block;
}

Sentence MakeSentence(const std::string& text, const std::string& id,
                      std::size_t block, std::size_t index) {
  Sentence s;
  s.id = id;
  s.text = text;
  s.block = block;
  s.index = index;
  s.owner = "p";
  return s;
}

}  // namespace scenmine::testing
