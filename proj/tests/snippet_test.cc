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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "scenmine/text.h"
#include "support/fixtures.h"

namespace scenmine {
namespace {

using testing::MakeCodeBlock;

ParsedSnippet Parse(const std::string& code, std::string post = "p") {
  ParsedSnippet s = ParseHybrid(MakeCodeBlock(code));
  s.post_id = std::move(post);
  return s;
}

TEST(ClassifySnippet, JavaScriptIsInvalid) {
  Validity v = ClassifySnippet(
      MakeCodeBlock("var jsonData; $.ajax({type: 'POST'})"));
  EXPECT_EQ(v, Validity::Invalid(InvalidReason::kJavaScript));
}

TEST(ClassifySnippet, XmlIsInvalid) {
  EXPECT_EQ(ClassifySnippet(MakeCodeBlock("<project><dependency/></project>")),
            Validity::Invalid(InvalidReason::kXml));
}

TEST(ClassifySnippet, JavaStatementIsValid) {
  EXPECT_TRUE(ClassifySnippet(MakeCodeBlock("Gson g = new Gson();")).valid);
}

TEST(ParseHybrid, InvalidSnippetCarriesNoElements) {
  for (const char* code : {"<project><dependency/></project>",
                           "var jsonData; $.ajax({type: 'POST'})",
                           "just some words that are not code at all"}) {
    ParsedSnippet s = Parse(code);
    EXPECT_FALSE(s.validity.valid) << code;
    EXPECT_TRUE(s.types_used.empty()) << code;
    EXPECT_TRUE(s.methods_used.empty()) << code;
  }
}

TEST(ParseHybrid, MalformedFirstLineIsRecovered) {
  ParsedSnippet s = Parse(
      "ObjectMapper mapper = new ObjectMapper() ... ;\n"
      "Data data = mapper.readValue(json, Data.class);\n"
      "String name = data.getName();\n");
  ASSERT_GE(s.line_outcomes.size(), 3u);
  EXPECT_EQ(s.line_outcomes[0].status, LineStatus::kIslandRecovered);
  EXPECT_EQ(s.line_outcomes[1].status, LineStatus::kGrammarOk);
  EXPECT_TRUE(s.validity.valid);
  EXPECT_TRUE(s.types_used.contains("ObjectMapper"));
}

TEST(ParseHybrid, ProseLineFailsEverywhere) {
  ParsedSnippet s = Parse("then you should call it again later");
  ASSERT_EQ(s.line_outcomes.size(), 1u);
  EXPECT_EQ(s.line_outcomes[0].status, LineStatus::kFailed);
  EXPECT_TRUE(s.line_outcomes[0].extracted.empty());
  EXPECT_TRUE(s.types_used.empty());
  EXPECT_FALSE(s.validity.valid);
}

TEST(ParseHybrid, TooManyFailedLinesIsSyntaxInvalid) {
  const std::string code =
      "Gson gson = new Gson();\n"
      "then call it;\nand call again;\nsome more words here;\n";
  ParsedSnippet strict = ParseHybrid(MakeCodeBlock(code), 0.5);
  EXPECT_EQ(strict.validity, Validity::Invalid(InvalidReason::kSyntax));
  EXPECT_FALSE(strict.line_outcomes.empty());
  ParsedSnippet lenient = ParseHybrid(MakeCodeBlock(code), 1.0);
  EXPECT_TRUE(lenient.validity.valid);
}

TEST(ParseHybrid, ErrorLineCountNeverExceedsLines) {
  ParsedSnippet s = Parse("int a = ;\nfoo(;\nGson g = new Gson();");
  EXPECT_LE(s.error_line_count, s.line_outcomes.size());
  EXPECT_LE(s.FailedLineCount(), s.line_outcomes.size());
}

TEST(ParseHybrid, DeterministicOutcomes) {
  const std::string code = testing::MotivatingThread()
                               .answers[0]
                               .blocks[1]
                               .code()
                               .raw;
  ParsedSnippet a = Parse(code);
  ParsedSnippet b = Parse(code);
  ASSERT_EQ(a.line_outcomes.size(), b.line_outcomes.size());
  for (std::size_t i = 0; i < a.line_outcomes.size(); ++i) {
    EXPECT_EQ(a.line_outcomes[i].status, b.line_outcomes[i].status);
    EXPECT_EQ(a.line_outcomes[i].extracted, b.line_outcomes[i].extracted);
  }
  EXPECT_EQ(a.types_used, b.types_used);
}

TEST(SplitLogicalLines, SemicolonsAndBraces) {
  auto lines = SplitLogicalLines(
      "class A {\n  void f() { int x = 1; g(x); }\n}");
  std::vector<std::string> expected = {"class A {", "void f() {",
                                       "int x = 1;", "g(x);"};
  EXPECT_EQ(lines, expected);
}

TEST(SplitLogicalLines, KeepsAnonymousBodyAndForHeader) {
  auto lines = SplitLogicalLines(
      "Type t = new TypeToken<List<Data>>(){}.getType();\n"
      "for (int i = 0; i < n; i++) {\n  use(i);\n}");
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "Type t = new TypeToken<List<Data>>(){}.getType();");
  EXPECT_EQ(lines[1], "for (int i = 0; i < n; i++) {");
}

TEST(SplitLogicalLines, IgnoresSeparatorsInLiteralsAndComments) {
  auto lines = SplitLogicalLines(
      "String s = \"a;b{c}\"; // trailing; comment\nchar c = ';';");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1], "char c = ';';");
}

TEST(ExtractApiElements, MotivatingSnippetDropsUserType) {
  Thread t = testing::MotivatingThread();
  ParsedSnippet s = ParseHybrid(t.answers[0].blocks[1].code());
  s.post_id = t.answers[0].id;
  ThreadTypeContext context = InferVariableTypes({s});
  CodeElements e = ExtractApiElements(s, context);
  for (const char* type : {"Type", "Gson", "TypeToken"})
    EXPECT_TRUE(e.types.contains(type)) << type;
  EXPECT_FALSE(e.types.contains("Data"));
  EXPECT_TRUE(e.methods.contains("fromJson"));
  EXPECT_TRUE(e.methods.contains("getType"));
}

TEST(ExtractApiElements, ChainedCallOnConstructor) {
  ParsedSnippet s = Parse(
      "class Data { }\nData d = new Gson().fromJson(s, Data.class);");
  CodeElements e = ExtractApiElements(s, InferVariableTypes({s}));
  EXPECT_EQ(e.types, (std::set<std::string>{"Gson"}));
  EXPECT_EQ(e.methods, (std::set<std::string>{"fromJson"}));
}

TEST(ExtractApiElements, NeverKeepsDeclaredUserTypes) {
  const std::vector<std::string> snippets = {
      "class Foo { }\nFoo f = new Foo();\nBar b = f.bar();",
      "interface Shape { }\nShape s = Shapes.circle();",
      "enum Color { RED }\nColor c = Color.RED;\nList<Color> all = load();"};
  for (const auto& code : snippets) {
    ParsedSnippet s = Parse(code);
    ThreadTypeContext context = InferVariableTypes({s});
    CodeElements e = ExtractApiElements(s, context);
    for (const auto& t : context.declared_user_types)
      EXPECT_FALSE(e.types.contains(t)) << code << " kept " << t;
  }
}

TEST(InferVariableTypes, ReceiverTypeComesFromAnotherAnswer) {
  ParsedSnippet a = Parse("ObjectMapper mapper = new ObjectMapper();", "a1");
  ParsedSnippet b = Parse("Data d = mapper.readValue(json, Data.class);", "a2");
  ThreadTypeContext context = InferVariableTypes({a, b});
  EXPECT_EQ(context.TypeOf("a2", "mapper"), "ObjectMapper");
  CodeElements e = ExtractApiElements(b, context);
  EXPECT_TRUE(e.types.contains("ObjectMapper"));
  EXPECT_TRUE(e.methods.contains("readValue"));
}

TEST(InferVariableTypes, EarliestBindingWinsWithDiagnostic) {
  ParsedSnippet a = Parse("Foo x = make();", "p1");
  ParsedSnippet b = Parse("Bar x = make();", "p2");
  Diagnostics d;
  ThreadTypeContext context = InferVariableTypes({a, b}, &d);
  EXPECT_EQ(context.variable_bindings.at("x"), "Foo");
  EXPECT_EQ(d.Count(Severity::kWarning), 1u);
  EXPECT_EQ(context.TypeOf("p2", "x"), "Bar");
  EXPECT_EQ(context.TypeOf("p3", "x"), "Foo");
}

TEST(InferVariableTypes, UserTypesNeverBound) {
  ParsedSnippet s = Parse("class Data { }\nData d = new Data();\nGson g = new Gson();");
  ThreadTypeContext context = InferVariableTypes({s});
  for (const auto& [var, type] : context.variable_bindings)
    EXPECT_FALSE(context.declared_user_types.contains(var));
  EXPECT_TRUE(context.declared_user_types.contains("Data"));
}

TEST(ResolveFqn, ExplicitImport) {
  ParsedSnippet s = Parse(
      "import com.restfb.json.JsonObject;\nJsonObject o = new JsonObject();");
  EXPECT_EQ(ResolveFqn("JsonObject", s), "com.restfb.json.JsonObject");
}

TEST(ResolveFqn, WildcardImportDoesNotResolve) {
  ParsedSnippet s = Parse("import com.foo.*;\nWidget w = new Widget();");
  EXPECT_EQ(ResolveFqn("Widget", s), std::nullopt);
}

TEST(ResolveFqn, QualifiedUseResolves) {
  ParsedSnippet s = Parse("org.json.JSONObject o = new org.json.JSONObject();");
  EXPECT_EQ(ResolveFqn("JSONObject", s), "org.json.JSONObject");
}

// Generated single-statement lines covering declarations, instantiation,
// calls and imports: both parsers must agree on the identifiers.
TEST(HybridParser, GrammarAndIslandAgreeOnWellFormedLines) {
  const std::vector<std::string> types = {"Gson", "ObjectMapper", "JSONArray",
                                          "TypeToken", "HttpClient"};
  const std::vector<std::string> methods = {"fromJson", "readValue", "length",
                                            "getType", "execute"};
  const std::vector<std::string> vars = {"gson", "mapper", "array", "client"};
  std::mt19937 rng(3);
  auto any = [&](const std::vector<std::string>& v) {
    return v[rng() % v.size()];
  };
  for (int i = 0; i < 200; ++i) {
    std::string type = any(types);
    std::string var = any(vars);
    std::string line;
    switch (i % 4) {
      case 0:
        line = type + " " + var + " = new " + type + "();";
        break;
      case 1:
        line = type + " " + var + " = " + any(vars) + "." + any(methods) +
               "(" + any(vars) + ");";
        break;
      case 2:
        line = var + "." + any(methods) + "();";
        break;
      case 3:
        line = "import com.example." + ToLower(type) + "." + type + ";";
        break;
    }
    auto grammar = ParseLineGrammar(line);
    ASSERT_TRUE(grammar.has_value()) << line;
    EXPECT_EQ(grammar->Identifiers(), ScanLineIsland(line).Identifiers())
        << line;
  }
}

}  // namespace
}  // namespace scenmine
