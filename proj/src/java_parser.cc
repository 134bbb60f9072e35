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

#include "java_parser.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "scenmine/text.h"

namespace scenmine::java {
namespace {

constexpr std::array<std::string_view, 55> kKeywords = {
    "abstract", "assert",     "boolean",   "break",        "byte",
    "case",     "catch",      "char",      "class",        "const",
    "continue", "default",    "do",        "double",       "else",
    "enum",     "extends",    "final",     "finally",      "float",
    "for",      "goto",       "if",        "implements",   "import",
    "instanceof", "int",      "interface", "long",         "native",
    "new",      "package",    "private",   "protected",    "public",
    "return",   "short",      "static",    "strictfp",     "super",
    "switch",   "synchronized", "this",    "throw",        "throws",
    "transient", "try",       "void",      "volatile",     "while",
    "true",     "false",      "null",      "permits",      "sealed"};

constexpr std::array<std::string_view, 9> kPrimitives = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "var"};

constexpr std::array<std::string_view, 12> kModifiers = {
    "public", "private",  "protected", "static",   "final",    "abstract",
    "native", "transient", "volatile", "strictfp", "synchronized", "default"};

constexpr std::array<std::string_view, 3> kThreeCharPunct = {"...", "<<=",
                                                             ">>>"};
constexpr std::array<std::string_view, 18> kTwoCharPunct = {
    "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<"};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
         static_cast<unsigned char>(c) >= 0x80;
}
bool IsIdentPart(char c) {
  return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c));
}
bool StartsLower(std::string_view s) {
  return !s.empty() && (std::islower(static_cast<unsigned char>(s[0])) ||
                        s[0] == '_' || s[0] == '$');
}

template <std::size_t N>
bool Contains(const std::array<std::string_view, N>& list,
              std::string_view word) {
  return std::find(list.begin(), list.end(), word) != list.end();
}

// Types named by a dotted chain. Every camel-case segment is a type; a
// run of at least two lowercase package segments before the first one
// yields a qualified-name mapping. Returns the last camel-case segment.
std::string ClassifyChain(const std::vector<std::string>& segments,
                          LineElements& out) {
  std::size_t first = segments.size();
  for (std::size_t k = 0; k < segments.size(); ++k) {
    if (IsCamelCaseType(segments[k])) {
      first = k;
      break;
    }
  }
  if (first == segments.size()) return {};
  std::string last;
  for (std::size_t k = first; k < segments.size(); ++k) {
    if (IsCamelCaseType(segments[k])) {
      out.types.insert(segments[k]);
      last = segments[k];
    }
  }
  if (first >= 2 && std::all_of(segments.begin(),
                                segments.begin() + static_cast<long>(first),
                                [](const std::string& s) {
                                  return StartsLower(s);
                                })) {
    std::string fqn;
    for (std::size_t k = 0; k <= first; ++k) {
      if (k > 0) fqn += '.';
      fqn += segments[k];
    }
    out.imports[segments[first]] = fqn;
  }
  return last;
}

void AddImport(const std::vector<std::string>& segments, bool is_static,
               LineElements& out) {
  if (segments.empty()) return;
  std::size_t type_index = segments.size() - 1;
  if (is_static && segments.size() >= 2 &&
      !IsCamelCaseType(segments[type_index]))
    type_index = segments.size() - 2;
  if (is_static && segments.size() >= 2 &&
      IsCamelCaseType(segments[segments.size() - 2]))
    type_index = segments.size() - 2;
  if (!IsCamelCaseType(segments[type_index])) return;
  std::string fqn;
  for (std::size_t k = 0; k <= type_index; ++k) {
    if (k > 0) fqn += '.';
    fqn += segments[k];
  }
  out.types.insert(segments[type_index]);
  out.imports[segments[type_index]] = fqn;
}

enum class ExprKind { kOther, kAssign, kCall, kNew, kIncDec, kLambda };

class Parser {
 public:
  explicit Parser(std::vector<Tok> toks) : toks_(std::move(toks)) {}

  std::optional<LineElements> ParseTop() {
    using Alt = bool (Parser::*)();
    static constexpr std::array<Alt, 7> kAlternatives = {
        &Parser::ParsePackage,      &Parser::ParseImport,
        &Parser::ParseTypeHeader,   &Parser::ParseMethodHeader,
        &Parser::ParseControlTop,   &Parser::ParseLocalVarStatement,
        &Parser::ParseExprStatement};
    for (Alt alt : kAlternatives) {
      Mark mark = Save();
      if ((this->*alt)() && AtEnd()) return out_;
      Restore(mark);
    }
    return std::nullopt;
  }

 private:
  struct Mark {
    std::size_t pos;
    LineElements out;
    bool open_block;
  };

  Mark Save() const { return {pos_, out_, open_block_}; }
  void Restore(const Mark& mark) {
    pos_ = mark.pos;
    out_ = mark.out;
    open_block_ = mark.open_block;
  }

  const Tok& Peek(std::size_t ahead = 0) const {
    std::size_t index = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[index];
  }
  bool AtEnd() const { return Peek().kind == TokKind::kEnd; }
  bool Is(std::string_view text, std::size_t ahead = 0) const {
    const Tok& t = Peek(ahead);
    return (t.kind == TokKind::kPunct || t.kind == TokKind::kIdent) &&
           t.text == text;
  }
  bool IsIdent(std::size_t ahead = 0) const {
    const Tok& t = Peek(ahead);
    return t.kind == TokKind::kIdent && !IsKeyword(t.text);
  }
  bool Adjacent(std::size_t ahead) const {
    return Peek(ahead).pos == Peek(ahead - 1).end;
  }
  bool Accept(std::string_view text) {
    if (!Is(text)) return false;
    ++pos_;
    return true;
  }
  std::string TakeIdent() { return toks_[pos_++].text; }
  // An opening brace, optionally closed again by an empty body `{}`.
  bool AcceptOpen() {
    if (!Accept("{")) return false;
    Accept("}");
    return true;
  }

  // ---- declarations ------------------------------------------------------

  bool ParseAnnotation() {
    if (!Is("@") || Is("interface", 1)) return false;
    ++pos_;
    std::vector<std::string> segments;
    if (!ParseQualifiedName(segments)) return false;
    ClassifyChain(segments, out_);
    if (Is("(")) {
      ++pos_;
      if (!Accept(")")) {
        do {
          if (!ParseVarInit()) return false;
        } while (Accept(","));
        if (!Accept(")")) return false;
      }
    }
    return true;
  }

  bool ParseModifiers(std::set<std::string>* seen = nullptr) {
    while (true) {
      if (Is("@") && !Is("interface", 1)) {
        if (!ParseAnnotation()) return false;
        continue;
      }
      const Tok& t = Peek();
      if (t.kind == TokKind::kIdent && Contains(kModifiers, t.text)) {
        if (seen != nullptr) seen->insert(t.text);
        ++pos_;
        continue;
      }
      return true;
    }
  }

  bool ParseQualifiedName(std::vector<std::string>& segments) {
    if (!IsIdent()) return false;
    segments.push_back(TakeIdent());
    while (Is(".") && IsIdent(1)) {
      ++pos_;
      segments.push_back(TakeIdent());
    }
    return true;
  }

  bool ParseDims() {
    while (Is("[") && Is("]", 1)) pos_ += 2;
    return true;
  }

  // `simple` receives the last camel-case segment, empty for primitives.
  bool ParseType(std::string* simple = nullptr) {
    while (Is("@") && !Is("interface", 1)) {
      if (!ParseAnnotation()) return false;
    }
    const Tok& t = Peek();
    if (t.kind == TokKind::kIdent && IsPrimitive(t.text)) {
      ++pos_;
      ParseDims();
      if (simple != nullptr) simple->clear();
      return true;
    }
    if (!IsIdent()) return false;
    std::vector<std::string> segments;
    while (true) {
      segments.push_back(TakeIdent());
      if (Is("<") && !ParseTypeArgs()) return false;
      if (Is(".") && IsIdent(1)) {
        ++pos_;
        continue;
      }
      break;
    }
    std::string last = ClassifyChain(segments, out_);
    if (simple != nullptr) *simple = last;
    ParseDims();
    return true;
  }

  bool ParseTypeArgs() {
    if (!Accept("<")) return false;
    if (Accept(">")) return true;  // diamond
    do {
      if (Accept("?")) {
        if (Accept("extends") || Accept("super")) {
          if (!ParseType()) return false;
        }
      } else if (!ParseType()) {
        return false;
      }
    } while (Accept(","));
    return Accept(">");
  }

  bool ParseTypeParams() {
    if (!Accept("<")) return false;
    do {
      while (Is("@")) {
        if (!ParseAnnotation()) return false;
      }
      if (!IsIdent()) return false;
      ++pos_;
      if (Accept("extends")) {
        do {
          if (!ParseType()) return false;
        } while (Accept("&"));
      }
    } while (Accept(","));
    return Accept(">");
  }

  bool ParseVarInit() {
    if (Accept("{")) {
      if (Accept("}")) return true;
      do {
        if (Is("}")) break;  // trailing comma
        if (!ParseVarInit()) return false;
      } while (Accept(","));
      return Accept("}");
    }
    ExprKind kind;
    return ParseExpr(&kind);
  }

  bool ParseVarDeclarators(const std::string& type) {
    do {
      if (!IsIdent()) return false;
      std::string name = TakeIdent();
      ParseDims();
      if (!type.empty()) out_.declarations[name] = type;
      if (Accept("=") && !ParseVarInit()) return false;
    } while (Accept(","));
    return true;
  }

  bool ParseLocalVarDecl() {
    if (!ParseModifiers()) return false;
    std::string type;
    if (!ParseType(&type)) return false;
    if (!IsIdent()) return false;
    return ParseVarDeclarators(type);
  }

  bool ParseTerminator() {
    if (Accept(";")) return true;
    return open_block_ && AtEnd();
  }

  bool ParseLocalVarStatement() {
    return ParseLocalVarDecl() && ParseTerminator();
  }

  bool ParseExprStatement() {
    ExprKind kind;
    if (!ParseExpr(&kind)) return false;
    if (kind == ExprKind::kOther || kind == ExprKind::kLambda) return false;
    return ParseTerminator();
  }

  bool ParsePackage() {
    if (!Accept("package")) return false;
    std::vector<std::string> segments;
    return ParseQualifiedName(segments) && Accept(";");
  }

  bool ParseImport() {
    if (!Accept("import")) return false;
    bool is_static = Accept("static");
    std::vector<std::string> segments;
    if (!ParseQualifiedName(segments)) return false;
    bool wildcard = false;
    if (Is(".") && Is("*", 1)) {
      pos_ += 2;
      wildcard = true;
    }
    if (!Accept(";")) return false;
    if (!wildcard) AddImport(segments, is_static, out_);
    return true;
  }

  bool ParseTypeList() {
    do {
      if (!ParseType()) return false;
    } while (Accept(","));
    return true;
  }

  bool ParseTypeHeader() {
    if (!ParseModifiers()) return false;
    Accept("sealed");
    bool is_record = false;
    if (Is("@") && Is("interface", 1)) {
      pos_ += 2;
    } else if (Accept("class") || Accept("interface") || Accept("enum")) {
    } else if (Is("record") && IsIdent(1)) {
      ++pos_;
      is_record = true;
    } else {
      return false;
    }
    if (!IsIdent()) return false;
    out_.declared_types.insert(TakeIdent());
    if (Is("<") && !ParseTypeParams()) return false;
    if (is_record && !ParseParams()) return false;
    if (Accept("extends") && !ParseTypeList()) return false;
    if (Accept("implements") && !ParseTypeList()) return false;
    if (Accept("permits") && !ParseTypeList()) return false;
    return AcceptOpen();
  }

  bool ParseParams() {
    if (!Accept("(")) return false;
    if (Accept(")")) return true;
    do {
      if (!ParseModifiers()) return false;
      std::string type;
      if (!ParseType(&type)) return false;
      Accept("...");
      if (!IsIdent()) return false;
      std::string name = TakeIdent();
      ParseDims();
      if (!type.empty()) out_.declarations[name] = type;
    } while (Accept(","));
    return Accept(")");
  }

  bool ParseMethodHeader() {
    std::set<std::string> modifiers;
    if (!ParseModifiers(&modifiers)) return false;
    if (Is("<") && !ParseTypeParams()) return false;
    bool constructor = IsIdent() && IsCamelCaseType(Peek().text) && Is("(", 1);
    if (constructor) {
      ++pos_;
    } else {
      if (!Accept("void") && !ParseType()) return false;
      if (!IsIdent() || !Is("(", 1)) return false;
      ++pos_;
    }
    if (!ParseParams()) return false;
    ParseDims();
    if (Accept("throws") && !ParseTypeList()) return false;
    if (AcceptOpen()) return true;
    return !constructor && Accept(";");
  }

  // ---- statements --------------------------------------------------------

  bool ParseBody(bool nested) {
    if (Is("{")) {
      if (nested) return ParseBlock();
      return AcceptOpen();
    }
    return ParseStatement(nested);
  }

  bool ParseBlock() {
    if (!Accept("{")) return false;
    while (!Is("}")) {
      if (AtEnd() || !ParseStatement(true)) return false;
    }
    return Accept("}");
  }

  bool ParseControlTop() { return ParseControl(false); }

  bool ParseParenExpr() {
    ExprKind kind;
    return Accept("(") && ParseExpr(&kind) && Accept(")");
  }

  bool ParseForControl() {
    Mark mark = Save();
    if (ParseModifiers()) {
      std::string type;
      if (ParseType(&type) && IsIdent() && Is(":", 1)) {
        std::string name = TakeIdent();
        ++pos_;
        if (!type.empty()) out_.declarations[name] = type;
        ExprKind kind;
        return ParseExpr(&kind);
      }
    }
    Restore(mark);
    if (!Is(";")) {
      Mark init = Save();
      if (!ParseLocalVarDecl()) {
        Restore(init);
        if (!ParseExprList()) return false;
      }
    }
    if (!Accept(";")) return false;
    ExprKind kind;
    if (!Is(";") && !ParseExpr(&kind)) return false;
    if (!Accept(";")) return false;
    if (!Is(")") && !ParseExprList()) return false;
    return true;
  }

  bool ParseExprList() {
    do {
      ExprKind kind;
      if (!ParseExpr(&kind)) return false;
    } while (Accept(","));
    return true;
  }

  bool ParseControl(bool nested) {
    ExprKind kind;
    if (Accept("if")) return ParseParenExpr() && ParseBody(nested);
    if (Accept("else")) {
      if (Accept("if") && !ParseParenExpr()) return false;
      return ParseBody(nested);
    }
    if (Accept("while")) {
      if (!ParseParenExpr()) return false;
      return Accept(";") || ParseBody(nested);
    }
    if (Accept("do")) return ParseBody(nested);
    if (Accept("for")) {
      return Accept("(") && ParseForControl() && Accept(")") &&
             ParseBody(nested);
    }
    if (Accept("try")) {
      if (Accept("(")) {
        do {
          if (Is(")")) break;
          Mark mark = Save();
          if (!(ParseLocalVarDecl())) {
            Restore(mark);
            if (!ParseExpr(&kind)) return false;
          }
        } while (Accept(";"));
        if (!Accept(")")) return false;
      }
      return Is("{") && ParseBody(nested);
    }
    if (Accept("catch")) {
      if (!Accept("(") || !ParseModifiers()) return false;
      std::string type;
      if (!ParseType(&type)) return false;
      while (Accept("|")) {
        if (!ParseType()) return false;
      }
      if (!IsIdent()) return false;
      std::string name = TakeIdent();
      if (!type.empty()) out_.declarations[name] = type;
      return Accept(")") && Is("{") && ParseBody(nested);
    }
    if (Accept("finally")) return Is("{") && ParseBody(nested);
    if (Accept("switch") || Accept("synchronized")) {
      return ParseParenExpr() && Is("{") && ParseBody(nested);
    }
    if (Is("static") && Is("{", 1)) {
      ++pos_;
      return ParseBody(nested);
    }
    if (Accept("return")) {
      if (Accept(";")) return true;
      return ParseExpr(&kind) && Accept(";");
    }
    if (Accept("throw") || (Is("yield") && !Is("(", 1) && Accept("yield"))) {
      return ParseExpr(&kind) && Accept(";");
    }
    if (Accept("break") || Accept("continue")) {
      if (IsIdent()) ++pos_;
      return Accept(";");
    }
    if (Accept("assert")) {
      if (!ParseExpr(&kind)) return false;
      if (Accept(":") && !ParseExpr(&kind)) return false;
      return Accept(";");
    }
    if (Accept("case")) {
      if (!ParseExprList()) return false;
      if (!Accept(":") && !Accept("->")) return false;
      return AtEnd() || Is("}") || ParseStatement(nested);
    }
    if (Accept("default")) {
      if (!Accept(":") && !Accept("->")) return false;
      return AtEnd() || Is("}") || ParseStatement(nested);
    }
    return false;
  }

  bool ParseStatement(bool nested) {
    if (Is("{")) return nested ? ParseBlock() : AcceptOpen();
    if (Accept(";")) return true;
    Mark mark = Save();
    if (ParseControl(nested)) return true;
    Restore(mark);
    if (ParseLocalVarStatement()) return true;
    Restore(mark);
    if (ParseExprStatement()) return true;
    Restore(mark);
    return false;
  }

  // ---- expressions -------------------------------------------------------

  // Number of tokens forming an assignment operator at the cursor, or 0.
  std::size_t AssignOpLength() const {
    static constexpr std::array<std::string_view, 10> kOps = {
        "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<="};
    if (Peek().kind == TokKind::kPunct && Contains(kOps, Peek().text)) return 1;
    if (Is(">") && Is(">", 1) && Adjacent(1)) {
      if (Is("=", 2) && Adjacent(2)) return 3;
      if (Is(">", 2) && Adjacent(2) && Is("=", 3) && Adjacent(3)) return 4;
    }
    if (Is(">>>") && Is("=", 1) && Adjacent(1)) return 2;
    return 0;
  }

  std::size_t BinaryOpLength() const {
    static constexpr std::array<std::string_view, 17> kOps = {
        "||", "&&", "|", "^", "&", "==", "!=", "<", "<=",
        "+",  "-",  "*", "/", "%", "<<", "instanceof", ">>>"};
    const Tok& t = Peek();
    if (t.kind == TokKind::kEnd) return 0;
    if (Is(">")) {
      if (AssignOpLength() > 0) return 0;
      if (Is(">", 1) && Adjacent(1)) {
        if (Is(">", 2) && Adjacent(2)) return 3;
        return 2;
      }
      if (Is("=", 1) && Adjacent(1)) return 2;
      return 1;
    }
    if (Is(">>>") && AssignOpLength() > 0) return 0;
    if ((t.kind == TokKind::kPunct || t.text == "instanceof") &&
        Contains(kOps, t.text))
      return 1;
    return 0;
  }

  bool LambdaAhead() const {
    if (IsIdent() && Is("->", 1)) return true;
    if (!Is("(")) return false;
    int depth = 0;
    for (std::size_t k = 0;; ++k) {
      const Tok& t = Peek(k);
      if (t.kind == TokKind::kEnd) return false;
      if (Is("(", k)) ++depth;
      if (Is(")", k) && --depth == 0) return Is("->", k + 1);
    }
  }

  bool ParseLambda() {
    if (IsIdent()) {
      ++pos_;
    } else {
      if (!Accept("(")) return false;
      if (!Accept(")")) {
        do {
          Mark mark = Save();
          std::string type;
          if (ParseModifiers() && ParseType(&type) && IsIdent()) {
            std::string name = TakeIdent();
            if (!type.empty()) out_.declarations[name] = type;
          } else {
            Restore(mark);
            if (!IsIdent()) return false;
            ++pos_;
          }
        } while (Accept(","));
        if (!Accept(")")) return false;
      }
    }
    if (!Accept("->")) return false;
    if (Is("{")) {
      if (Peek(1).kind == TokKind::kEnd && !in_nested_block_) {
        ++pos_;
        open_block_ = true;
        return true;
      }
      ++in_nested_block_;
      bool ok = ParseBlock();
      --in_nested_block_;
      return ok;
    }
    ExprKind kind;
    return ParseExpr(&kind);
  }

  bool ParseExpr(ExprKind* kind) {
    if (LambdaAhead()) {
      *kind = ExprKind::kLambda;
      return ParseLambda();
    }
    if (!ParseTernary(kind)) return false;
    if (std::size_t n = AssignOpLength(); n > 0) {
      pos_ += n;
      ExprKind rhs;
      if (!ParseExpr(&rhs)) return false;
      *kind = ExprKind::kAssign;
    }
    return true;
  }

  bool ParseTernary(ExprKind* kind) {
    if (!ParseBinary(kind)) return false;
    if (Accept("?")) {
      ExprKind branch;
      if (!ParseExpr(&branch) || !Accept(":") || !ParseExpr(&branch))
        return false;
      *kind = ExprKind::kOther;
    }
    return true;
  }

  bool ParseBinary(ExprKind* kind) {
    if (!ParseUnary(kind)) return false;
    while (std::size_t n = BinaryOpLength()) {
      if (Accept("instanceof")) {
        Accept("final");
        std::string type;
        if (!ParseType(&type)) return false;
        if (IsIdent()) {
          std::string name = TakeIdent();
          if (!type.empty()) out_.declarations[name] = type;
        }
      } else {
        pos_ += n;
        ExprKind rhs;
        if (!ParseUnary(&rhs)) return false;
      }
      *kind = ExprKind::kOther;
    }
    return true;
  }

  bool CastFollows(bool primitive) const {
    const Tok& t = Peek();
    switch (t.kind) {
      case TokKind::kNumber:
      case TokKind::kString:
      case TokKind::kChar:
        return true;
      case TokKind::kIdent:
        return !IsKeyword(t.text) || t.text == "this" || t.text == "super" ||
               t.text == "new" || t.text == "true" || t.text == "false" ||
               t.text == "null";
      case TokKind::kPunct:
        return t.text == "(" || t.text == "!" || t.text == "~" ||
               (primitive && (t.text == "+" || t.text == "-"));
      case TokKind::kEnd:
        return false;
    }
    return false;
  }

  bool ParseUnary(ExprKind* kind) {
    if (Is("++") || Is("--")) {
      ++pos_;
      ExprKind inner;
      *kind = ExprKind::kIncDec;
      return ParseUnary(&inner);
    }
    if (Is("+") || Is("-") || Is("!") || Is("~")) {
      ++pos_;
      ExprKind inner;
      *kind = ExprKind::kOther;
      return ParseUnary(&inner);
    }
    if (Is("(") && !LambdaAhead()) {
      Mark mark = Save();
      ++pos_;
      bool primitive = Peek().kind == TokKind::kIdent &&
                       IsPrimitive(Peek().text);
      std::string type;
      if (ParseType(&type) && Accept(")") && CastFollows(primitive)) {
        ExprKind inner;
        *kind = ExprKind::kOther;
        return ParseUnary(&inner);
      }
      Restore(mark);
    }
    if (!ParsePostfix(kind)) return false;
    return true;
  }

  bool ParsePostfix(ExprKind* kind) {
    if (!ParsePrimary(kind)) return false;
    if (!ParseSelectors(kind)) return false;
    while (Is("++") || Is("--")) {
      ++pos_;
      *kind = ExprKind::kIncDec;
    }
    return true;
  }

  bool ParseArgs() {
    if (!Accept("(")) return false;
    if (Accept(")")) return true;
    if (!ParseExprList()) return false;
    return Accept(")");
  }

  bool ParsePrimary(ExprKind* kind) {
    *kind = ExprKind::kOther;
    const Tok& t = Peek();
    if (t.kind == TokKind::kNumber || t.kind == TokKind::kString ||
        t.kind == TokKind::kChar) {
      ++pos_;
      return true;
    }
    if (Accept("true") || Accept("false") || Accept("null")) return true;
    if (Accept("this") || Accept("super")) {
      if (Is("(")) {
        *kind = ExprKind::kCall;
        return ParseArgs();
      }
      return true;
    }
    if (Accept("(")) {
      ExprKind inner;
      return ParseExpr(&inner) && Accept(")");
    }
    if (Accept("new")) {
      *kind = ExprKind::kNew;
      return ParseCreator();
    }
    if (t.kind == TokKind::kIdent && (IsPrimitive(t.text) || t.text == "void")) {
      ++pos_;
      ParseDims();
      if (Is("::")) return true;
      return Accept(".") && Accept("class");
    }
    if (!IsIdent()) return false;
    std::vector<std::string> segments;
    segments.push_back(TakeIdent());
    while (Is(".") && IsIdent(1)) {
      ++pos_;
      segments.push_back(TakeIdent());
    }
    if (segments.size() >= 2 && StartsLower(segments.front()))
      out_.receivers.insert(segments.front());
    if (Is("(")) {
      std::string method = segments.back();
      segments.pop_back();
      ClassifyChain(segments, out_);
      if (IsCamelCaseType(method)) {
        out_.types.insert(method);
      } else {
        out_.methods.insert(method);
      }
      *kind = ExprKind::kCall;
      return ParseArgs();
    }
    ClassifyChain(segments, out_);
    return true;
  }

  bool ParseSelectors(ExprKind* kind) {
    while (true) {
      if (Is(".")) {
        if (Is("class", 1)) {
          pos_ += 2;
          *kind = ExprKind::kOther;
        } else if (Is("new", 1)) {
          pos_ += 2;
          if (!ParseCreator()) return false;
          *kind = ExprKind::kNew;
        } else if (Is("this", 1) || Is("super", 1)) {
          pos_ += 2;
          *kind = ExprKind::kOther;
        } else if (Is("<", 1)) {
          ++pos_;
          if (!ParseTypeArgs() || !IsIdent()) return false;
          out_.methods.insert(TakeIdent());
          if (!ParseArgs()) return false;
          *kind = ExprKind::kCall;
        } else if (IsIdent(1)) {
          ++pos_;
          std::string name = TakeIdent();
          if (Is("(")) {
            if (IsCamelCaseType(name)) {
              out_.types.insert(name);
            } else {
              out_.methods.insert(name);
            }
            if (!ParseArgs()) return false;
            *kind = ExprKind::kCall;
          } else {
            if (IsCamelCaseType(name)) out_.types.insert(name);
            *kind = ExprKind::kOther;
          }
        } else {
          return false;
        }
      } else if (Is("[")) {
        ++pos_;
        ExprKind inner;
        if (!ParseExpr(&inner) || !Accept("]")) return false;
        *kind = ExprKind::kOther;
      } else if (Is("::")) {
        ++pos_;
        if (Accept("new")) {
        } else if (IsIdent()) {
          out_.methods.insert(TakeIdent());
        } else {
          return false;
        }
        *kind = ExprKind::kOther;
      } else {
        return true;
      }
    }
  }

  bool ParseCreator() {
    if (Is("<") && !ParseTypeArgs()) return false;
    const Tok& t = Peek();
    if (t.kind == TokKind::kIdent && IsPrimitive(t.text)) {
      ++pos_;
    } else {
      if (!IsIdent()) return false;
      std::vector<std::string> segments;
      while (true) {
        segments.push_back(TakeIdent());
        if (Is("<") && !ParseTypeArgs()) return false;
        if (Is(".") && IsIdent(1)) {
          ++pos_;
          continue;
        }
        break;
      }
      ClassifyChain(segments, out_);
    }
    if (Is("[")) {
      while (Accept("[")) {
        ExprKind inner;
        if (!Is("]") && !ParseExpr(&inner)) return false;
        if (!Accept("]")) return false;
      }
      if (Is("{")) return ParseVarInit();
      return true;
    }
    if (!ParseArgs()) return false;
    if (Is("{")) {
      if (Is("}", 1)) {
        pos_ += 2;
      } else if (Peek(1).kind == TokKind::kEnd && !in_nested_block_) {
        ++pos_;
        open_block_ = true;
      } else {
        return false;
      }
    }
    return true;
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  LineElements out_;
  bool open_block_ = false;  // line ends by opening a body
  int in_nested_block_ = 0;
};

}  // namespace

bool IsKeyword(std::string_view word) { return Contains(kKeywords, word); }

bool IsPrimitive(std::string_view word) { return Contains(kPrimitives, word); }

std::vector<Tok> Tokenize(std::string_view line) {
  std::vector<Tok> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Tok tok;
    tok.pos = i;
    if (IsIdentStart(c)) {
      std::size_t j = i;
      while (j < line.size() && IsIdentPart(line[j])) ++j;
      tok.kind = TokKind::kIdent;
      tok.text = std::string(line.substr(i, j - i));
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '.' && i + 1 < line.size() &&
                std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
      std::size_t j = i;
      while (j < line.size() &&
             (IsIdentPart(line[j]) || line[j] == '.' ||
              ((line[j] == '+' || line[j] == '-') && j > i &&
               (line[j - 1] == 'e' || line[j - 1] == 'E'))))
        ++j;
      tok.kind = TokKind::kNumber;
      tok.text = std::string(line.substr(i, j - i));
      i = j;
    } else if (c == '"' || c == '\'') {
      std::size_t j = i + 1;
      if (c == '"' && line.substr(i, 3) == "\"\"\"") {
        std::size_t close = line.find("\"\"\"", i + 3);
        j = close == std::string_view::npos ? line.size() : close + 3;
      } else {
        while (j < line.size() && line[j] != c) {
          if (line[j] == '\\') ++j;
          ++j;
        }
        j = std::min(j + 1, line.size());
      }
      tok.kind = c == '"' ? TokKind::kString : TokKind::kChar;
      tok.text = std::string(line.substr(i, j - i));
      i = j;
    } else {
      tok.kind = TokKind::kPunct;
      std::string_view rest = line.substr(i);
      std::size_t len = 1;
      for (auto op : kThreeCharPunct) {
        if (rest.starts_with(op)) len = 3;
      }
      if (len == 1) {
        for (auto op : kTwoCharPunct) {
          if (rest.starts_with(op)) len = 2;
        }
      }
      // '>' stays single so nested generics close one level at a time.
      if (rest.starts_with(">>>")) len = 1;
      tok.text = std::string(rest.substr(0, len));
      i += len;
    }
    tok.end = i;
    toks.push_back(std::move(tok));
  }
  Tok end;
  end.kind = TokKind::kEnd;
  end.pos = end.end = line.size();
  toks.push_back(end);
  return toks;
}

std::optional<LineElements> ParseLine(std::string_view line) {
  return Parser(Tokenize(line)).ParseTop();
}

LineElements ScanIsland(std::string_view line) {
  LineElements out;
  std::vector<Tok> toks = Tokenize(line);
  toks.pop_back();  // kEnd
  auto is = [&](std::size_t k, std::string_view text) {
    return k < toks.size() && toks[k].text == text &&
           toks[k].kind != TokKind::kString && toks[k].kind != TokKind::kChar;
  };
  auto is_ident = [&](std::size_t k) {
    return k < toks.size() && toks[k].kind == TokKind::kIdent &&
           !IsKeyword(toks[k].text);
  };

  std::set<std::size_t> skip;  // declaration names, never types

  // import [static] a.b.C[.*]
  for (std::size_t k = 0; k < toks.size(); ++k) {
    if (!is(k, "import")) continue;
    std::size_t j = k + 1;
    bool is_static = is(j, "static");
    if (is_static) ++j;
    std::vector<std::string> segments;
    bool wildcard = false;
    while (is_ident(j)) {
      segments.push_back(toks[j].text);
      skip.insert(j);
      if (is(j + 1, ".") && is_ident(j + 2)) {
        j += 2;
        continue;
      }
      if (is(j + 1, ".") && is(j + 2, "*")) wildcard = true;
      break;
    }
    if (!wildcard) AddImport(segments, is_static, out);
  }

  // class X / Class X / interface X / enum X / record X
  for (std::size_t k = 0; k + 1 < toks.size(); ++k) {
    const std::string& word = toks[k].text;
    if (toks[k].kind != TokKind::kIdent) continue;
    if ((word == "class" || word == "Class" || word == "interface" ||
         word == "enum" || word == "record") &&
        is_ident(k + 1) && IsCamelCaseType(toks[k + 1].text) &&
        !(k > 0 && is(k - 1, "."))) {
      out.declared_types.insert(toks[k + 1].text);
      skip.insert(k);
      skip.insert(k + 1);
    }
  }

  for (std::size_t k = 0; k < toks.size(); ++k) {
    if (skip.contains(k) || !is_ident(k)) continue;
    bool after_dot = k > 0 && is(k - 1, ".");
    bool chain_head = !after_dot || (k >= 2 && !is_ident(k - 2));
    if (after_dot && !chain_head) continue;  // consumed by its chain
    // Gather Ident ('.' Ident)*.
    std::vector<std::string> segments{toks[k].text};
    std::size_t last = k;
    while (is(last + 1, ".") && is_ident(last + 2)) {
      last += 2;
      segments.push_back(toks[last].text);
    }
    bool is_new = k > 0 && is(k - 1, "new");
    bool call = is(last + 1, "(");
    if (!after_dot && segments.size() >= 2 && StartsLower(segments.front()))
      out.receivers.insert(segments.front());
    if (call && !is_new) {
      std::string method = segments.back();
      segments.pop_back();
      ClassifyChain(segments, out);
      if (IsCamelCaseType(method)) {
        out.types.insert(method);
      } else {
        out.methods.insert(method);
      }
    } else {
      std::string type = ClassifyChain(segments, out);
      // Declaration: Type [<...>] [[]] name followed by = ; , ) :
      std::size_t j = last + 1;
      if (is(j, "<")) {
        int depth = 0;
        for (; j < toks.size(); ++j) {
          if (is(j, "<")) ++depth;
          if (is(j, ">") && --depth == 0) break;
          if (is(j, ";") || is(j, "(") || is(j, "=")) break;
        }
        if (depth == 0) ++j;
      }
      while (is(j, "[") && is(j + 1, "]")) j += 2;
      if (!type.empty() && type == segments.back() && is_ident(j) &&
          StartsLower(toks[j].text)) {
        bool terminated = j + 1 >= toks.size() || is(j + 1, "=") ||
                          is(j + 1, ";") || is(j + 1, ",") ||
                          is(j + 1, ")") || is(j + 1, ":");
        if (terminated) {
          out.declarations[toks[j].text] = type;
          skip.insert(j);
        }
      }
    }
    // Method references: Foo::bar
    if (is(last + 1, "::") && is_ident(last + 2)) {
      out.methods.insert(toks[last + 2].text);
      skip.insert(last + 2);
    }
    k = last;
  }
  return out;
}

}  // namespace scenmine::java
