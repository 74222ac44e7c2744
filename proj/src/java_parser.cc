// Copyright 2026 The jstyle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Recursive-descent parser over the token stream. It does not build an AST;
// it validates the syntax of the supported Java subset and records the facts
// the checkers consume as it goes.

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "java_lexer.h"
#include "jstyle/source_model.h"

namespace jstyle {
namespace {

using internal::LexedFile;
using internal::Token;
using internal::TokenKind;

struct Expr {
  enum class Kind {
    kOther,
    kName,
    kDotted,
    kThis,
    kThisField,
    kSuper,
    kCall,
    kNew,
    kString,
  };
  Kind kind = Kind::kOther;
  std::string text;
  bool callUnqualified = false;
  int line = 0;
  // Leftmost operand of a top-level '+' chain, when it is a plain name.
  std::optional<std::string> concatHead;
};

struct TypeRef {
  std::string dotted;
  std::string erased;  // simple name plus "[]" per dimension
};

struct Modifiers {
  std::vector<std::string> annotations;
  std::unordered_set<std::string> keywords;
  std::size_t firstToken = 0;

  bool Has(std::string_view k) const {
    return keywords.count(std::string(k)) > 0;
  }
};

struct BodyContext {
  BodyFacts* facts = nullptr;
  int loopDepth = 0;
  bool inTestMethod = false;
  std::optional<std::string> thisType;
};

struct BlockInfo {
  std::size_t open = 0;
  std::size_t close = 0;
  int statements = 0;
};

std::string LastSegment(std::string_view dotted) {
  auto dot = dotted.rfind('.');
  return std::string(dot == std::string_view::npos ? dotted
                                                   : dotted.substr(dot + 1));
}

bool IsTestAnnotation(std::string_view name) { return name.ends_with("Test"); }

class Parser {
 public:
  Parser(std::string_view source, std::string_view path)
      : path_(path), lexed_(internal::LexJava(source, path)),
        toks_(lexed_.tokens) {
    is_decl_.assign(toks_.size(), false);
  }

  SourceFileModel Run() {
    model_.path = std::string(path_);
    model_.comments = lexed_.comments;
    model_.lineCount = lexed_.nonBlankLines;
    model_.totalLines = lexed_.totalLines;

    std::size_t start = pos_;
    ParseModifiers();
    if (IsIdentText("module") ||
        (IsIdentText("open") && PeekTok(1).text == "module")) {
      return std::move(model_);  // module declarations carry no facts
    }
    if (Is("package")) {
      ++pos_;
      PackageDecl pkg;
      pkg.line = Cur().line;
      pkg.name = QualifiedName(/*mark_decl=*/true);
      Expect(";");
      model_.packageDecl = pkg;
    } else {
      pos_ = start;
    }
    while (Is("import") || Is(";")) {
      if (Accept(";")) continue;
      ParseImport();
    }
    while (Cur().kind != TokenKind::kEnd) {
      if (Accept(";")) continue;
      Modifiers mods = ParseModifiers();
      if (!IsTypeDeclStart()) Fail(Cur(), "expected type declaration");
      ParseTypeDeclRest(mods, std::nullopt, std::nullopt, false);
    }
    PostProcess();
    return std::move(model_);
  }

 private:
  // ---- token helpers ----------------------------------------------------

  const Token& At(std::size_t i) const {
    return toks_[std::min(i, toks_.size() - 1)];
  }
  const Token& Cur() const { return At(pos_); }
  const Token& PeekTok(std::size_t k) const { return At(pos_ + k); }
  bool Is(std::string_view s) const { return Cur().Is(s); }
  bool IsIdentText(std::string_view s) const {
    return Cur().IsIdent() && Cur().text == s;
  }
  bool Accept(std::string_view s) {
    if (!Is(s)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void Fail(const Token& t, const std::string& what) const {
    std::string msg = what;
    if (t.kind == TokenKind::kEnd) {
      msg += " (found end of file)";
    } else {
      msg += " (found '" + std::string(t.text) + "')";
    }
    throw ParseError(std::string(path_), t.line, t.column, msg);
  }

  const Token& Expect(std::string_view s) {
    if (!Is(s)) Fail(Cur(), "expected '" + std::string(s) + "'");
    return toks_[pos_++];
  }

  std::size_t ExpectIdent() {
    if (!Cur().IsIdent()) Fail(Cur(), "expected identifier");
    return pos_++;
  }

  void MarkDecl(std::size_t i) { is_decl_[i] = true; }

  std::string QualifiedName(bool mark_decl) {
    std::size_t i = ExpectIdent();
    if (mark_decl) MarkDecl(i);
    std::string name(toks_[i].text);
    while (Is(".") && PeekTok(1).IsIdent()) {
      ++pos_;
      std::size_t j = ExpectIdent();
      if (mark_decl) MarkDecl(j);
      name += ".";
      name += toks_[j].text;
    }
    return name;
  }

  // Matching closer for the bracket at `open`, by token index.
  std::size_t MatchingClose(std::size_t open) const {
    std::string_view o = toks_[open].text;
    std::string_view c = o == "(" ? ")" : o == "[" ? "]" : "}";
    int depth = 0;
    for (std::size_t i = open; i < toks_.size(); ++i) {
      if (toks_[i].kind == TokenKind::kEnd) break;
      if (toks_[i].Is(o)) ++depth;
      if (toks_[i].Is(c) && --depth == 0) return i;
    }
    Fail(toks_[open], "unbalanced '" + std::string(o) + "'");
  }

  void SkipBalanced() { pos_ = MatchingClose(pos_) + 1; }

  // Runs `f` speculatively; the position is always restored.
  template <class F>
  bool Lookahead(F f) {
    std::size_t saved = pos_;
    bool ok = false;
    try {
      ok = f();
    } catch (const ParseError&) {
      ok = false;
    }
    pos_ = saved;
    return ok;
  }

  // ---- scopes and facts -------------------------------------------------

  void PushScope() { scopes_.emplace_back(); }
  void PopScope() { scopes_.pop_back(); }

  const std::string* LookupLocal(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return &f->second;
    }
    return nullptr;
  }

  void DeclareInScope(const std::string& name, const std::string& type) {
    if (scopes_.empty()) PushScope();
    scopes_.back()[name] = type;
  }

  void AddLocal(std::size_t name_tok, const std::string& type,
                LocalVarKind kind) {
    std::string name(toks_[name_tok].text);
    MarkDecl(name_tok);
    DeclareInScope(name, type);
    if (ctx_ == nullptr) return;
    LocalVarFact v;
    v.name = name;
    v.typeName = type;
    v.line = toks_[name_tok].line;
    v.kind = kind;
    ctx_->facts->localVars.push_back(std::move(v));
  }

  std::optional<JavadocFact> DocFor(std::size_t first_token) const {
    int doc = At(first_token).doc;
    if (doc < 0) return std::nullopt;
    const CommentFact& c = lexed_.comments[static_cast<std::size_t>(doc)];
    return ExtractJavadoc(c.text, c.startLine);
  }

  bool HasCommentBetween(std::size_t open, std::size_t close) const {
    const auto& next = lexed_.commentNextToken;
    auto it = std::upper_bound(next.begin(), next.end(), open);
    return it != next.end() && *it <= close;
  }

  void ComputeLocalUsage(BodyFacts& facts, std::size_t begin,
                         std::size_t end) const {
    if (facts.localVars.empty()) return;
    std::unordered_set<std::string_view> used;
    for (std::size_t i = begin; i < end && i < toks_.size(); ++i) {
      if (toks_[i].IsIdent() && !is_decl_[i]) used.insert(toks_[i].text);
    }
    for (LocalVarFact& v : facts.localVars) {
      v.usedFlag = used.count(v.name) > 0;
    }
  }

  // ---- declarations -----------------------------------------------------

  void ParseImport() {
    ImportFact imp;
    imp.line = Cur().line;
    MarkDecl(pos_);
    ++pos_;
    if (Is("static")) {
      imp.isStatic = true;
      ++pos_;
    }
    imp.importedName = QualifiedName(/*mark_decl=*/true);
    if (Is(".") && PeekTok(1).Is("*")) {
      pos_ += 2;
      imp.isWildcard = true;
    }
    Expect(";");
    model_.imports.push_back(std::move(imp));
  }

  std::string ParseAnnotation() {
    Expect("@");
    std::string name = QualifiedName(/*mark_decl=*/false);
    if (Is("(")) SkipBalanced();
    return LastSegment(name);
  }

  void SkipAnnotations() {
    while (Is("@") && !PeekTok(1).Is("interface")) ParseAnnotation();
  }

  Modifiers ParseModifiers() {
    static const std::unordered_set<std::string_view> kWords = {
        "public", "protected", "private",  "static",   "final",
        "abstract", "native",  "transient", "volatile", "strictfp",
    };
    Modifiers mods;
    mods.firstToken = pos_;
    while (true) {
      const Token& t = Cur();
      if (t.Is("@") && !PeekTok(1).Is("interface")) {
        mods.annotations.push_back(ParseAnnotation());
      } else if (t.kind == TokenKind::kKeyword && kWords.count(t.text)) {
        mods.keywords.insert(std::string(t.text));
        ++pos_;
      } else if (t.Is("synchronized") && !PeekTok(1).Is("(")) {
        mods.keywords.insert("synchronized");
        ++pos_;
      } else if (t.Is("default") && !PeekTok(1).Is(":") &&
                 !PeekTok(1).Is("->")) {
        mods.keywords.insert("default");
        ++pos_;
      } else if (t.IsIdent() && t.text == "sealed" &&
                 (PeekTok(1).kind == TokenKind::kKeyword ||
                  PeekTok(1).text == "non" || PeekTok(1).text == "record")) {
        mods.keywords.insert("sealed");
        ++pos_;
      } else if (t.IsIdent() && t.text == "non" && PeekTok(1).Is("-") &&
                 PeekTok(2).text == "sealed") {
        mods.keywords.insert("non-sealed");
        pos_ += 3;
      } else {
        break;
      }
    }
    return mods;
  }

  bool IsTypeDeclStart() const {
    if (Is("class") || Is("interface") || Is("enum")) return true;
    if (Is("@") && PeekTok(1).Is("interface")) return true;
    return IsIdentText("record") && PeekTok(1).IsIdent() &&
           (PeekTok(2).Is("(") || PeekTok(2).Is("<"));
  }

  std::vector<std::string> ParseTypeParams() {
    std::vector<std::string> names;
    Expect("<");
    while (true) {
      SkipAnnotations();
      std::size_t n = ExpectIdent();
      MarkDecl(n);
      names.emplace_back(toks_[n].text);
      if (Accept("extends")) {
        ParseType();
        while (Accept("&")) ParseType();
      }
      if (!Accept(",")) break;
    }
    Expect(">");
    return names;
  }

  void ParseTypeArgs() {
    Expect("<");
    if (Accept(">")) return;  // diamond
    while (true) {
      SkipAnnotations();
      if (Accept("?")) {
        if (Accept("extends") || Accept("super")) ParseType();
      } else {
        ParseType();
      }
      if (!Accept(",")) break;
    }
    Expect(">");
  }

  TypeRef ParseType() {
    SkipAnnotations();
    TypeRef ref;
    const Token& t = Cur();
    if (t.kind == TokenKind::kKeyword &&
        (internal::IsPrimitiveType(t.text) || t.text == "void")) {
      ref.dotted = std::string(t.text);
      ++pos_;
    } else {
      std::size_t first = ExpectIdent();
      ref.dotted = std::string(toks_[first].text);
      if (Is("<")) ParseTypeArgs();
      while (Is(".") && (PeekTok(1).IsIdent() || PeekTok(1).Is("@"))) {
        ++pos_;
        SkipAnnotations();
        std::size_t seg = ExpectIdent();
        ref.dotted += ".";
        ref.dotted += toks_[seg].text;
        if (Is("<")) ParseTypeArgs();
      }
    }
    ref.erased = LastSegment(ref.dotted);
    ref.erased += ParseDims();
    return ref;
  }

  std::string ParseDims() {
    std::string dims;
    while (true) {
      std::size_t saved = pos_;
      SkipAnnotations();
      if (Is("[") && PeekTok(1).Is("]")) {
        pos_ += 2;
        dims += "[]";
      } else {
        pos_ = saved;
        break;
      }
    }
    return dims;
  }

  Visibility VisibilityOf(const Modifiers& mods,
                          std::optional<TypeKind> enclosing) const {
    if (mods.Has("public")) return Visibility::kPublic;
    if (mods.Has("protected")) return Visibility::kProtected;
    if (mods.Has("private")) return Visibility::kPrivate;
    if (enclosing == TypeKind::kInterface) return Visibility::kPublic;
    return Visibility::kPackage;
  }

  // Parses from the class/interface/enum/record keyword onwards. Returns the
  // new type index, or nullopt for annotation types (which carry no facts).
  std::optional<std::size_t> ParseTypeDeclRest(
      const Modifiers& mods, std::optional<std::size_t> outer,
      std::optional<TypeKind> enclosing_kind, bool is_local) {
    if (Is("@")) {
      pos_ += 2;  // '@' 'interface'
      MarkDecl(ExpectIdent());
      if (!Is("{")) Fail(Cur(), "expected '{'");
      SkipBalanced();
      return std::nullopt;
    }
    TypeFact t;
    if (Accept("class")) {
      t.kind = TypeKind::kClass;
    } else if (Accept("interface")) {
      t.kind = TypeKind::kInterface;
    } else if (Accept("enum")) {
      t.kind = TypeKind::kEnum;
    } else if (IsIdentText("record")) {
      ++pos_;
      t.kind = TypeKind::kRecord;
    } else {
      Fail(Cur(), "expected type declaration");
    }
    std::size_t name_tok = ExpectIdent();
    MarkDecl(name_tok);
    t.name = std::string(toks_[name_tok].text);
    t.line = toks_[name_tok].line;
    t.visibility = VisibilityOf(mods, enclosing_kind);
    t.javadoc = DocFor(mods.firstToken);
    t.isNested = outer.has_value();
    t.isLocal = is_local;
    t.outer = outer;
    t.annotations = mods.annotations;
    if (Is("<")) t.typeParams = ParseTypeParams();
    if (t.kind == TypeKind::kRecord) {
      Expect("(");
      while (!Is(")")) {
        ParseModifiers();
        ParseType();
        Accept("...");
        MarkDecl(ExpectIdent());
        if (!Accept(",")) break;
      }
      Expect(")");
    }
    if (Accept("extends")) {
      if (t.kind == TypeKind::kInterface) {
        t.interfaces.push_back(ParseType().dotted);
        while (Accept(",")) t.interfaces.push_back(ParseType().dotted);
      } else {
        t.superclass = ParseType().dotted;
      }
    }
    if (Accept("implements")) {
      t.interfaces.push_back(ParseType().dotted);
      while (Accept(",")) t.interfaces.push_back(ParseType().dotted);
    }
    if (IsIdentText("permits")) {
      ++pos_;
      ParseType();
      while (Accept(",")) ParseType();
    }
    std::size_t idx = model_.types.size();
    model_.types.push_back(std::move(t));
    type_stack_.push_back(idx);
    ParseClassBody(idx);
    type_stack_.pop_back();
    return idx;
  }

  void ParseClassBody(std::size_t idx) {
    Expect("{");
    // Declarations inside a type body never see locals of an enclosing
    // method as their own scope, but captured names stay visible.
    if (model_.types[idx].kind == TypeKind::kEnum) ParseEnumConstants(idx);
    while (!Is("}")) {
      if (Cur().kind == TokenKind::kEnd) Fail(Cur(), "expected '}'");
      ParseMember(idx);
    }
    Expect("}");
  }

  void ParseEnumConstants(std::size_t idx) {
    BodyFacts facts;
    BodyContext ctx;
    ctx.facts = &facts;
    ctx.thisType = model_.types[idx].name;
    BodyContext* saved = ctx_;
    ctx_ = &ctx;
    std::size_t begin = pos_;
    while (!Is(";") && !Is("}")) {
      SkipAnnotations();
      MarkDecl(ExpectIdent());
      if (Is("(")) ParseArguments();
      if (Is("{")) ParseAnonymousBody();
      if (!Accept(",")) break;
    }
    Accept(";");
    ctx_ = saved;
    ComputeLocalUsage(facts, begin, pos_);
    if (facts != BodyFacts{}) {
      model_.types[idx].initializers.push_back(std::move(facts));
    }
  }

  // Members of a named type (`type_idx` set) or of an anonymous class body
  // (`type_idx` empty, facts merged into the enclosing body).
  void ParseMember(std::optional<std::size_t> type_idx) {
    if (Accept(";")) return;
    const bool anonymous = !type_idx.has_value();
    std::optional<TypeKind> owner_kind;
    std::string owner_name;
    if (!anonymous) {
      owner_kind = model_.types[*type_idx].kind;
      owner_name = model_.types[*type_idx].name;
    }

    if (Is("{") || (Is("static") && PeekTok(1).Is("{"))) {
      Accept("static");
      ParseInitializerBlock(type_idx);
      return;
    }

    Modifiers mods = ParseModifiers();
    if (IsTypeDeclStart()) {
      std::optional<std::size_t> outer = type_idx;
      if (anonymous && !type_stack_.empty()) outer = type_stack_.back();
      int line = PeekTok(1).line;
      std::optional<std::size_t> inner =
          ParseTypeDeclRest(mods, outer, owner_kind, anonymous);
      if (inner && !anonymous) {
        MemberFact m;
        m.kind = MemberKind::kInnerType;
        m.name = model_.types[*inner].name;
        m.line = model_.types[*inner].line;
        m.visibility = model_.types[*inner].visibility;
        m.annotations = mods.annotations;
        m.javadoc = model_.types[*inner].javadoc;
        m.innerTypeIndex = inner;
        model_.types[*type_idx].members.push_back(std::move(m));
      }
      (void)line;
      return;
    }

    std::vector<std::string> type_params;
    if (Is("<")) type_params = ParseTypeParams();

    const bool in_interface = owner_kind == TypeKind::kInterface;
    MemberFact m;
    m.annotations = mods.annotations;
    m.javadoc = DocFor(mods.firstToken);
    m.typeParams = type_params;
    m.visibility = VisibilityOf(mods, owner_kind);
    m.isFinal = mods.Has("final");

    const bool ctor_like = !anonymous && Cur().IsIdent() &&
                           Cur().text == owner_name;
    if (ctor_like && PeekTok(1).Is("(")) {
      std::size_t name_tok = ExpectIdent();
      MarkDecl(name_tok);
      m.kind = MemberKind::kConstructor;
      m.name = owner_name;
      m.line = toks_[name_tok].line;
      if (owner_kind == TypeKind::kEnum) m.visibility = Visibility::kPrivate;
      PushScope();
      m.params = ParseFormalParameters();
      ParseThrows(m);
      m.body = ParseMemberBody(m, type_idx);
      PopScope();
      model_.types[*type_idx].members.push_back(std::move(m));
      return;
    }
    if (ctor_like && owner_kind == TypeKind::kRecord && PeekTok(1).Is("{")) {
      std::size_t name_tok = ExpectIdent();
      MarkDecl(name_tok);
      m.kind = MemberKind::kConstructor;
      m.name = owner_name;
      m.line = toks_[name_tok].line;
      PushScope();
      m.body = ParseMemberBody(m, type_idx);
      PopScope();
      model_.types[*type_idx].members.push_back(std::move(m));
      return;
    }

    TypeRef type = ParseType();
    std::size_t name_tok = ExpectIdent();
    MarkDecl(name_tok);
    m.name = std::string(toks_[name_tok].text);
    m.line = toks_[name_tok].line;

    if (Is("(")) {
      const bool is_static = mods.Has("static");
      m.kind = is_static ? MemberKind::kStaticMethod
                         : MemberKind::kInstanceMethod;
      PushScope();
      m.params = ParseFormalParameters();
      std::string dims = ParseDims();
      m.returnTypeName = type.erased + dims;
      ParseThrows(m);
      if (Is("{")) {
        m.body = ParseMemberBody(m, type_idx);
      } else {
        if (Accept("default")) ParseVariableInitializer();
        Expect(";");
        m.isAbstract = true;
      }
      PopScope();
      if (!anonymous) model_.types[*type_idx].members.push_back(std::move(m));
      return;
    }

    // Field declarators.
    const bool is_static = mods.Has("static") || in_interface;
    const bool is_final = mods.Has("final") || in_interface;
    while (true) {
      MemberFact f;
      f.kind = is_static ? MemberKind::kStaticField : MemberKind::kInstanceField;
      f.name = std::string(toks_[name_tok].text);
      f.line = toks_[name_tok].line;
      f.visibility = m.visibility;
      f.isFinal = is_final;
      f.isStaticFinal = is_static && is_final;
      f.javadoc = m.javadoc;
      f.annotations = m.annotations;
      f.fieldTypeName = type.erased + ParseDims();
      if (Accept("=")) {
        BodyFacts facts;
        BodyContext ctx;
        ctx.facts = anonymous ? ctx_->facts : &facts;
        ctx.thisType = anonymous ? std::nullopt
                                 : std::optional<std::string>(owner_name);
        BodyContext* saved = ctx_;
        ctx_ = &ctx;
        std::size_t begin = pos_;
        ParseVariableInitializer();
        ctx_ = saved;
        if (!anonymous) {
          ComputeLocalUsage(facts, begin, pos_);
          f.body = std::move(facts);
        }
      }
      if (!anonymous) model_.types[*type_idx].members.push_back(std::move(f));
      if (!Accept(",")) break;
      name_tok = ExpectIdent();
      MarkDecl(name_tok);
    }
    Expect(";");
  }

  void ParseThrows(MemberFact& m) {
    if (!Accept("throws")) return;
    do {
      m.thrownTypes.push_back(LastSegment(ParseType().dotted));
    } while (Accept(","));
  }

  std::vector<Param> ParseFormalParameters() {
    std::vector<Param> params;
    Expect("(");
    while (!Is(")")) {
      ParseModifiers();
      TypeRef t = ParseType();
      std::string type = t.erased;
      if (Accept("...")) type += "[]";
      if (Is("this")) {  // receiver parameter
        ++pos_;
      } else if (Cur().IsIdent() && PeekTok(1).Is(".") &&
                 PeekTok(2).Is("this")) {
        pos_ += 3;
      } else {
        std::size_t n = ExpectIdent();
        MarkDecl(n);
        type += ParseDims();
        params.push_back({std::string(toks_[n].text), type});
        DeclareInScope(params.back().name, type);
      }
      if (!Accept(",")) break;
    }
    Expect(")");
    return params;
  }

  BodyContext MakeBodyContext(const MemberFact& m,
                              std::optional<std::size_t> type_idx,
                              BodyFacts* own) const {
    BodyContext ctx;
    bool test = m.name.starts_with("test");
    for (const std::string& a : m.annotations) test = test || IsTestAnnotation(a);
    ctx.inTestMethod = test;
    if (type_idx) {
      ctx.facts = own;
      ctx.thisType = model_.types[*type_idx].name;
    } else {
      ctx.facts = ctx_->facts;
    }
    return ctx;
  }

  std::optional<BodyFacts> ParseMemberBody(const MemberFact& m,
                                           std::optional<std::size_t> type_idx) {
    BodyFacts facts;
    BodyContext ctx = MakeBodyContext(m, type_idx, &facts);
    BodyContext* saved = ctx_;
    ctx_ = &ctx;
    std::size_t begin = pos_;
    ParseBlock();
    ctx_ = saved;
    if (!type_idx) return std::nullopt;
    ComputeLocalUsage(facts, begin, pos_);
    return facts;
  }

  void ParseInitializerBlock(std::optional<std::size_t> type_idx) {
    BodyFacts facts;
    BodyContext ctx;
    if (type_idx) {
      ctx.facts = &facts;
      ctx.thisType = model_.types[*type_idx].name;
    } else {
      ctx.facts = ctx_->facts;
    }
    BodyContext* saved = ctx_;
    ctx_ = &ctx;
    std::size_t begin = pos_;
    ParseBlock();
    ctx_ = saved;
    if (type_idx) {
      ComputeLocalUsage(facts, begin, pos_);
      model_.types[*type_idx].initializers.push_back(std::move(facts));
    }
  }

  void ParseAnonymousBody() {
    BodyContext* saved = ctx_;
    BodyFacts scratch;
    BodyContext ctx;
    ctx.facts = saved ? saved->facts : &scratch;
    ctx.inTestMethod = saved && saved->inTestMethod;
    ctx_ = &ctx;
    Expect("{");
    while (!Is("}")) {
      if (Cur().kind == TokenKind::kEnd) Fail(Cur(), "expected '}'");
      ParseMember(std::nullopt);
    }
    Expect("}");
    ctx_ = saved;
  }

  // ---- statements -------------------------------------------------------

  BlockInfo ParseBlock() {
    BlockInfo info;
    info.open = pos_;
    Expect("{");
    PushScope();
    while (!Is("}")) {
      if (Cur().kind == TokenKind::kEnd) Fail(Cur(), "expected '}'");
      ParseBlockStatement();
      ++info.statements;
    }
    PopScope();
    info.close = pos_;
    Expect("}");
    return info;
  }

  bool IsLocalTypeDeclStart() {
    return Lookahead([&] {
      while (true) {
        if (Is("@") && !PeekTok(1).Is("interface")) {
          ParseAnnotation();
        } else if (Is("abstract") || Is("final") || Is("static") ||
                   Is("strictfp")) {
          ++pos_;
        } else if (IsIdentText("sealed")) {
          ++pos_;
        } else if (IsIdentText("non") && PeekTok(1).Is("-")) {
          pos_ += 3;
        } else {
          break;
        }
      }
      return IsTypeDeclStart();
    });
  }

  void SkipLocalModifiers() {
    while (true) {
      if (Is("@")) {
        ParseAnnotation();
      } else if (!Accept("final")) {
        break;
      }
    }
  }

  bool LooksLikeLocalVarDecl() {
    return Lookahead([&] {
      SkipLocalModifiers();
      ParseType();
      if (!Cur().IsIdent()) return false;
      const Token& n = PeekTok(1);
      return n.Is("=") || n.Is(";") || n.Is(",") || n.Is("[") || n.Is(":");
    });
  }

  bool IsYieldStatement() const {
    if (!IsIdentText("yield")) return false;
    const Token& n = PeekTok(1);
    static const std::unordered_set<std::string_view> kNotYield = {
        "=", ".", "[", "++", "--", "+=", "-=", "*=", "/=", "%=", "&=",
        "|=", "^=", "<<=", "->", ":", ";", ">", "<", "==", "!="};
    return n.kind != TokenKind::kOperator || !kNotYield.count(n.text) ||
           n.Is("(");
  }

  void ParseBlockStatement() {
    if (IsLocalTypeDeclStart()) {
      Modifiers mods = ParseModifiers();
      std::optional<std::size_t> outer;
      if (!type_stack_.empty()) outer = type_stack_.back();
      ParseTypeDeclRest(mods, outer, std::nullopt, true);
      return;
    }
    if (IsYieldStatement()) {
      ++pos_;
      ParseExpression();
      Expect(";");
      return;
    }
    if (LooksLikeLocalVarDecl()) {
      ParseLocalVarDecl(LocalVarKind::kLocal);
      Expect(";");
      return;
    }
    ParseStatement();
  }

  void ParseLocalVarDecl(LocalVarKind kind) {
    SkipLocalModifiers();
    TypeRef t = ParseType();
    while (true) {
      std::size_t n = ExpectIdent();
      std::string type = t.erased + ParseDims();
      MarkDecl(n);
      DeclareInScope(std::string(toks_[n].text), type);
      if (Accept("=")) {
        Expr init = ParseVariableInitializer();
        if (t.erased == "var") {
          if (init.kind == Expr::Kind::kNew) {
            type = init.text;
          } else if (init.kind == Expr::Kind::kString) {
            type = "String";
          }
        }
      }
      AddLocal(n, type, kind);
      if (!Accept(",")) break;
    }
  }

  void ParseBodyStatement() {
    PushScope();
    ParseBlockStatement();
    PopScope();
  }

  std::size_t BeginLoop(int line, LoopKind kind) {
    if (ctx_ == nullptr) return 0;
    ctx_->facts->loops.push_back({line, line, kind});
    ++ctx_->loopDepth;
    return ctx_->facts->loops.size() - 1;
  }

  void EndLoop(std::size_t idx) {
    if (ctx_ == nullptr) return;
    --ctx_->loopDepth;
    ctx_->facts->loops[idx].endLine = At(pos_ - 1).endLine;
  }

  void ParseStatement() {
    const Token& t = Cur();
    if (t.Is("{")) {
      ParseBlock();
    } else if (Accept(";")) {
    } else if (t.Is("if")) {
      ++pos_;
      ParseParenExpression();
      ParseBodyStatement();
      if (Accept("else")) ParseBodyStatement();
    } else if (t.Is("for")) {
      ParseFor();
    } else if (t.Is("while")) {
      std::size_t loop = BeginLoop(t.line, LoopKind::kWhile);
      ++pos_;
      ParseParenExpression();
      ParseBodyStatement();
      EndLoop(loop);
    } else if (t.Is("do")) {
      std::size_t loop = BeginLoop(t.line, LoopKind::kDoWhile);
      ++pos_;
      ParseBodyStatement();
      Expect("while");
      ParseParenExpression();
      Expect(";");
      EndLoop(loop);
    } else if (t.Is("try")) {
      ParseTry();
    } else if (t.Is("switch")) {
      ParseSwitch();
    } else if (t.Is("return")) {
      ++pos_;
      if (!Is(";")) ParseExpression();
      Expect(";");
    } else if (t.Is("throw")) {
      ++pos_;
      ParseExpression();
      Expect(";");
    } else if (t.Is("break") || t.Is("continue")) {
      ++pos_;
      if (Cur().IsIdent()) ++pos_;
      Expect(";");
    } else if (t.Is("synchronized")) {
      ++pos_;
      ParseParenExpression();
      ParseBlock();
    } else if (t.Is("assert")) {
      ++pos_;
      ParseExpression();
      if (Accept(":")) ParseExpression();
      Expect(";");
    } else if (t.IsIdent() && PeekTok(1).Is(":")) {
      pos_ += 2;  // label
      ParseStatement();
    } else if (t.Is("else") || t.Is("catch") || t.Is("finally") ||
               t.Is("case")) {
      Fail(t, "unexpected keyword");
    } else {
      ParseExpression();
      Expect(";");
    }
  }

  void ParseParenExpression() {
    Expect("(");
    ParseExpression();
    Expect(")");
  }

  void ParseFor() {
    const Token& t = Cur();
    ++pos_;
    Expect("(");
    PushScope();
    bool for_each = Lookahead([&] {
      SkipLocalModifiers();
      ParseType();
      if (!Cur().IsIdent()) return false;
      ++pos_;
      ParseDims();
      return Is(":");
    });
    std::size_t loop =
        BeginLoop(t.line, for_each ? LoopKind::kForEach : LoopKind::kFor);
    if (for_each) {
      SkipLocalModifiers();
      TypeRef type = ParseType();
      std::size_t n = ExpectIdent();
      std::string dims = ParseDims();
      AddLocal(n, type.erased + dims, LocalVarKind::kForEach);
      Expect(":");
      ParseExpression();
      Expect(")");
    } else {
      if (!Is(";")) {
        if (LooksLikeLocalVarDecl()) {
          ParseLocalVarDecl(LocalVarKind::kLocal);
        } else {
          ParseExpressionList();
        }
      }
      Expect(";");
      if (!Is(";")) ParseExpression();
      Expect(";");
      if (!Is(")")) ParseExpressionList();
      Expect(")");
    }
    ParseBodyStatement();
    EndLoop(loop);
    PopScope();
  }

  void ParseExpressionList() {
    ParseExpression();
    while (Accept(",")) ParseExpression();
  }

  void ParseTry() {
    ++pos_;
    PushScope();
    bool has_resources = false;
    if (Accept("(")) {
      has_resources = true;
      while (!Is(")")) {
        bool decl = Lookahead([&] {
          SkipLocalModifiers();
          ParseType();
          return Cur().IsIdent() && PeekTok(1).Is("=");
        });
        if (decl) {
          SkipLocalModifiers();
          TypeRef type = ParseType();
          std::size_t n = ExpectIdent();
          Expect("=");
          Expr init = ParseExpression();
          std::string tn = type.erased;
          if (tn == "var" && init.kind == Expr::Kind::kNew) tn = init.text;
          AddLocal(n, tn, LocalVarKind::kResource);
        } else {
          ParseExpression();
        }
        if (!Accept(";")) break;
      }
      Expect(")");
    }
    ParseBlock();
    bool has_handler = false;
    while (Is("catch")) {
      has_handler = true;
      int line = Cur().line;
      ++pos_;
      Expect("(");
      PushScope();
      SkipLocalModifiers();
      std::string type = ParseType().erased;
      while (Accept("|")) type += "|" + ParseType().erased;
      std::size_t n = ExpectIdent();
      AddLocal(n, type, LocalVarKind::kCatchParam);
      Expect(")");
      std::size_t fact = 0;
      if (ctx_ != nullptr) {
        CatchFact c;
        c.line = line;
        c.exceptionVarName = std::string(toks_[n].text);
        c.enclosingMethodIsTest = ctx_->inTestMethod;
        ctx_->facts->catches.push_back(std::move(c));
        fact = ctx_->facts->catches.size() - 1;
      }
      BlockInfo block = ParseBlock();
      if (ctx_ != nullptr) {
        CatchFact& c = ctx_->facts->catches[fact];
        c.isBodyEmpty = block.statements == 0;
        c.hasComment = HasCommentBetween(block.open, block.close);
      }
      PopScope();
    }
    if (Accept("finally")) {
      has_handler = true;
      ParseBlock();
    }
    PopScope();
    if (!has_handler && !has_resources) {
      Fail(Cur(), "expected 'catch' or 'finally'");
    }
  }

  bool LooksLikePattern() {
    return Lookahead([&] {
      SkipLocalModifiers();
      ParseType();
      return (Cur().IsIdent() && Cur().text != "when") || Is("(");
    });
  }

  void ParsePattern() {
    SkipLocalModifiers();
    TypeRef t = ParseType();
    if (Accept("(")) {
      while (!Is(")")) {
        ParsePattern();
        if (!Accept(",")) break;
      }
      Expect(")");
      if (Cur().IsIdent() && Cur().text != "when") {
        AddLocal(pos_++, t.erased, LocalVarKind::kPattern);
      }
      return;
    }
    AddLocal(ExpectIdent(), t.erased, LocalVarKind::kPattern);
  }

  void ParseCaseLabels() {
    bool saved = no_lambda_;
    no_lambda_ = true;
    while (true) {
      if (Accept("null") || Accept("default")) {
      } else if (LooksLikePattern()) {
        ParsePattern();
      } else {
        ParseTernary();
      }
      if (!Accept(",")) break;
    }
    if (IsIdentText("when")) {
      ++pos_;
      ParseTernary();
    }
    no_lambda_ = saved;
  }

  void ParseSwitch() {
    ++pos_;  // 'switch'
    ParseParenExpression();
    Expect("{");
    PushScope();
    while (!Is("}")) {
      if (Accept("case")) {
        PushScope();
        ParseCaseLabels();
      } else if (Accept("default")) {
        PushScope();
      } else {
        Fail(Cur(), "expected 'case' or 'default'");
      }
      if (Accept("->")) {
        if (Is("{")) {
          ParseBlock();
        } else if (Is("throw")) {
          ParseStatement();
        } else {
          ParseExpression();
          Expect(";");
        }
        PopScope();
      } else {
        Expect(":");
        PopScope();
        while (!Is("case") && !Is("default") && !Is("}")) {
          if (Cur().kind == TokenKind::kEnd) Fail(Cur(), "expected '}'");
          // `default` can also begin nothing else inside a switch body.
          ParseBlockStatement();
        }
      }
    }
    PopScope();
    Expect("}");
  }

  // ---- expressions ------------------------------------------------------

  bool IsLambdaStart() const {
    if (no_lambda_) return false;
    if (Cur().IsIdent() && PeekTok(1).Is("->")) return true;
    if (!Is("(")) return false;
    int depth = 0;
    for (std::size_t i = pos_; i < toks_.size(); ++i) {
      if (toks_[i].kind == TokenKind::kEnd) return false;
      if (toks_[i].Is("(")) ++depth;
      if (toks_[i].Is(")") && --depth == 0) return At(i + 1).Is("->");
    }
    return false;
  }

  Expr ParseLambda() {
    PushScope();
    if (Cur().IsIdent()) {
      MarkDecl(pos_);
      DeclareInScope(std::string(Cur().text), "");
      ++pos_;
    } else {
      Expect("(");
      while (!Is(")")) {
        if (Cur().IsIdent() && (PeekTok(1).Is(",") || PeekTok(1).Is(")"))) {
          MarkDecl(pos_);
          DeclareInScope(std::string(Cur().text), "");
          ++pos_;
        } else {
          ParseModifiers();
          TypeRef t = ParseType();
          Accept("...");
          std::size_t n = ExpectIdent();
          MarkDecl(n);
          DeclareInScope(std::string(toks_[n].text),
                         t.erased == "var" ? "" : t.erased);
        }
        if (!Accept(",")) break;
      }
      Expect(")");
    }
    Expect("->");
    int saved_depth = 0;
    if (ctx_ != nullptr) {
      saved_depth = ctx_->loopDepth;
      ctx_->loopDepth = 0;
    }
    bool saved_no_lambda = no_lambda_;
    no_lambda_ = false;
    if (Is("{")) {
      ParseBlock();
    } else {
      ParseExpression();
    }
    no_lambda_ = saved_no_lambda;
    if (ctx_ != nullptr) ctx_->loopDepth = saved_depth;
    PopScope();
    return {};
  }

  Expr ParseExpression() {
    if (IsLambdaStart()) return ParseLambda();
    Expr lhs = ParseTernary();
    std::size_t n = 0;
    std::string op = AssignmentOp(&n);
    if (op.empty()) return lhs;
    pos_ += n;
    Expr rhs = ParseExpression();
    if (ctx_ != nullptr && ctx_->loopDepth > 0 &&
        (lhs.kind == Expr::Kind::kName || lhs.kind == Expr::Kind::kThisField) &&
        (op == "+=" || (op == "=" && rhs.concatHead == lhs.text))) {
      StringConcatSite site;
      site.line = lhs.line;
      site.targetVarName = lhs.text;
      if (lhs.kind == Expr::Kind::kName) {
        if (const std::string* type = LookupLocal(lhs.text)) {
          site.targetTypeName = *type;
        }
      }
      ctx_->facts->stringConcatSites.push_back(std::move(site));
    }
    return {};
  }

  // Combines adjacent '>' tokens into shift and comparison operators.
  std::string GreaterOp(std::size_t* count) const {
    std::string op = ">";
    std::size_t i = pos_;
    while (At(i).adjacentNext && At(i + 1).Is(">") && op.size() < 3) {
      op += ">";
      ++i;
    }
    if (At(i).adjacentNext && At(i + 1).Is("=")) {
      op += "=";
      ++i;
    }
    *count = i - pos_ + 1;
    return op;
  }

  std::string AssignmentOp(std::size_t* count) const {
    static const std::unordered_set<std::string_view> kOps = {
        "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<="};
    if (Cur().kind != TokenKind::kOperator) return {};
    if (Is(">")) {
      std::string op = GreaterOp(count);
      return op == ">>=" || op == ">>>=" ? op : std::string();
    }
    if (kOps.count(Cur().text)) {
      *count = 1;
      return std::string(Cur().text);
    }
    return {};
  }

  Expr ParseTernary() {
    Expr cond = ParseBinary(0);
    if (!Accept("?")) return cond;
    ParseTernaryBranch();
    Expect(":");
    ParseTernaryBranch();
    return {};
  }

  void ParseTernaryBranch() {
    if (IsLambdaStart()) {
      ParseLambda();
    } else {
      ParseTernary();
    }
  }

  static int Precedence(std::string_view op) {
    if (op == "||") return 0;
    if (op == "&&") return 1;
    if (op == "|") return 2;
    if (op == "^") return 3;
    if (op == "&") return 4;
    if (op == "==" || op == "!=") return 5;
    if (op == "<" || op == ">" || op == "<=" || op == ">=" ||
        op == "instanceof") {
      return 6;
    }
    if (op == "<<" || op == ">>" || op == ">>>") return 7;
    if (op == "+" || op == "-") return 8;
    if (op == "*" || op == "/" || op == "%") return 9;
    return -1;
  }

  std::string BinaryOp(std::size_t* count) const {
    if (Is("instanceof")) {
      *count = 1;
      return "instanceof";
    }
    if (Cur().kind != TokenKind::kOperator) return {};
    if (Is(">")) {
      std::string op = GreaterOp(count);
      return Precedence(op) >= 0 ? op : std::string();
    }
    *count = 1;
    std::string op(Cur().text);
    return Precedence(op) >= 0 ? op : std::string();
  }

  Expr ParseBinary(int min_prec) {
    Expr left = ParseUnary();
    while (true) {
      std::size_t n = 0;
      std::string op = BinaryOp(&n);
      if (op.empty()) break;
      int prec = Precedence(op);
      if (prec < min_prec) break;
      pos_ += n;
      if (op == "instanceof") {
        Accept("final");
        if (LooksLikePattern()) {
          ParsePattern();
        } else {
          ParseType();
        }
        left = Expr{};
        continue;
      }
      ParseBinary(prec + 1);
      Expr result;
      if (op == "+") {
        if (left.kind == Expr::Kind::kName ||
            left.kind == Expr::Kind::kThisField) {
          result.concatHead = left.text;
        } else {
          result.concatHead = left.concatHead;
        }
      }
      left = std::move(result);
    }
    return left;
  }

  bool LooksLikeCast() {
    return Lookahead([&] {
      Expect("(");
      SkipAnnotations();
      if (Cur().kind == TokenKind::kKeyword &&
          internal::IsPrimitiveType(Cur().text)) {
        ParseType();
        return Is(")");
      }
      ParseType();
      while (Accept("&")) ParseType();
      if (!Accept(")")) return false;
      const Token& n = Cur();
      switch (n.kind) {
        case TokenKind::kIdentifier:
        case TokenKind::kNumber:
        case TokenKind::kChar:
        case TokenKind::kString:
        case TokenKind::kTextBlock:
          return true;
        case TokenKind::kKeyword:
          return n.Is("this") || n.Is("super") || n.Is("new") ||
                 n.Is("true") || n.Is("false") || n.Is("null") ||
                 n.Is("switch") || internal::IsPrimitiveType(n.text);
        case TokenKind::kOperator:
          return n.Is("(") || n.Is("!") || n.Is("~");
        default:
          return false;
      }
    });
  }

  Expr ParseUnary() {
    if (Is("++") || Is("--") || Is("+") || Is("-") || Is("!") || Is("~")) {
      ++pos_;
      ParseUnary();
      return {};
    }
    if (Is("(") && !IsLambdaStart() && LooksLikeCast()) {
      ++pos_;
      SkipAnnotations();
      ParseType();
      while (Accept("&")) ParseType();
      Expect(")");
      if (IsLambdaStart()) {
        ParseLambda();
      } else {
        ParseUnary();
      }
      return {};
    }
    Expr e = ParsePrimary();
    e = ParseSelectors(std::move(e));
    while (Is("++") || Is("--")) {
      ++pos_;
      e = Expr{};
    }
    return e;
  }

  void ParseArguments() {
    Expect("(");
    if (!Is(")")) {
      ParseExpression();
      while (Accept(",")) ParseExpression();
    }
    Expect(")");
  }

  Expr ParseVariableInitializer() {
    if (Is("{")) {
      ParseArrayInitializer();
      return {};
    }
    return ParseExpression();
  }

  void ParseArrayInitializer() {
    Expect("{");
    while (!Is("}")) {
      ParseVariableInitializer();
      if (!Accept(",")) break;
    }
    Expect("}");
  }

  Expr ParseCreator() {
    Expr e;
    e.line = Cur().line;
    Expect("new");
    if (Is("<")) ParseTypeArgs();
    TypeRef t = ParseType();
    if (Is("[")) {
      while (Is("[")) {
        ++pos_;
        if (!Accept("]")) {
          ParseExpression();
          Expect("]");
        }
      }
      if (Is("{")) ParseArrayInitializer();
      return {};
    }
    if (t.erased.ends_with("]")) {
      ParseArrayInitializer();
      return {};
    }
    ParseArguments();
    if (Is("{")) ParseAnonymousBody();
    e.kind = Expr::Kind::kNew;
    e.text = t.erased;
    return e;
  }

  void ParseMethodRefTail() {
    Expect("::");
    if (Is("<")) ParseTypeArgs();
    if (!Accept("new")) ExpectIdent();
  }

  Expr ParsePrimary() {
    const Token& t = Cur();
    Expr e;
    e.line = t.line;
    switch (t.kind) {
      case TokenKind::kNumber:
      case TokenKind::kChar:
        ++pos_;
        return e;
      case TokenKind::kString:
      case TokenKind::kTextBlock:
        ++pos_;
        e.kind = Expr::Kind::kString;
        return e;
      case TokenKind::kEnd:
        Fail(t, "expected expression");
      default:
        break;
    }
    if (t.Is("true") || t.Is("false") || t.Is("null")) {
      ++pos_;
      return e;
    }
    if (t.Is("this")) {
      ++pos_;
      if (Is("(")) {
        ParseArguments();
        return e;
      }
      e.kind = Expr::Kind::kThis;
      return e;
    }
    if (t.Is("super")) {
      ++pos_;
      if (Is("(")) {
        ParseArguments();
        return e;
      }
      e.kind = Expr::Kind::kSuper;
      return e;
    }
    if (t.Is("new")) return ParseCreator();
    if (t.Is("switch")) {
      ParseSwitch();
      return e;
    }
    if (t.Is("(")) {
      if (IsLambdaStart()) return ParseLambda();
      ++pos_;
      bool saved = no_lambda_;
      no_lambda_ = false;
      Expr inner = ParseExpression();
      no_lambda_ = saved;
      Expect(")");
      return inner;
    }
    if (t.kind == TokenKind::kKeyword &&
        (internal::IsPrimitiveType(t.text) || t.text == "void")) {
      ParseType();
      if (Is("::")) {
        ParseMethodRefTail();
      } else {
        Expect(".");
        Expect("class");
      }
      return e;
    }
    if (t.IsIdent()) {
      if (!no_lambda_ && PeekTok(1).Is("->")) return ParseLambda();
      if (PeekTok(1).Is("(")) {
        std::size_t name_tok = pos_++;
        ParseArguments();
        e.kind = Expr::Kind::kCall;
        e.text = std::string(toks_[name_tok].text);
        e.callUnqualified = true;
        RecordImplicitCall(name_tok);
        return e;
      }
      if (PeekTok(1).Is("[") && PeekTok(2).Is("]")) {
        ParseType();
        if (Is("::")) {
          ParseMethodRefTail();
        } else {
          Expect(".");
          Expect("class");
        }
        return e;
      }
      if (PeekTok(1).Is("<") && Lookahead([&] {
            ParseType();
            return Is("::");
          })) {
        ParseType();
        ParseMethodRefTail();
        return e;
      }
      ++pos_;
      e.kind = Expr::Kind::kName;
      e.text = std::string(t.text);
      return e;
    }
    Fail(t, "expected expression");
  }

  Expr ParseSelectors(Expr e) {
    while (true) {
      if (Is(".")) {
        ++pos_;
        if (Is("<")) ParseTypeArgs();
        if (Is("new")) {
          e = ParseCreator();
          continue;
        }
        if (Accept("this") || Accept("class")) {
          e = Expr{};
          continue;
        }
        if (Accept("super")) {
          e = Expr{};
          e.kind = Expr::Kind::kSuper;
          continue;
        }
        std::size_t name_tok = ExpectIdent();
        RecordAccess(name_tok, e);
        Expr next;
        next.line = toks_[name_tok].line;
        next.text = std::string(toks_[name_tok].text);
        if (Is("(")) {
          ParseArguments();
          next.kind = Expr::Kind::kCall;
          next.callUnqualified = e.kind == Expr::Kind::kThis;
        } else if (e.kind == Expr::Kind::kName ||
                   e.kind == Expr::Kind::kDotted) {
          next.kind = Expr::Kind::kDotted;
          next.text = e.text + "." + next.text;
        } else if (e.kind == Expr::Kind::kThis && e.text.empty()) {
          next.kind = Expr::Kind::kThisField;
        } else {
          next.kind = Expr::Kind::kOther;
        }
        e = std::move(next);
      } else if (Is("[")) {
        ++pos_;
        ParseExpression();
        Expect("]");
        e = Expr{};
      } else if (Is("::")) {
        ParseMethodRefTail();
        e = Expr{};
      } else {
        break;
      }
    }
    return e;
  }

  void RecordImplicitCall(std::size_t name_tok) {
    if (ctx_ == nullptr) return;
    AccessFact a;
    a.line = toks_[name_tok].line;
    a.memberName = std::string(toks_[name_tok].text);
    a.receiverForm = ReceiverForm::kImplicit;
    ctx_->facts->memberAccesses.push_back(std::move(a));
  }

  void RecordAccess(std::size_t name_tok, const Expr& receiver) {
    if (ctx_ == nullptr || receiver.kind == Expr::Kind::kSuper) return;
    AccessFact a;
    a.line = toks_[name_tok].line;
    a.memberName = std::string(toks_[name_tok].text);
    a.receiverForm = ReceiverForm::kInstanceExpr;
    switch (receiver.kind) {
      case Expr::Kind::kName:
        if (const std::string* type = LookupLocal(receiver.text)) {
          if (!type->empty() && *type != "var") a.receiverTypeName = *type;
        } else {
          a.receiverText = receiver.text;
        }
        break;
      case Expr::Kind::kDotted: {
        std::string first = receiver.text.substr(0, receiver.text.find('.'));
        if (LookupLocal(first) == nullptr) a.receiverText = receiver.text;
        break;
      }
      case Expr::Kind::kThis:
        if (ctx_->thisType) a.receiverTypeName = ctx_->thisType;
        break;
      case Expr::Kind::kThisField:
        if (ctx_->thisType) a.receiverText = "this." + receiver.text;
        break;
      case Expr::Kind::kCall:
        a.receiverForm = ReceiverForm::kMethodReturn;
        if (receiver.callUnqualified) a.receiverText = receiver.text;
        break;
      case Expr::Kind::kNew:
        a.receiverTypeName = receiver.text;
        break;
      default:
        break;
    }
    ctx_->facts->memberAccesses.push_back(std::move(a));
  }

  // ---- post-processing --------------------------------------------------

  // Names referenced from Javadoc ({@link X}, @see X, @throws X) count as
  // uses of imports.
  static void AddJavadocReferences(const std::string& text,
                                   std::unordered_set<std::string>& uses) {
    auto add = [&](std::size_t from) {
      while (from < text.size() &&
             (text[from] == ' ' || text[from] == '\t')) {
        ++from;
      }
      std::size_t end = from;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) ||
              text[end] == '_' || text[end] == '$')) {
        ++end;
      }
      if (end > from) uses.insert(text.substr(from, end - from));
    };
    for (std::string_view tag : {"{@link ", "{@linkplain ", "{@value ",
                                 "@see ", "@throws ", "@exception "}) {
      std::size_t p = 0;
      while ((p = text.find(tag, p)) != std::string::npos) {
        p += tag.size();
        add(p);
      }
    }
  }

  std::optional<std::string> FieldTypeInChain(std::size_t type_idx,
                                              const std::string& name) const {
    std::optional<std::size_t> cur = type_idx;
    while (cur) {
      for (const MemberFact& m : model_.types[*cur].members) {
        if (m.IsField() && m.name == name) return m.fieldTypeName;
      }
      cur = model_.types[*cur].outer;
    }
    return std::nullopt;
  }

  std::optional<std::string> ReturnTypeInChain(std::size_t type_idx,
                                               const std::string& name) const {
    std::optional<std::size_t> cur = type_idx;
    while (cur) {
      std::optional<std::string> found;
      bool conflict = false;
      for (const MemberFact& m : model_.types[*cur].members) {
        if (!m.IsMethod() || m.name != name || !m.returnTypeName) continue;
        if (found && *found != *m.returnTypeName) conflict = true;
        found = m.returnTypeName;
      }
      if (found) {
        if (conflict || *found == "void") return std::nullopt;
        return found;
      }
      cur = model_.types[*cur].outer;
    }
    return std::nullopt;
  }

  static bool LooksLikeTypeName(std::string_view s) {
    if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) {
      return false;
    }
    return std::any_of(s.begin(), s.end(), [](char c) {
      return std::islower(static_cast<unsigned char>(c));
    });
  }

  void ResolveAccess(std::size_t type_idx, AccessFact& a) const {
    if (!a.receiverText || a.receiverTypeName) return;
    const std::string& text = *a.receiverText;
    if (a.receiverForm == ReceiverForm::kMethodReturn) {
      a.receiverTypeName = ReturnTypeInChain(type_idx, text);
      return;
    }
    if (text.starts_with("this.")) {
      const auto& own = model_.types[type_idx].members;
      std::string field = text.substr(5);
      for (const MemberFact& m : own) {
        if (m.IsField() && m.name == field) a.receiverTypeName = m.fieldTypeName;
      }
      return;
    }
    std::string first = text.substr(0, text.find('.'));
    if (auto field = FieldTypeInChain(type_idx, first)) {
      if (first == text) a.receiverTypeName = *field;
      return;
    }
    if (LooksLikeTypeName(LastSegment(text))) {
      a.receiverForm = ReceiverForm::kClassName;
      a.receiverTypeName = text;
    }
  }

  void PostProcess() {
    std::unordered_set<std::string> uses;
    for (std::size_t i = 0; i < toks_.size(); ++i) {
      if (toks_[i].IsIdent() && !is_decl_[i]) uses.emplace(toks_[i].text);
    }
    for (const CommentFact& c : lexed_.comments) {
      if (c.isJavadoc) AddJavadocReferences(c.text, uses);
    }
    for (ImportFact& imp : model_.imports) {
      imp.usedFlag = imp.isWildcard || uses.count(LastSegment(imp.importedName));
    }
    for (std::size_t t = 0; t < model_.types.size(); ++t) {
      for (MemberFact& m : model_.types[t].members) {
        if (m.visibility == Visibility::kPrivate &&
            (m.IsField() || m.IsMethod())) {
          m.usedFlag = uses.count(m.name) > 0;
        }
      }
      // Resolution reads members, so collect into copies first.
      auto& type = model_.types[t];
      for (std::size_t mi = 0; mi < type.members.size(); ++mi) {
        if (!type.members[mi].body) continue;
        BodyFacts body = *type.members[mi].body;
        for (AccessFact& a : body.memberAccesses) ResolveAccess(t, a);
        model_.types[t].members[mi].body = std::move(body);
      }
      for (std::size_t bi = 0; bi < type.initializers.size(); ++bi) {
        BodyFacts body = type.initializers[bi];
        for (AccessFact& a : body.memberAccesses) ResolveAccess(t, a);
        model_.types[t].initializers[bi] = std::move(body);
      }
    }
  }

  std::string_view path_;
  LexedFile lexed_;
  const std::vector<Token>& toks_;
  std::vector<bool> is_decl_;
  std::size_t pos_ = 0;
  SourceFileModel model_;
  std::vector<std::unordered_map<std::string, std::string>> scopes_;
  std::vector<std::size_t> type_stack_;
  BodyContext* ctx_ = nullptr;
  bool no_lambda_ = false;
};

}  // namespace

SourceFileModel ParseCompilationUnit(std::string_view source_text,
                                     std::string_view path) {
  if (source_text.starts_with("\xEF\xBB\xBF")) source_text.remove_prefix(3);
  return Parser(source_text, path).Run();
}

}  // namespace jstyle
