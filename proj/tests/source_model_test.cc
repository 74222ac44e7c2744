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

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "java_lexer.h"
#include "jstyle/source_model.h"
#include "test_util.h"

namespace jstyle {
namespace {

using testing::TempDir;

const MemberFact* FindMember(const TypeFact& t, const std::string& name) {
  for (const MemberFact& m : t.members) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

TEST(ParseTest, PackageImportsAndTypes) {
  SourceFileModel m = ParseCompilationUnit(R"(package com.example.app;

import java.util.List;
import static java.lang.Math.max;
import java.io.*;

public final class Outer<T extends Comparable<T>> extends Base implements Runnable, java.io.Serializable {
  interface Callback {}
  enum Mode { A, B }
  record Point(int x, int y) {}
}
)",
                                           "Outer.java");
  ASSERT_TRUE(m.packageDecl.has_value());
  EXPECT_EQ(m.PackageName(), "com.example.app");
  EXPECT_EQ(m.packageDecl->line, 1);
  ASSERT_EQ(m.imports.size(), 3u);
  EXPECT_EQ(m.imports[0].importedName, "java.util.List");
  EXPECT_TRUE(m.imports[1].isStatic);
  EXPECT_TRUE(m.imports[2].isWildcard);

  ASSERT_EQ(m.types.size(), 4u);
  const TypeFact& outer = m.types[0];
  EXPECT_EQ(outer.name, "Outer");
  EXPECT_EQ(outer.kind, TypeKind::kClass);
  EXPECT_EQ(outer.visibility, Visibility::kPublic);
  EXPECT_EQ(outer.line, 7);
  EXPECT_EQ(outer.superclass, "Base");
  EXPECT_EQ(outer.interfaces,
            (std::vector<std::string>{"Runnable", "java.io.Serializable"}));
  EXPECT_EQ(outer.typeParams, (std::vector<std::string>{"T"}));
  EXPECT_EQ(m.types[1].kind, TypeKind::kInterface);
  EXPECT_EQ(m.types[2].kind, TypeKind::kEnum);
  EXPECT_EQ(m.types[3].kind, TypeKind::kRecord);
  for (std::size_t i = 1; i < 4; ++i) {
    EXPECT_TRUE(m.types[i].isNested);
    EXPECT_EQ(m.types[i].outer, 0u);
  }
  // Nested types appear as inner-type members of the enclosing type.
  ASSERT_EQ(outer.members.size(), 3u);
  EXPECT_EQ(outer.members[0].kind, MemberKind::kInnerType);
  EXPECT_EQ(outer.members[0].innerTypeIndex, 1u);
}

TEST(ParseTest, MemberKindsAndSignatures) {
  SourceFileModel m = ParseCompilationUnit(R"(class Holder {
  static final int MAX = 3;
  static int counter;
  private final java.util.List<String> names = new java.util.ArrayList<>();
  protected int[] grid[];

  Holder() {}

  public static <K, V> java.util.Map<K, V> build(java.util.List<? extends K> keys, V... values) throws java.io.IOException, IllegalStateException {
    return null;
  }

  abstract void render(final int depth, String[] args);
}
)",
                                           "Holder.java");
  ASSERT_EQ(m.types.size(), 1u);
  const TypeFact& t = m.types[0];
  const MemberFact* max = FindMember(t, "MAX");
  ASSERT_NE(max, nullptr);
  EXPECT_EQ(max->kind, MemberKind::kStaticField);
  EXPECT_TRUE(max->isStaticFinal);
  EXPECT_EQ(max->fieldTypeName, "int");

  const MemberFact* counter = FindMember(t, "counter");
  ASSERT_NE(counter, nullptr);
  EXPECT_EQ(counter->kind, MemberKind::kStaticField);
  EXPECT_FALSE(counter->isStaticFinal);

  const MemberFact* names = FindMember(t, "names");
  ASSERT_NE(names, nullptr);
  EXPECT_EQ(names->kind, MemberKind::kInstanceField);
  EXPECT_EQ(names->visibility, Visibility::kPrivate);
  EXPECT_EQ(names->fieldTypeName, "List");

  const MemberFact* grid = FindMember(t, "grid");
  ASSERT_NE(grid, nullptr);
  EXPECT_EQ(grid->visibility, Visibility::kProtected);
  EXPECT_EQ(grid->fieldTypeName, "int[][]");

  const MemberFact* ctor = FindMember(t, "Holder");
  ASSERT_NE(ctor, nullptr);
  EXPECT_EQ(ctor->kind, MemberKind::kConstructor);
  EXPECT_EQ(ctor->visibility, Visibility::kPackage);

  const MemberFact* build = FindMember(t, "build");
  ASSERT_NE(build, nullptr);
  EXPECT_EQ(build->kind, MemberKind::kStaticMethod);
  EXPECT_EQ(build->typeParams, (std::vector<std::string>{"K", "V"}));
  ASSERT_EQ(build->params.size(), 2u);
  EXPECT_EQ(build->params[0].typeName, "List");
  EXPECT_EQ(build->params[1].name, "values");
  EXPECT_EQ(build->params[1].typeName, "V[]");
  EXPECT_EQ(build->returnTypeName, "Map");
  EXPECT_EQ(build->thrownTypes,
            (std::vector<std::string>{"IOException", "IllegalStateException"}));

  const MemberFact* render = FindMember(t, "render");
  ASSERT_NE(render, nullptr);
  EXPECT_TRUE(render->isAbstract);
  EXPECT_EQ(render->returnTypeName, "void");
  EXPECT_FALSE(render->body.has_value());
  ASSERT_EQ(render->params.size(), 2u);
  EXPECT_EQ(render->params[1].typeName, "String[]");
}

TEST(ParseTest, JavadocAttachesToFollowingDeclaration) {
  SourceFileModel m = ParseCompilationUnit(R"(/**
 * Describes the widget in plenty of words for the count.
 */
@Deprecated
public class Widget {
  /** Not attached: a line comment follows. */
  // separator
  int a;

  /**
   * Sizes things.
   *
   * @param width the width
   * @return the size
   * @throws IllegalArgumentException when negative
   */
  public int size(int width) { return width; }
}
)",
                                           "Widget.java");
  const TypeFact& t = m.types[0];
  ASSERT_TRUE(t.javadoc.has_value());
  EXPECT_EQ(t.javadoc->line, 1);
  EXPECT_EQ(t.javadoc->wordCount, 10);
  EXPECT_EQ(t.annotations, (std::vector<std::string>{"Deprecated"}));
  const MemberFact* size = FindMember(t, "size");
  ASSERT_NE(size, nullptr);
  ASSERT_TRUE(size->javadoc.has_value());
  ASSERT_EQ(size->javadoc->tags.size(), 3u);
  EXPECT_EQ(size->javadoc->tags[0].name, "param");
  EXPECT_EQ(size->javadoc->tags[0].argName, "width");
  EXPECT_EQ(size->javadoc->tags[0].descriptionWordCount, 2);
  EXPECT_EQ(size->javadoc->tags[2].argName, "IllegalArgumentException");
}

TEST(ParseTest, ExtractJavadocCountsWordsAndTags) {
  JavadocFact d = ExtractJavadoc(
      "/**\n * Returns the {@code value} plus one.\n *\n * @param x\n"
      " * @return {@inheritDoc}\n */",
      4);
  EXPECT_EQ(d.line, 4);
  EXPECT_EQ(d.wordCount, 5);
  ASSERT_EQ(d.tags.size(), 2u);
  EXPECT_EQ(d.tags[0].argName, "x");
  EXPECT_EQ(d.tags[0].descriptionWordCount, 0);
  EXPECT_TRUE(d.inheritsDoc);
}

TEST(ParseTest, CatchFacts) {
  SourceFileModel m = ParseCompilationUnit(R"(class C {
  void a() {
    try { run(); } catch (RuntimeException e) {}
    try { run(); } catch (IllegalStateException | IllegalArgumentException e) {
      // ignored on purpose
    }
    try { run(); } catch (Exception e) { log(e); }
  }
  @Test
  void b() {
    try { run(); } catch (Exception expected) {}
  }
  void run() {}
  void log(Exception e) {}
}
)",
                                           "C.java");
  const MemberFact* a = FindMember(m.types[0], "a");
  ASSERT_TRUE(a && a->body);
  ASSERT_EQ(a->body->catches.size(), 3u);
  EXPECT_TRUE(a->body->catches[0].isBodyEmpty);
  EXPECT_FALSE(a->body->catches[0].hasComment);
  EXPECT_EQ(a->body->catches[0].line, 3);
  EXPECT_TRUE(a->body->catches[1].isBodyEmpty);
  EXPECT_TRUE(a->body->catches[1].hasComment);
  EXPECT_FALSE(a->body->catches[2].isBodyEmpty);
  EXPECT_FALSE(a->body->catches[0].enclosingMethodIsTest);
  const MemberFact* b = FindMember(m.types[0], "b");
  ASSERT_TRUE(b && b->body);
  ASSERT_EQ(b->body->catches.size(), 1u);
  EXPECT_TRUE(b->body->catches[0].enclosingMethodIsTest);
  EXPECT_EQ(b->body->catches[0].exceptionVarName, "expected");
}

TEST(ParseTest, LoopsAndConcatenationSites) {
  SourceFileModel m = ParseCompilationUnit(R"(class C {
  String field = "";
  void f(java.util.List<String> xs) {
    String s = "";
    int n = 0;
    for (String x : xs) {
      s += x;
      n += 1;
      field += x;
    }
    s += "outside";
    while (n > 0) { n--; }
    do { n++; } while (n < 3);
  }
}
)",
                                           "C.java");
  const MemberFact* f = FindMember(m.types[0], "f");
  ASSERT_TRUE(f && f->body);
  ASSERT_EQ(f->body->loops.size(), 3u);
  EXPECT_EQ(f->body->loops[0].kind, LoopKind::kForEach);
  EXPECT_EQ(f->body->loops[1].kind, LoopKind::kWhile);
  EXPECT_EQ(f->body->loops[2].kind, LoopKind::kDoWhile);
  // Only compound += inside loops is recorded.
  ASSERT_EQ(f->body->stringConcatSites.size(), 3u);
  EXPECT_EQ(f->body->stringConcatSites[0].targetVarName, "s");
  EXPECT_EQ(f->body->stringConcatSites[0].targetTypeName, "String");
  EXPECT_EQ(f->body->stringConcatSites[1].targetTypeName, "int");
  EXPECT_EQ(f->body->stringConcatSites[2].targetVarName, "field");
  EXPECT_FALSE(f->body->stringConcatSites[2].targetTypeName.has_value());
}

TEST(ParseTest, AccessReceiverForms) {
  SourceFileModel m = ParseCompilationUnit(R"(class C {
  Utils util = new Utils();
  Utils getUtils() { return util; }
  void f() {
    Utils.doWork();
    util.doWork();
    getUtils().doWork();
    doLocal();
  }
  void doLocal() {}
}
)",
                                           "C.java");
  const MemberFact* f = FindMember(m.types[0], "f");
  ASSERT_TRUE(f && f->body);
  std::vector<std::pair<std::string, ReceiverForm>> got;
  for (const AccessFact& a : f->body->memberAccesses) {
    got.emplace_back(a.memberName, a.receiverForm);
  }
  // getUtils() is itself an access with an implicit receiver.
  ASSERT_EQ(got.size(), 5u);
  EXPECT_EQ(got[0], std::make_pair(std::string("doWork"),
                                   ReceiverForm::kClassName));
  EXPECT_EQ(got[1].second, ReceiverForm::kInstanceExpr);
  EXPECT_EQ(f->body->memberAccesses[1].receiverTypeName, "Utils");
  EXPECT_EQ(got[2], std::make_pair(std::string("getUtils"),
                                   ReceiverForm::kImplicit));
  EXPECT_EQ(got[3].second, ReceiverForm::kMethodReturn);
  EXPECT_EQ(f->body->memberAccesses[3].receiverTypeName, "Utils");
  EXPECT_EQ(got[4].second, ReceiverForm::kImplicit);
}

TEST(ParseTest, LocalUsageAndPrivateMemberUsage) {
  SourceFileModel m = ParseCompilationUnit(R"(import java.util.List;
import java.util.Map;
import java.util.Set;

/** Uses {@link Set} in docs only. */
class C {
  private int used;
  private int unused;
  private void helper() {}
  private void orphan() {}
  int f(List<String> xs) {
    int a = 1;
    int b = 2;
    helper();
    for (String x : xs) {}
    return a + used;
  }
}
)",
                                           "C.java");
  ASSERT_EQ(m.imports.size(), 3u);
  EXPECT_TRUE(m.imports[0].usedFlag);
  EXPECT_FALSE(m.imports[1].usedFlag);
  EXPECT_TRUE(m.imports[2].usedFlag);
  const TypeFact& t = m.types[0];
  EXPECT_TRUE(FindMember(t, "used")->usedFlag);
  EXPECT_FALSE(FindMember(t, "unused")->usedFlag);
  EXPECT_TRUE(FindMember(t, "helper")->usedFlag);
  EXPECT_FALSE(FindMember(t, "orphan")->usedFlag);
  const MemberFact* f = FindMember(t, "f");
  ASSERT_TRUE(f && f->body);
  std::map<std::string, LocalVarFact> vars;
  for (const LocalVarFact& v : f->body->localVars) vars[v.name] = v;
  EXPECT_TRUE(vars.at("a").usedFlag);
  EXPECT_FALSE(vars.at("b").usedFlag);
  EXPECT_EQ(vars.at("x").kind, LocalVarKind::kForEach);
}

TEST(ParseTest, LocalAndAnonymousTypes) {
  SourceFileModel m = ParseCompilationUnit(R"(class Outer {
  void f() {
    class Local { void g() {} }
    Runnable r = new Runnable() {
      public void run() {
        try { f(); } catch (RuntimeException e) {}
      }
    };
    r.run();
  }
}
)",
                                           "Outer.java");
  ASSERT_EQ(m.types.size(), 2u);
  EXPECT_EQ(m.types[1].name, "Local");
  EXPECT_TRUE(m.types[1].isLocal);
  EXPECT_EQ(m.types[1].outer, 0u);
  // Anonymous class bodies contribute facts to the enclosing body.
  const MemberFact* f = FindMember(m.types[0], "f");
  ASSERT_TRUE(f && f->body);
  EXPECT_EQ(f->body->catches.size(), 1u);
}

TEST(ParseTest, ModernSyntax) {
  SourceFileModel m = ParseCompilationUnit(R"(sealed interface Shape permits Circle, Square {}
record Circle(double r) implements Shape {}
final class Square implements Shape {}
class Use {
  String describe(Object o) {
    var text = """
        multi-line "text" block
        """;
    java.util.function.Function<Integer, Integer> twice = x -> x * 2;
    java.util.List<java.util.List<String>> nested = new java.util.ArrayList<>();
    int shifted = 8 >> 1 >>> 1;
    return switch (o) {
      case Circle c when c.r() > 1 -> "big circle" + text;
      case Square s -> { yield "square" + twice.apply(shifted); }
      default -> nested.toString();
    };
  }
}
)",
                                           "Shapes.java");
  ASSERT_EQ(m.types.size(), 4u);
  EXPECT_EQ(m.types[0].kind, TypeKind::kInterface);
  EXPECT_EQ(m.types[1].kind, TypeKind::kRecord);
  EXPECT_EQ(m.types[3].name, "Use");
}

TEST(ParseTest, LineCounts) {
  SourceFileModel m =
      ParseCompilationUnit("class A {\n\n  int x;\n   \n}\n", "A.java");
  EXPECT_EQ(m.totalLines, 5);
  EXPECT_EQ(m.lineCount, 3);
}

TEST(ParseTest, ModuleAndPackageInfoHaveNoTypes) {
  EXPECT_TRUE(ParseCompilationUnit("module a.b { requires java.sql; }\n",
                                   "module-info.java")
                  .types.empty());
  SourceFileModel info = ParseCompilationUnit(
      "/** Docs. */\n@Deprecated\npackage a.b;\n", "package-info.java");
  EXPECT_TRUE(info.types.empty());
  EXPECT_EQ(info.PackageName(), "a.b");
}

TEST(ParseTest, SyntaxErrorsCarryPosition) {
  try {
    ParseCompilationUnit("class A {\n  int x = ;\n}\n", "A.java");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "A.java");
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 11);
  }
  EXPECT_THROW(ParseCompilationUnit("class A {", "A.java"), ParseError);
  EXPECT_THROW(ParseCompilationUnit("class A { void f() { \"open }", "A.java"),
               ParseError);
}

TEST(LexerTest, KeywordsAndComments) {
  internal::LexedFile f = internal::LexJava(
      "int a = 1; // trailing\n/* block */ char c = '\\'';\n", "x.java");
  ASSERT_EQ(f.comments.size(), 2u);
  EXPECT_FALSE(f.comments[0].ownLine);
  EXPECT_TRUE(internal::IsJavaKeyword("synchronized"));
  EXPECT_FALSE(internal::IsJavaKeyword("String"));
  EXPECT_TRUE(internal::IsPrimitiveType("boolean"));
}

TEST(Utf8Test, KnownSequences) {
  EXPECT_TRUE(IsValidUtf8("plain ascii"));
  EXPECT_TRUE(IsValidUtf8("\xC3\xA9\xE2\x82\xAC\xF0\x9F\x98\x80"));
  EXPECT_FALSE(IsValidUtf8("\xC0\xAF"));          // overlong '/'
  EXPECT_FALSE(IsValidUtf8("\xED\xA0\x80"));      // surrogate
  EXPECT_FALSE(IsValidUtf8("\xF4\x90\x80\x80"));  // above U+10FFFF
  EXPECT_FALSE(IsValidUtf8("\xE2\x82"));          // truncated
  EXPECT_FALSE(IsValidUtf8("\x80"));
}

std::string EncodeUtf8(char32_t cp) {
  std::string s;
  if (cp < 0x80) {
    s += static_cast<char>(cp);
  } else if (cp < 0x800) {
    s += static_cast<char>(0xC0 | (cp >> 6));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    s += static_cast<char>(0xE0 | (cp >> 12));
    s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    s += static_cast<char>(0xF0 | (cp >> 18));
    s += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return s;
}

TEST(Utf8Test, PropertyEncodedScalarsAreValidAndSurrogatesAreNot) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> dist(0, 0x10FFFF);
  for (int i = 0; i < 20000; ++i) {
    char32_t cp = dist(rng);
    std::string enc = EncodeUtf8(cp);
    bool surrogate = cp >= 0xD800 && cp <= 0xDFFF;
    EXPECT_EQ(IsValidUtf8(enc), !surrogate) << static_cast<std::uint32_t>(cp);
    if (enc.size() > 1) {
      EXPECT_FALSE(IsValidUtf8(enc.substr(0, enc.size() - 1)));
    }
  }
}

TEST(DiscoveryTest, StandardLayoutPerModule) {
  TempDir dir;
  dir.Write("core/src/main/java/a/A.java", "package a; class A {}");
  dir.Write("core/src/test/java/a/ATest.java", "package a; class ATest {}");
  dir.Write("web/src/main/java/b/B.java", "package b; class B {}");
  dir.Write("web/target/generated/C.java", "class C {}");
  dir.Write("tools/Script.java", "class Script {}");
  dir.Write("core/src/main/java/a/notes.txt", "x");
  std::vector<DiscoveredFile> files = DiscoverSources(dir.path());
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(files[0].relativePath, "core/src/main/java/a/A.java");
  EXPECT_EQ(files[0].sourceRoot, "core/src/main/java");
  EXPECT_EQ(files[1].relativePath, "web/src/main/java/b/B.java");
}

TEST(DiscoveryTest, FallbackSkipsTestsAndExcludedDirs) {
  TempDir dir;
  dir.Write("src/a/A.java", "package a; class A {}");
  dir.Write("src/test/a/ATest.java", "class ATest {}");
  dir.Write("build/Gen.java", "class Gen {}");
  dir.Write("Root.java", "class Root {}");
  std::vector<DiscoveredFile> files = DiscoverSources(dir.path());
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(files[0].relativePath, "Root.java");
  EXPECT_EQ(files[1].relativePath, "src/a/A.java");
  EXPECT_FALSE(files[1].sourceRoot.has_value());

  DiscoveryOptions opts;
  opts.excludedDirNames = {"src"};
  files = DiscoverSources(dir.path(), opts);
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(files[0].relativePath, "Root.java");
  EXPECT_EQ(files[1].relativePath, "build/Gen.java");
}

TEST(DiscoveryTest, DoesNotFollowDirectorySymlinks) {
  TempDir dir;
  dir.Write("real/A.java", "class A {}");
  std::filesystem::create_directory_symlink(dir.path() / "real",
                                            dir.path() / "link");
  std::vector<DiscoveredFile> files = DiscoverSources(dir.path());
  ASSERT_EQ(files.size(), 1u);
  EXPECT_EQ(files[0].relativePath, "real/A.java");
}

TEST(DiscoveryTest, MissingRootThrows) {
  EXPECT_THROW(DiscoverSources("/nonexistent/jstyle/root"), IoError);
}

}  // namespace
}  // namespace jstyle
