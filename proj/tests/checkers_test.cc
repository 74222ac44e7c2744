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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "jstyle/analyzer.h"
#include "jstyle/checkers.h"
#include "jstyle/lexicon.h"
#include "jstyle/project_index.h"
#include "test_util.h"

namespace jstyle {
namespace {

namespace fs = std::filesystem;
using testing::AnalyzeFiles;
using testing::CountOf;
using testing::FixtureDir;

const std::string kPath = "src/main/java/p/";

SourceFileModel One(const std::string& text,
                    const std::string& path = "p/A.java") {
  return ParseCompilationUnit(text, path);
}

// Each category directory holds a clean and a seeded project with the
// expected count for that category; clean projects are free of violations.
TEST(CategoryFixtureTest, CountsMatchExpected) {
  int dirs = 0;
  for (const auto& entry :
       fs::directory_iterator(FixtureDir() / "categories")) {
    for (const char* variant : {"clean", "seeded"}) {
      fs::path root = entry.path() / variant;
      std::ifstream in(root / "expected.txt");
      std::string name;
      std::size_t expected = 0;
      ASSERT_TRUE(in >> name >> expected) << root;
      auto cat = CategoryFromName(name);
      ASSERT_TRUE(cat.has_value()) << name;
      AnalysisResult r = AnalyzeRepository(root, {});
      EXPECT_TRUE(r.skipped.empty()) << root;
      EXPECT_EQ(CountOf(r.violations, *cat), expected) << root;
      if (std::string(variant) == "clean") {
        EXPECT_TRUE(r.violations.empty())
            << root << ": " << r.violations.front().message;
      }
      ++dirs;
    }
  }
  EXPECT_EQ(dirs, 32);
}

TEST(NamingTest, ClassAndMethodWordClasses) {
  const Lexicon& lex = Lexicon::BuiltIn();
  auto classes = CheckClassNames(
      One("package p;\nclass Account {}\nclass run {}\nclass Quickly {}\n"
          "interface Runnable {}\n"),
      lex);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].line, 3);
  EXPECT_EQ(classes[1].line, 4);
  auto methods = CheckMethodNames(
      One("package p;\nclass A {\n  void computeTotal() {}\n"
          "  void Compute() {}\n  int width() { return 0; }\n"
          "  boolean isEmpty() { return true; }\n"
          "  void getX() {}\n}\n"),
      lex);
  ASSERT_EQ(methods.size(), 2u);
  EXPECT_EQ(methods[0].line, 4);
  EXPECT_EQ(methods[1].line, 5);
}

TEST(NamingTest, VariablesAndPackages) {
  auto vars = CheckVariableNames(
      One("package p;\nclass A {\n  static final int MAX_SIZE = 1;\n"
          "  static final int maxSize = 2;\n  int Count;\n  int total;\n"
          "  void f(int Bad, int good) { int X_Y = 0; }\n}\n"));
  EXPECT_EQ(vars.size(), 4u);
  EXPECT_TRUE(CheckPackageNames(One("package com.example.util;\nclass A {}",
                                     "com/example/util/A.java"))
                  .empty());
  EXPECT_EQ(CheckPackageNames(One("package com.Example.my_util;\nclass A {}",
                                  "com/Example/my_util/A.java"))
                .size(),
            1u);
  // A package that disagrees with its directory.
  EXPECT_EQ(CheckPackageNames(One("package com.example.util;\nclass A {}",
                                  "com/example/misc/A.java"))
                .size(),
            1u);
}

// The reference example: every formatting rule fires once, never more.
TEST(JavadocFormattingTest, SixRulesEachFireOnce) {
  auto v = CheckJavadocFormatting(
      One("package p;\nclass A {\n  /**\n   * Does something useful here.\n"
          "   *\n   * @param b\n   * @param b x\n   */\n"
          "  int f(int a) throws IOException { return a; }\n}\n"));
  ASSERT_EQ(v.size(), 6u);
  for (const Violation& x : v) {
    EXPECT_EQ(x.category, Category::kJavadocFormatting);
    EXPECT_EQ(x.line, 3);
  }
}

TEST(JavadocFormattingTest, WellFormedAndInheritDoc) {
  EXPECT_TRUE(CheckJavadocFormatting(
                  One("package p;\nclass A {\n  /**\n   * Sums things.\n"
                      "   * @param <T> element type\n"
                      "   * @param a the value\n"
                      "   * @return the sum\n"
                      "   * @throws java.io.IOException on failure\n   */\n"
                      "  <T> int f(int a) throws IOException { return a; }\n"
                      "  /** {@inheritDoc} */\n"
                      "  public int g(int q) { return q; }\n}\n"))
                  .empty());
  auto v = CheckJavadocFormatting(
      One("package p;\nclass A {\n  /**\n   * Resets the state.\n"
          "   * @return nothing\n   */\n  void reset() {}\n}\n"));
  EXPECT_EQ(v.size(), 1u);
}

// Random tag sets over a fixed method: each rule is an independent predicate,
// so the count equals the number of true predicates and stays within 6.
TEST(JavadocFormattingTest, PropertyMatchesRulePredicates) {
  std::mt19937 rng(7);
  const std::vector<std::string> pool = {
      "@param a the first", "@param a", "@param b the second",
      "@param z unknown",   "@return the value", "@return",
      "@throws IOException when broken", "@throws IllegalStateException bad"};
  for (int round = 0; round < 500; ++round) {
    std::vector<std::string> tags;
    int n = static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) tags.push_back(pool[rng() % pool.size()]);
    bool is_void = rng() % 2 == 0;
    std::string doc = "  /**\n   * Combines the inputs.\n";
    for (const std::string& t : tags) doc += "   * " + t + "\n";
    doc += "   */\n";
    std::string src = "package p;\nclass A {\n" + doc + "  " +
                      (is_void ? "void" : "int") +
                      " f(int a, int b) throws IOException {}\n}\n";

    auto count = [&](const std::string& prefix) {
      return std::count_if(tags.begin(), tags.end(), [&](const std::string& t) {
        return t.rfind(prefix, 0) == 0;
      });
    };
    auto has = [&](const std::string& prefix) { return count(prefix) > 0; };
    int expected = 0;
    expected += (!has("@param a") || !has("@param b")) ? 1 : 0;
    expected += has("@param z") ? 1 : 0;
    int returns = static_cast<int>(count("@return"));
    expected += (is_void ? returns > 0 : returns == 0) ? 1 : 0;
    bool dup = returns > 1 || count("@param a") > 1 || count("@param b") > 1 ||
               count("@param z") > 1 || count("@throws IOException") > 1 ||
               count("@throws IllegalState") > 1;
    expected += dup ? 1 : 0;
    expected += has("@throws IOException") ? 0 : 1;
    bool empty = std::any_of(tags.begin(), tags.end(), [](const std::string& t) {
      return t == "@param a" || t == "@return";
    });
    expected += empty ? 1 : 0;

    auto v = CheckJavadocFormatting(One(src));
    EXPECT_EQ(static_cast<int>(v.size()), expected) << src;
    EXPECT_LE(v.size(), 6u);
  }
}

TEST(JavadocPresenceTest, KindsAndMinimumWords) {
  SourceFileModel m =
      One("package p;\n/** A small account holder. */\npublic class A {\n"
          "  /** Short. */\n  public int count;\n"
          "  public int level;\n"
          "  public A() {}\n"
          "  /** Returns the current total value of every open entry here. */\n"
          "  public int total() { return 0; }\n"
          "  /** Too brief. */\n  public void reset() {}\n"
          "  private void hidden() {}\n"
          "  /** {@inheritDoc} */\n  public String toString() { return \"\"; }\n"
          "}\n");
  // Class and method Javadocs need ten words; fields only need one.
  EXPECT_EQ(CheckJavadocPresence(m, JavadocKind::kClass).size(), 1u);
  auto fields = CheckJavadocPresence(m, JavadocKind::kField);
  ASSERT_EQ(fields.size(), 1u);
  EXPECT_EQ(fields[0].line, 6);
  EXPECT_EQ(CheckJavadocPresence(m, JavadocKind::kConstructor).size(), 1u);
  auto methods = CheckJavadocPresence(m, JavadocKind::kMethod);
  ASSERT_EQ(methods.size(), 1u);
  EXPECT_EQ(methods[0].line, 11);
}

TEST(PracticeTest, CommentedAndTestCatchesAndBuilderLoops) {
  AnalysisResult r = AnalyzeRepository(FixtureDir() / "practice", {});
  EXPECT_EQ(r.files.size(), 4u);
  EXPECT_EQ(CountOf(r.violations, Category::kEmptyCatchBlock), 0u);
  std::vector<Violation> concat;
  for (const Violation& v : r.violations) {
    if (v.category == Category::kStringConcatenation) concat.push_back(v);
  }
  ASSERT_EQ(concat.size(), 1u);
  EXPECT_EQ(concat[0].filePath, "LoopConcat.java");
  EXPECT_EQ(concat[0].line, 7);
}

TEST(PracticeTest, EmptyCatchVariants) {
  auto v = CheckEmptyCatch(
      One("package p;\nclass A {\n  void f() {\n"
          "    try { g(); } catch (Exception e) {}\n"
          "    try { g(); } catch (Exception expected) {}\n"
          "    try { g(); } catch (Exception e) { /* fine */ }\n"
          "    try { g(); } catch (Exception e) { g(); }\n"
          "  }\n  @Test\n  void t() {\n"
          "    try { g(); } catch (Exception expectedFailure) {}\n"
          "    try { g(); } catch (Exception e) {}\n"
          "  }\n  void g() {}\n}\n"));
  // The `expected` exemption applies inside test methods only.
  std::vector<int> lines;
  for (const Violation& x : v) lines.push_back(x.line);
  EXPECT_EQ(lines, (std::vector<int>{4, 5, 12}));
}

TEST(PracticeTest, FinalizeAndPrivateInstances) {
  EXPECT_EQ(CheckFinalizeOverride(
                One("package p;\nclass A {\n  protected void finalize() {}\n"
                    "  void finalize(int x) {}\n}\n"))
                .size(),
            1u);
  auto v = CheckPrivateInstances(
      One("package p;\nclass A {\n  public int count;\n"
          "  protected int level;\n  private int ok;\n"
          "  public static final int MAX = 1;\n  int shared;\n"
          "  int use() { return ok; }\n}\n"));
  std::vector<int> lines;
  for (const Violation& x : v) lines.push_back(x.line);
  EXPECT_EQ(lines, (std::vector<int>{3, 7}));
}

TEST(CrossFileTest, MissingOverrideAcrossFiles) {
  AnalysisResult r = AnalyzeFiles(
      {{kPath + "Base.java",
        "package p;\n/** Base type for shapes. */\npublic class Base {\n"
        "  /** Performs the work for this shape. */\n"
        "  public void work() {}\n"
        "  /** Older entry point kept for callers. */\n"
        "  @Deprecated\n  public void legacy() {}\n}\n"},
       {kPath + "Child.java",
        "package p;\n/** A derived shape. */\npublic class Child extends Base "
        "{\n  /** Performs the child work. */\n  public void work() {}\n"
        "  /** Runs the older entry point. */\n  public void legacy() {}\n}\n"}});
  ASSERT_EQ(CountOf(r.violations, Category::kMissingOverride), 1u);
  for (const Violation& v : r.violations) {
    if (v.category == Category::kMissingOverride) {
      EXPECT_EQ(v.filePath, kPath + "Child.java");
      EXPECT_EQ(v.line, 5);
    }
  }
}

TEST(CrossFileTest, UnqualifiedStaticAccess) {
  AnalysisResult r = AnalyzeFiles(
      {{kPath + "Util.java",
        "package p;\n/** Shared helpers. */\npublic final class Util {\n"
        "  /** Performs the shared work. */\n  public static void doWork() {}\n}\n"},
       {kPath + "Client.java",
        "package p;\n/** Calls the helpers. */\npublic class Client {\n"
        "  private final Util utilInstance = null;\n"
        "  private final StringBuilder text = new StringBuilder();\n"
        "  /** Runs all calls. */\n  public void run() {\n"
        "    Util.doWork();\n    utilInstance.doWork();\n"
        "    text.append(\"x\");\n  }\n}\n"}});
  EXPECT_EQ(CountOf(r.violations, Category::kUnqualifiedStaticAccess), 1u);
}

TEST(CommentedCodeTest, Heuristic) {
  for (const char* code :
       {"int x = 5;", "foo.bar();", "return value;", "if (ready) {", "}",
        "for (int i = 0; i < n; i++) {", "final String name = load(key)",
        "private int count;", "throw new IllegalStateException(msg)"}) {
    EXPECT_TRUE(LooksLikeCommentedOutCode(code)) << code;
  }
  for (const char* prose :
       {"", "This method returns the value;", "see {@code Foo}",
        "TODO: tidy this up", "Note: the cache is warm.",
        "return the value to the caller;", "int values are stored here"}) {
    EXPECT_FALSE(LooksLikeCommentedOutCode(prose)) << prose;
  }
}

TEST(UselessTest, OneViolationPerLineAndExemptions) {
  auto v = CheckUseless(
      One("package p;\nimport java.util.List;\nimport java.util.Map;\n"
          "class A implements java.io.Serializable {\n"
          "  private static final long serialVersionUID = 1L;\n"
          "  private int unused;\n"
          "  private void writeObject(java.io.ObjectOutputStream s) {}\n"
          "  private void helper() {}\n"
          "  Map<String, String> m() { int tmp = 0; return null; }\n"
          "  // int dead = 0;\n"
          "}\n"));
  std::vector<int> lines;
  for (const Violation& x : v) lines.push_back(x.line);
  EXPECT_EQ(lines, (std::vector<int>{2, 6, 8, 9, 10}));
}

TEST(OrderingTest, FixtureMatrix) {
  const int expected[4][4] = {
      {0, 5, 5, 5}, {1, 0, 1, 3}, {2, 1, 0, 3}, {3, 2, 3, 0}};
  for (int f = 1; f <= 4; ++f) {
    fs::path file = FixtureDir() / "ordering" /
                    ("ordering" + std::to_string(f)) / "Layout.java";
    SourceFileModel m =
        ParseCompilationUnit(testing::ReadFile(file), "Layout.java");
    for (int c = 1; c <= 4; ++c) {
      EXPECT_EQ(static_cast<int>(
                    CheckOrdering(m, OrderingConfig::BuiltIn(c)).size()),
                expected[f - 1][c - 1])
          << "fixture " << f << " config " << c;
    }
  }
}

TEST(OrderingTest, BuiltInsArePermutations) {
  for (int id = 1; id <= 4; ++id) {
    EXPECT_TRUE(OrderingConfig::BuiltIn(id).IsPermutation());
  }
  EXPECT_THROW(OrderingConfig::BuiltIn(5), std::invalid_argument);
}

// A member is out of order exactly when some earlier member ranks later.
TEST(OrderingTest, PropertyMatchesPairwiseOracle) {
  std::mt19937 rng(99);
  const char* const kSnippets[6] = {
      "static class N%d {}",     "static int s%d;",  "static void sm%d() {}",
      "int f%d;",                "A(int x%d) {}",    "void m%d() {}"};
  const MemberGroup kGroups[6] = {
      MemberGroup::kInnerTypes,     MemberGroup::kStaticFields,
      MemberGroup::kStaticMethods,  MemberGroup::kInstanceFields,
      MemberGroup::kConstructors,   MemberGroup::kInstanceMethods};
  for (int round = 0; round < 400; ++round) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> kinds;
    std::string src = "package p;\nclass A {\n";
    for (int i = 0; i < n; ++i) {
      int k = static_cast<int>(rng() % 6);
      kinds.push_back(k);
      char buf[64];
      std::snprintf(buf, sizeof buf, kSnippets[k], i);
      src += std::string("  ") + buf + "\n";
    }
    src += "}\n";
    SourceFileModel m = One(src);
    for (int id = 1; id <= 4; ++id) {
      OrderingConfig cfg = OrderingConfig::BuiltIn(id);
      auto rank = [&](int kind) {
        auto it = std::find(cfg.rankedGroups.begin(), cfg.rankedGroups.end(),
                            kGroups[kind]);
        return it - cfg.rankedGroups.begin();
      };
      std::vector<int> expected_lines;
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (rank(kinds[static_cast<std::size_t>(i)]) >
              rank(kinds[static_cast<std::size_t>(j)])) {
            expected_lines.push_back(3 + j);
            break;
          }
        }
      }
      std::vector<int> got;
      for (const Violation& v : CheckOrdering(m, cfg)) got.push_back(v.line);
      EXPECT_EQ(got, expected_lines) << src << "config " << id;
    }
  }
}

TEST(CategoryTest, NamesRoundTrip) {
  EXPECT_EQ(AllCategories().size(), kCategoryCount);
  for (Category c : AllCategories()) {
    EXPECT_EQ(CategoryFromName(CategoryName(c)), c);
  }
  EXPECT_FALSE(CategoryFromName("Nope").has_value());
  EXPECT_EQ(GroupOf(Category::kOrdering), CategoryGroup::kOrdering);
  EXPECT_EQ(GroupOf(Category::kUseless), CategoryGroup::kProgrammingPractice);
  EXPECT_EQ(GroupOf(Category::kJavadocField), CategoryGroup::kCodeStyle);
}

}  // namespace
}  // namespace jstyle
