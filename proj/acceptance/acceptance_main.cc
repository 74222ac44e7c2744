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

// Acceptance suite: one [PASS]/[FAIL] line per criterion. Exits non-zero
// when any criterion fails.

#include <stdlib.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jstyle/analyzer.h"
#include "jstyle/checkers.h"
#include "jstyle/claims.h"
#include "jstyle/history.h"
#include "jstyle/report.h"
#include "jstyle/scoring.h"
#include "subprocess.h"
#include "text_util.h"

namespace fs = std::filesystem;
using namespace jstyle;

namespace {

// Tolerances and limits.
constexpr double kListingSeconds = 1.0;
constexpr double kEvolveSeconds = 30.0;
constexpr double kAnalyzeSeconds = 5.0;
constexpr double kPercentTolerance = 0.01;
constexpr int kMinCleanFixtures = 16;
constexpr int kMinSeededFixtures = 16;
constexpr int kScaleLines = 10000;

const fs::path kFixtures = JSTYLE_FIXTURE_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void Require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

class TempDir {
 public:
  TempDir() {
    std::string tmpl =
        (fs::temp_directory_path() / "jstyle-accept-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  void Write(const std::string& rel, const std::string& text) const {
    fs::path p = path_ / rel;
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << text;
  }

 private:
  fs::path path_;
};

std::string Git(const fs::path& dir, const std::vector<std::string>& args,
                const std::string& date = "") {
  std::vector<std::string> argv = {"env", "GIT_CONFIG_GLOBAL=/dev/null",
                                   "GIT_CONFIG_NOSYSTEM=1"};
  if (!date.empty()) {
    argv.push_back("GIT_AUTHOR_DATE=" + date);
    argv.push_back("GIT_COMMITTER_DATE=" + date);
  }
  for (const char* a :
       {"git", "-C", "", "-c", "user.name=Fixture", "-c",
        "user.email=fixture@example.com", "-c", "commit.gpgsign=false", "-c",
        "init.defaultBranch=main"}) {
    argv.emplace_back(a);
  }
  argv[argv.size() - 9] = dir.string();
  argv.insert(argv.end(), args.begin(), args.end());
  internal::ProcessResult r = internal::RunProcess(argv);
  if (r.exitCode != 0) throw std::runtime_error("git failed: " + r.err);
  return r.out;
}

std::size_t Count(const std::vector<Violation>& vs, Category c) {
  std::size_t n = 0;
  for (const Violation& v : vs) n += v.category == c ? 1 : 0;
  return n;
}

const CategoryScore& ScoreOf(const AnalysisResult& r, Category c) {
  for (const CategoryScore& s : r.scores) {
    if (s.category == c) return s;
  }
  throw Failure("no score for " + std::string(CategoryName(c)));
}

AnalysisResult AnalyzeTree(const std::map<std::string, std::string>& files) {
  TempDir dir;
  for (const auto& [rel, text] : files) dir.Write(rel, text);
  return AnalyzeRepository(dir.path(), {});
}

// --- AC1 ---------------------------------------------------------------

Outcome ListingFidelity() {
  auto start = std::chrono::steady_clock::now();
  AnalysisResult r = AnalyzeRepository(kFixtures / "practice", {});
  double secs = Seconds(start);
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_file;
  for (const std::string& f : r.files) per_file[f] = {0, 0};
  for (const Violation& v : r.violations) {
    if (v.category == Category::kEmptyCatchBlock) per_file[v.filePath].first++;
    if (v.category == Category::kStringConcatenation) {
      per_file[v.filePath].second++;
    }
  }
  Require(r.files.size() == 4, "expected four listing files");
  Require(per_file["CommentedCatch.java"].first == 0,
          "commented catch flagged");
  Require(per_file["ExpectedCatch.java"].first == 0, "expected catch flagged");
  Require(per_file["LoopConcat.java"].second == 1,
          "loop concatenation count != 1");
  Require(per_file["BuilderLoop.java"].second == 0, "builder loop flagged");
  Require(secs < kListingSeconds, "runtime " + internal::FormatFixed(secs) + " s");
  return {true, "0/0/1/0 in " + internal::FormatFixed(secs, 3) + " s"};
}

// --- AC2 ---------------------------------------------------------------

Outcome FixtureCorpus() {
  int clean = 0;
  int seeded = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures / "categories")) {
    for (const std::string variant : {"clean", "seeded"}) {
      fs::path root = entry.path() / variant;
      std::ifstream in(root / "expected.txt");
      std::string name;
      std::size_t expected = 0;
      Require(static_cast<bool>(in >> name >> expected),
              "unreadable " + (root / "expected.txt").string());
      auto cat = CategoryFromName(name);
      Require(cat.has_value(), "unknown category " + name);
      AnalysisResult r = AnalyzeRepository(root, {});
      std::size_t got = Count(r.violations, *cat);
      Require(got == expected, root.string() + ": " + std::to_string(got) +
                                   " != " + std::to_string(expected));
      (variant == "clean" ? clean : seeded) += 1;
    }
  }
  Require(clean >= kMinCleanFixtures, "too few clean fixtures");
  Require(seeded >= kMinSeededFixtures, "too few seeded fixtures");
  return {true, std::to_string(clean) + " clean, " + std::to_string(seeded) +
                    " seeded"};
}

// --- AC3 ---------------------------------------------------------------

Outcome CrossFile() {
  const std::string base = "src/main/java/p/";
  auto parent = [&](bool deprecated) {
    return std::string("package p;\n\npublic class A {\n") +
           (deprecated ? "  @Deprecated\n" : "") + "  public void work() {}\n}\n";
  };
  const std::string child =
      "package p;\n\npublic class B extends A {\n  public void work() {}\n}\n";
  std::size_t plain = Count(
      AnalyzeTree({{base + "A.java", parent(false)}, {base + "B.java", child}})
          .violations,
      Category::kMissingOverride);
  std::size_t deprecated = Count(
      AnalyzeTree({{base + "A.java", parent(true)}, {base + "B.java", child}})
          .violations,
      Category::kMissingOverride);
  Require(plain == 1, "MissingOverride " + std::to_string(plain) + " != 1");
  Require(deprecated == 0,
          "deprecated parent gave " + std::to_string(deprecated));

  const std::string util =
      "package p;\n\npublic class Util {\n  public static void doWork() {}\n}\n";
  auto client = [](const std::string& field_type) {
    return "package p;\n\npublic class Client {\n  private " + field_type +
           " utilInstance;\n\n  void run() {\n    utilInstance.doWork();\n"
           "  }\n}\n";
  };
  std::size_t local = Count(AnalyzeTree({{base + "Util.java", util},
                                         {base + "Client.java", client("Util")}})
                                .violations,
                            Category::kUnqualifiedStaticAccess);
  std::size_t external =
      Count(AnalyzeTree({{base + "Util.java", util},
                         {base + "Client.java", client("java.util.Random")}})
                .violations,
            Category::kUnqualifiedStaticAccess);
  Require(local == 1, "UnqualifiedStaticAccess " + std::to_string(local));
  Require(external == 0, "external receiver gave " + std::to_string(external));
  return {true, "override 1/0, static access 1/0"};
}

// --- AC4 ---------------------------------------------------------------

Outcome Normalization() {
  std::string locals;
  for (int i = 0; i < 100; ++i) {
    locals += "    int " +
              (i < 5 ? "Bad_" + std::to_string(i) : "value" + std::to_string(i)) +
              " = 0;\n";
  }
  AnalysisResult vars = AnalyzeTree(
      {{"src/main/java/p/Holder.java",
        "package p;\n\nclass Holder {\n  void fill() {\n" + locals + "  }\n}\n"}});
  const CategoryScore& v = ScoreOf(vars, Category::kVariableNames);
  Require(v.denominator == 100 && v.absolute == 5,
          "variables " + std::to_string(v.absolute) + "/" +
              std::to_string(v.denominator));
  Require(internal::FormatFixed(v.normalized) == "0.0500",
          "variables score " + internal::FormatFixed(v.normalized));

  std::string catches;
  for (int i = 0; i < 9; ++i) {
    catches += "    try { run(); } catch (RuntimeException e" +
               std::to_string(i) + ") {}\n";
  }
  AnalysisResult empty = AnalyzeTree(
      {{"src/main/java/p/Runner.java",
        "package p;\n\nclass Runner {\n  void run() {}\n  void all() {\n" +
            catches + "  }\n}\n"}});
  const CategoryScore& c = ScoreOf(empty, Category::kEmptyCatchBlock);
  Require(internal::FormatFixed(c.normalized) == "1.0000",
          "empty catch score " + internal::FormatFixed(c.normalized));

  auto formatting = [](const std::string& doc, const std::string& decl) {
    SourceFileModel m = ParseCompilationUnit(
        "package p;\nclass A {\n" + doc + decl + "\n}\n", "p/A.java");
    return CheckJavadocFormatting(m).size();
  };
  std::size_t six = formatting(
      "  /**\n   * Does something.\n   * @param b\n   * @param b x\n   */\n",
      "  int f(int a) throws IOException { return a; }");
  Require(six == 6, "six-rule comment gave " + std::to_string(six));
  // Stacking every kind of defect never yields more than six.
  std::mt19937 rng(4);
  const std::vector<std::string> tags = {
      "@param b", "@param b x", "@param z", "@return", "@return r",
      "@throws IOException", "@throws X y", "@exception E"};
  for (int i = 0; i < 300; ++i) {
    std::string doc = "  /**\n   * Text.\n";
    for (int k = 0; k < 8; ++k) doc += "   * " + tags[rng() % tags.size()] + "\n";
    doc += "   */\n";
    std::size_t n = formatting(
        doc, rng() % 2 ? "  void g(int a, int c) throws IOException, E {}"
                       : "  int g(int a) { return a; }");
    Require(n <= 6, "formatting count " + std::to_string(n) + " > 6");
  }
  return {true, "0.0500, 1.0000, 6"};
}

// --- AC5 ---------------------------------------------------------------

Outcome Thresholds() {
  std::mt19937 rng(17);
  for (int round = 0; round < 100; ++round) {
    std::vector<RepoScores> repos(1 + rng() % 50);
    for (RepoScores& r : repos) {
      for (Category c : AllCategories()) {
        if (c == Category::kOrdering) continue;
        CategoryScore s;
        s.category = c;
        s.denominator = 200;
        s.absolute = static_cast<std::int64_t>(rng() % 61);
        s.normalized = static_cast<double>(s.absolute) / 200.0;
        r.push_back(s);
      }
    }
    ThresholdTable table = BuildThresholdTable(repos);
    Require(table.rows.size() == kScoredCategoryCount, "row count");
    for (const ThresholdRow& row : table.rows) {
      for (std::size_t i = 0; i < table.thresholds.size(); ++i) {
        // Compare in integer units of 1/200 to keep the oracle exact.
        long limit = std::lround(table.thresholds[i] * 200);
        int hits = 0;
        for (const RepoScores& r : repos) {
          for (const CategoryScore& s : r) {
            if (s.category != row.category) continue;
            hits += (limit == 0 ? s.absolute == 0 : s.absolute < limit) ? 1 : 0;
          }
        }
        double expected = 100.0 * hits / static_cast<double>(repos.size());
        Require(std::fabs(row.percentBelow[i] - expected) <= kPercentTolerance,
                "threshold percentage mismatch");
      }
    }
  }
  auto verdict = [](double value) {
    std::vector<CategoryScore> scores(1);
    scores[0].category = Category::kClassNames;
    scores[0].normalized = value;
    return ClassifyAdherence(scores, 0.05).perCategory[0].second;
  };
  Require(verdict(0.049), "0.049 not adherent");
  Require(!verdict(0.050), "0.050 adherent");
  return {true, "100 random corpora within 0.01; 0.049 yes, 0.050 no"};
}

// --- AC6 ---------------------------------------------------------------

Outcome Ordering() {
  for (int f = 1; f <= 4; ++f) {
    fs::path file = kFixtures / "ordering" / ("ordering" + std::to_string(f)) /
                    "Layout.java";
    std::ifstream in(file);
    std::stringstream text;
    text << in.rdbuf();
    SourceFileModel m = ParseCompilationUnit(text.str(), "Layout.java");
    bool other_positive = false;
    for (int c = 1; c <= 4; ++c) {
      std::size_t n = CheckOrdering(m, OrderingConfig::BuiltIn(c)).size();
      if (c == f) Require(n == 0, "fixture " + std::to_string(f) + " own config");
      if (c != f && n > 0) other_positive = true;
    }
    Require(other_positive, "fixture " + std::to_string(f) + " never flagged");
  }
  const char* const snippets[6] = {"static class N{} {}", "static int s{};",
                                   "static void sm{}() {}", "int f{};",
                                   "A(long x{}) {}", "void m{}() {}"};
  const MemberGroup groups[6] = {
      MemberGroup::kInnerTypes,    MemberGroup::kStaticFields,
      MemberGroup::kStaticMethods, MemberGroup::kInstanceFields,
      MemberGroup::kConstructors,  MemberGroup::kInstanceMethods};
  std::mt19937 rng(8);
  int classes = 0;
  for (int round = 0; round < 1000; ++round) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> kinds;
    std::string src = "package p;\nclass A {\n";
    for (int i = 0; i < n; ++i) {
      kinds.push_back(static_cast<int>(rng() % 6));
      std::string s = snippets[kinds.back()];
      s.replace(s.find("{}"), 2, std::to_string(i));
      src += "  " + s + "\n";
    }
    src += "}\n";
    SourceFileModel m = ParseCompilationUnit(src, "p/A.java");
    for (int id = 1; id <= 4; ++id) {
      OrderingConfig cfg = OrderingConfig::BuiltIn(id);
      auto rank = [&](int k) {
        for (int r = 0; r < 6; ++r) {
          if (cfg.rankedGroups[static_cast<std::size_t>(r)] == groups[k]) {
            return r;
          }
        }
        return -1;
      };
      // Pairwise inversions: member j is flagged when some earlier member
      // outranks it.
      std::size_t expected = 0;
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (rank(kinds[static_cast<std::size_t>(i)]) >
              rank(kinds[static_cast<std::size_t>(j)])) {
            ++expected;
            break;
          }
        }
      }
      Require(CheckOrdering(m, cfg).size() == expected,
              "ordering oracle mismatch:\n" + src);
    }
    ++classes;
  }
  return {true, "fixtures diagonal zero; " + std::to_string(classes) +
                    " random classes match"};
}

// --- AC7 ---------------------------------------------------------------

std::string ServiceSource(bool empty_catch, int revision) {
  return "package p;\n\n/** Runs the service loop for the current user. */\n"
         "public class Service {\n"
         "  /** Revision counter for this synthetic history file. */\n"
         "  public static final int REVISION = " +
         std::to_string(revision) +
         ";\n\n  void run() {\n    try {\n      step();\n    } catch "
         "(RuntimeException e) " +
         (empty_catch ? std::string("{}") : "{\n      recover();\n    }") +
         "\n  }\n\n  void step() {}\n\n  void recover() {}\n}\n";
}

std::map<std::string, std::string> Snapshot(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (auto it = fs::recursive_directory_iterator(root);
       it != fs::recursive_directory_iterator(); ++it) {
    if (it->path().filename() == ".git") {
      it.disable_recursion_pending();
      continue;
    }
    if (it->is_regular_file()) {
      std::ifstream in(it->path(), std::ios::binary);
      std::stringstream s;
      s << in.rdbuf();
      out[fs::relative(it->path(), root).string()] = s.str();
    }
  }
  return out;
}

Outcome Evolution() {
  TempDir repo;
  Git(repo.path(), {"init", "-q"});
  int rev = 0;
  std::string jan10;
  auto commit = [&](YearMonth ym, int day) {
    repo.Write("src/main/java/p/Service.java",
               ServiceSource(ym >= YearMonth{2024, 6}, ++rev));
    char date[40];
    std::snprintf(date, sizeof date, "%04d-%02d-%02dT12:00:00+0000", ym.year,
                  ym.month, day);
    Git(repo.path(), {"add", "-A"});
    Git(repo.path(), {"commit", "-q", "-m", "rev " + std::to_string(rev)},
        date);
  };
  for (YearMonth ym{2022, 1}; ym <= YearMonth{2024, 12}; ym = ym.Next()) {
    if (ym == YearMonth{2024, 1}) {
      for (int d : {2, 10, 27}) {
        commit(ym, d);
        if (d == 10) jan10 = Git(repo.path(), {"rev-parse", "HEAD"});
      }
    } else {
      commit(ym, 15);
    }
  }
  if (!jan10.empty() && jan10.back() == '\n') jan10.pop_back();
  repo.Write("scratch.txt", "untracked work\n");
  auto before = Snapshot(repo.path());
  std::string head = Git(repo.path(), {"symbolic-ref", "HEAD"});

  auto start = std::chrono::steady_clock::now();
  EvolveOptions options;
  options.asOf = YearMonth{2024, 12};
  EvolutionResult r = Evolve(repo.path(), options);
  double secs = Seconds(start);

  Require(r.eligibility.eligible, "synthetic history not eligible");
  Require(r.samples.size() == 12, "expected 12 samples");
  Require(r.samples[0].commit && r.samples[0].commit->id == jan10,
          "January selection is not the Jan 10 commit");
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const EvolutionSample& s = r.samples[i];
    Require(!s.failed, s.monthLabel + " failed: " + s.error);
    std::int64_t empty = -1;
    for (const CategoryScore& c : s.scores) {
      if (c.category == Category::kEmptyCatchBlock) empty = c.absolute;
    }
    Require(empty == (i >= 5 ? 1 : 0),
            "EmptyCatchBlock series wrong at " + s.monthLabel);
  }
  Require(Snapshot(repo.path()) == before, "work tree not restored");
  Require(Git(repo.path(), {"symbolic-ref", "HEAD"}) == head,
          "branch not restored");
  Require(secs < kEvolveSeconds, "evolve took " + internal::FormatFixed(secs));
  return {true, "Jan 10 selected, step at 2024-06, restored, " +
                    internal::FormatFixed(secs, 2) + " s"};
}

// --- AC8 ---------------------------------------------------------------

Outcome Claims() {
  TempDir google;
  google.Write("README.md", "# Widget\n\nThis project follows the Google Java "
                            "Style Guide.\n");
  TempDir general;
  general.Write("README.md", "# Widget\n");
  general.Write("CONTRIBUTING.md",
                "# Contributing\n\nFollow our coding standards.\n");
  TempDir none;
  none.Write("README.md", "# Widget\n\nA library for widgets.\n");
  Require(ScanClaims(google.path()).category == ClaimCategory::kGoogleExplicit,
          "Google README not GoogleExplicit");
  Require(ScanClaims(general.path()).category ==
              ClaimCategory::kMentionCodeStyle,
          "CONTRIBUTING not MentionCodeStyle");
  Require(ScanClaims(none.path()).category == ClaimCategory::kNoMention,
          "plain README not NoMention");
  return {true, "GoogleExplicit / MentionCodeStyle / NoMention"};
}

// --- AC9 ---------------------------------------------------------------

// A deterministic tree of generated classes, some with seeded defects.
int GenerateTree(const TempDir& dir) {
  std::mt19937 rng(2026);
  int lines = 0;
  for (int f = 0; lines < kScaleLines; ++f) {
    std::string pkg = "gen.mod" + std::to_string(f % 10);
    std::string cls = "Widget" + std::to_string(f);
    std::ostringstream s;
    s << "package " << pkg << ";\n\nimport java.util.List;\n"
      << "import java.util.ArrayList;\n\n"
      << "/** Holds generated widget state number " << f
      << " for the scale test. */\npublic class " << cls << " {\n"
      << "  private final List<String> names = new ArrayList<>();\n"
      << "  public int counter;\n\n";
    for (int m = 0; m < 12; ++m) {
      int defect = static_cast<int>(rng() % 6);
      s << "  /**\n   * Computes value " << m
        << " from the current names and counter.\n"
        << "   * @param input the input value used here\n"
        << "   * @return the computed result value\n   */\n"
        << "  public int compute" << m << "(int input) {\n"
        << "    int total = input;\n"
        << "    String text = \"\";\n"
        << "    for (String n : names) {\n";
      if (defect == 0) {
        s << "      text += n;\n";
      } else {
        s << "      total += n.length();\n";
      }
      s << "    }\n";
      if (defect == 1) {
        s << "    try {\n      total += Integer.parseInt(text);\n"
          << "    } catch (NumberFormatException e) {}\n";
      }
      if (defect == 2) s << "    int Unused_" << m << " = 0;\n";
      s << "    return total + counter + text.length();\n  }\n\n";
    }
    s << "}\n";
    std::string text = s.str();
    for (char c : text) lines += c == '\n' ? 1 : 0;
    dir.Write("src/main/java/gen/mod" + std::to_string(f % 10) + "/" + cls +
                  ".java",
              text);
  }
  return lines;
}

Outcome Determinism() {
  TempDir dir;
  int lines = GenerateTree(dir);
  Config config;
  auto start = std::chrono::steady_clock::now();
  Report report = BuildReport(dir.path(), config);
  std::string first = RenderReport(report, ReportFormat::kJson);
  double secs = Seconds(start);
  Require(report.analysis.skipped.empty(), "generated files were skipped");
  Require(!report.analysis.violations.empty(), "no violations found");
  std::string second = RenderReport(BuildReport(dir.path(), config),
                                    ReportFormat::kJson);
  Require(first == second, "JSON differs between runs");
  Require(secs < kAnalyzeSeconds, "analyze took " + internal::FormatFixed(secs));
  return {true, std::to_string(lines) + " lines in " +
                    std::to_string(report.analysis.files.size()) + " files, " +
                    std::to_string(report.analysis.violations.size()) +
                    " violations, identical JSON, " +
                    internal::FormatFixed(secs, 2) + " s"};
}

// --- AC10 --------------------------------------------------------------

Outcome Sampler() {
  std::vector<RepoViolations> repos;
  std::mt19937 rng(62);
  for (int r = 0; r < 62; ++r) {
    RepoViolations rv;
    rv.repo = "repo" + std::to_string(r);
    for (Category c : AllCategories()) {
      int n = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < n; ++k) {
        Violation v;
        v.category = c;
        v.filePath = "F" + std::to_string(k) + ".java";
        v.line = k + 1;
        v.message = "m";
        rv.violations.push_back(v);
      }
    }
    repos.push_back(rv);
  }
  SampleResult a = StratifiedSample(repos, 31, 1234);
  SampleResult b = StratifiedSample(repos, 31, 1234);
  Require(a.groupSize == 2, "group size " + std::to_string(a.groupSize));
  for (Category c : AllCategories()) {
    Require(a.samples[c].size() == 31,
            std::string(CategoryName(c)) + " has " +
                std::to_string(a.samples[c].size()) + " samples");
    for (std::size_t i = 0; i < 31; ++i) {
      Require(a.samples[c][i].repo == b.samples[c][i].repo &&
                  a.samples[c][i].violation == b.samples[c][i].violation,
              "sample not reproducible");
    }
  }
  return {true, "31 per category, groups of 2, reproducible"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"AC1", ListingFidelity}, {"AC2", FixtureCorpus}, {"AC3", CrossFile},
      {"AC4", Normalization},   {"AC5", Thresholds},    {"AC6", Ordering},
      {"AC7", Evolution},       {"AC8", Claims},        {"AC9", Determinism},
      {"AC10", Sampler}};
  int failed = 0;
  for (const auto& [name, fn] : checks) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    std::printf("[%s] %s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
