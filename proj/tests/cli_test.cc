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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "test_util.h"

namespace jstyle {
namespace {

using testing::FixtureDir;
using testing::TempDir;

struct CliRun {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args` (already shell-quoted where needed); stderr is
// discarded.
CliRun Cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " '" + std::string(JSTYLE_CLI) + "' " + args +
                    " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Fixture(const std::string& category, const std::string& variant) {
  return "'" + (FixtureDir() / "categories" / category / variant).string() +
         "'";
}

TEST(CliTest, VersionAndHelp) {
  CliRun v = Cli("--version");
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "jstyle 1.0.0\n");
  EXPECT_EQ(Cli("--help").code, 0);
  EXPECT_EQ(Cli("analyze --help").code, 0);
}

TEST(CliTest, AnalyzeFormatsAndExitCodes) {
  CliRun json = Cli("analyze " + Fixture("Useless", "clean"));
  EXPECT_EQ(json.code, 0);
  EXPECT_EQ(json.out.rfind("{\n  \"tool\": \"jstyle\"", 0), 0u);
  EXPECT_EQ(Cli("analyze " + Fixture("Useless", "clean")).out, json.out);

  CliRun md = Cli("analyze --format md " + Fixture("Useless", "seeded"));
  EXPECT_EQ(md.code, 0);
  EXPECT_EQ(md.out.rfind("# jstyle report", 0), 0u);

  EXPECT_EQ(Cli("analyze --fail-over " + Fixture("Useless", "clean")).code, 0);
  EXPECT_EQ(Cli("analyze --fail-over " + Fixture("Useless", "seeded")).code, 1);
  EXPECT_EQ(Cli("analyze --fail-over --threshold 1 " +
                Fixture("Useless", "seeded"))
                .code,
            0);
}

TEST(CliTest, UsageErrorsExitTwo) {
  const std::string repo = Fixture("Useless", "clean");
  EXPECT_EQ(Cli("").code, 2);
  EXPECT_EQ(Cli("frobnicate").code, 2);
  EXPECT_EQ(Cli("analyze").code, 2);
  EXPECT_EQ(Cli("analyze --format xml " + repo).code, 2);
  EXPECT_EQ(Cli("analyze --threshold 7 " + repo).code, 2);
  EXPECT_EQ(Cli("analyze --ordering 9 " + repo).code, 2);
  EXPECT_EQ(Cli("evolve --as-of 2024-13 " + repo).code, 2);
}

TEST(CliTest, RuntimeErrorsExitThree) {
  EXPECT_EQ(Cli("analyze /nonexistent/repo").code, 3);
  EXPECT_EQ(Cli("evolve " + Fixture("Useless", "clean")).code, 3);
  TempDir dir;
  dir.Write("bad.cfg", "colour = red\n");
  EXPECT_EQ(Cli("analyze --config '" + (dir.path() / "bad.cfg").string() +
                "' " + Fixture("Useless", "clean"))
                .code,
            3);
}

TEST(CliTest, ConfigPrecedence) {
  TempDir dir;
  dir.Write("env.cfg", "threshold = 0.2\n");
  dir.Write("file.cfg", "threshold = 0.3\n");
  const std::string repo = Fixture("Useless", "clean");
  const std::string env =
      "JSTYLE_CONFIG='" + (dir.path() / "env.cfg").string() + "'";
  const std::string file = "--config '" + (dir.path() / "file.cfg").string() + "'";
  auto threshold_of = [](const CliRun& r) {
    auto pos = r.out.find("\"threshold\": ");
    return pos == std::string::npos ? std::string()
                                    : r.out.substr(pos + 13, 6);
  };
  EXPECT_EQ(threshold_of(Cli("analyze " + repo)), "0.0500");
  EXPECT_EQ(threshold_of(Cli("analyze " + repo, env)), "0.2000");
  EXPECT_EQ(threshold_of(Cli("analyze " + file + " " + repo, env)), "0.3000");
  EXPECT_EQ(threshold_of(Cli("analyze --threshold 0.4 " + file + " " + repo,
                             env)),
            "0.4000");
}

TEST(CliTest, ClaimsCorpusSample) {
  TempDir dir;
  dir.Write("repo/README.md", "Formatted with google-java-style.\n");
  CliRun claims = Cli("claims --format csv '" + (dir.path() / "repo").string() + "'");
  EXPECT_EQ(claims.code, 0);
  EXPECT_NE(claims.out.find("GoogleExplicit"), std::string::npos);

  dir.Write("repos.txt",
            (FixtureDir() / "categories/Useless/seeded").string() + "\n" +
                (FixtureDir() / "categories/Useless/clean").string() + "\n");
  const std::string out = (dir.path() / "out").string();
  CliRun corpus = Cli("corpus --jobs 2 --out-dir '" + out + "' '" +
                   (dir.path() / "repos.txt").string() + "'");
  EXPECT_EQ(corpus.code, 0);
  CliRun sample = Cli("sample --groups 2 --seed 3 --format csv '" + out +
                   "/reports'");
  EXPECT_EQ(sample.code, 0);
  EXPECT_EQ(sample.out.rfind("category,group,repo,file,line,message\n", 0), 0u);
  EXPECT_EQ(Cli("sample --groups 5 '" + out + "/reports'").code, 2);
}

}  // namespace
}  // namespace jstyle
