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

#include "test_util.h"

#include <gtest/gtest.h>
#include <stdlib.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "subprocess.h"

namespace jstyle::testing {

namespace fs = std::filesystem;

fs::path FixtureDir() { return JSTYLE_FIXTURE_DIR; }

TempDir::TempDir() {
  std::string tmpl = (fs::temp_directory_path() / "jstyle-test-XXXXXX").string();
  if (mkdtemp(tmpl.data()) == nullptr) {
    throw std::runtime_error("mkdtemp failed");
  }
  path_ = tmpl;
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

fs::path TempDir::Write(const std::string& relative,
                        const std::string& content) const {
  fs::path p = path_ / relative;
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
  return p;
}

AnalysisResult AnalyzeFiles(const std::map<std::string, std::string>& files,
                            const AnalysisOptions& options) {
  std::vector<std::pair<DiscoveredFile, std::string>> sources;
  for (const auto& [path, text] : files) {
    DiscoveredFile f;
    f.relativePath = path;
    const std::string root = "src/main/java";
    if (path.rfind(root + "/", 0) == 0) f.sourceRoot = root;
    sources.emplace_back(f, text);
  }
  return AnalyzeSources(sources, options);
}

std::size_t CountOf(const std::vector<Violation>& violations, Category c) {
  std::size_t n = 0;
  for (const Violation& v : violations) n += v.category == c ? 1 : 0;
  return n;
}

const CategoryScore& ScoreOf(const AnalysisResult& result, Category c) {
  for (const CategoryScore& s : result.scores) {
    if (s.category == c) return s;
  }
  throw std::out_of_range("category not scored");
}

std::string RunGit(const fs::path& dir, const std::vector<std::string>& args,
                   const std::string& date) {
  std::vector<std::string> argv = {"env"};
  argv.push_back("GIT_CONFIG_GLOBAL=/dev/null");
  argv.push_back("GIT_CONFIG_NOSYSTEM=1");
  if (!date.empty()) {
    argv.push_back("GIT_AUTHOR_DATE=" + date);
    argv.push_back("GIT_COMMITTER_DATE=" + date);
  }
  argv.insert(argv.end(),
              {"git", "-C", dir.string(), "-c", "user.name=Fixture", "-c",
               "user.email=fixture@example.com", "-c", "commit.gpgsign=false",
               "-c", "init.defaultBranch=main"});
  argv.insert(argv.end(), args.begin(), args.end());
  internal::ProcessResult r = internal::RunProcess(argv);
  EXPECT_EQ(r.exitCode, 0) << "git failed: " << r.err;
  return r.out;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace jstyle::testing
