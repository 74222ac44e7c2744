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

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "jstyle/jstyle.h"

namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = JSTYLE_FIXTURE_DIR;

std::string Seeded(const std::string& category) {
  return (kFixtures / "categories" / category / "seeded").string();
}

std::string Take(char* s) {
  std::string out = s ? s : "";
  jstyle_string_free(s);
  return out;
}

class CApiTest : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_EQ(jstyle_config_new(&cfg_), JSTYLE_OK); }
  void TearDown() override { jstyle_config_free(cfg_); }
  jstyle_config* cfg_ = nullptr;
};

TEST_F(CApiTest, VersionAndDefaults) {
  EXPECT_STREQ(jstyle_version(), "1.0.0");
  char* digest = nullptr;
  ASSERT_EQ(jstyle_config_digest(cfg_, &digest), JSTYLE_OK);
  EXPECT_EQ(Take(digest).size(), 16u);
}

TEST_F(CApiTest, AnalyzeAndRender) {
  jstyle_report* report = nullptr;
  ASSERT_EQ(jstyle_analyze(cfg_, Seeded("Useless").c_str(), &report),
            JSTYLE_OK);
  EXPECT_EQ(jstyle_report_violation_count(report), 5u);
  EXPECT_EQ(jstyle_report_skipped_count(report), 0u);
  EXPECT_EQ(jstyle_report_exceeds_threshold(report), 1);

  char* json = nullptr;
  ASSERT_EQ(jstyle_report_render(report, "json", &json), JSTYLE_OK);
  std::string text = Take(json);
  EXPECT_EQ(text.rfind("{\n  \"tool\": \"jstyle\"", 0), 0u);

  char* bad = nullptr;
  EXPECT_EQ(jstyle_report_render(report, "yaml", &bad),
            JSTYLE_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(bad, nullptr);
  EXPECT_NE(std::string(jstyle_last_error()).find("yaml"), std::string::npos);
  jstyle_report_free(report);
}

TEST_F(CApiTest, ThresholdChangesVerdict) {
  ASSERT_EQ(jstyle_config_set_threshold(cfg_, 1.0), JSTYLE_OK);
  jstyle_report* report = nullptr;
  ASSERT_EQ(jstyle_analyze(cfg_, Seeded("FinalizeOverride").c_str(), &report),
            JSTYLE_OK);
  EXPECT_EQ(jstyle_report_exceeds_threshold(report), 1);
  jstyle_report_free(report);
  EXPECT_EQ(jstyle_config_set_threshold(cfg_, 1.5),
            JSTYLE_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(jstyle_config_set_ordering(cfg_, 9), JSTYLE_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(jstyle_config_set_ordering(cfg_, 2), JSTYLE_OK);
  EXPECT_EQ(jstyle_config_set_jobs(cfg_, 0), JSTYLE_ERR_INVALID_ARGUMENT);
}

TEST_F(CApiTest, ErrorCodes) {
  jstyle_report* report = nullptr;
  EXPECT_EQ(jstyle_analyze(cfg_, "/nonexistent/repo", &report), JSTYLE_ERR_IO);
  EXPECT_EQ(report, nullptr);
  EXPECT_STRNE(jstyle_last_error(), "");
  EXPECT_EQ(jstyle_analyze(nullptr, "x", &report),
            JSTYLE_ERR_INVALID_ARGUMENT);

  fs::path cfg_file = fs::temp_directory_path() / "jstyle_c_api_bad.cfg";
  std::ofstream(cfg_file) << "threshold = 0.1\nbogus = 1\n";
  EXPECT_EQ(jstyle_config_load_file(cfg_, cfg_file.c_str()), JSTYLE_ERR_PARSE);
  EXPECT_EQ(jstyle_config_load_file(cfg_, "/nonexistent.cfg"), JSTYLE_ERR_IO);
  fs::remove(cfg_file);

  EXPECT_EQ(jstyle_config_set_lexicon(cfg_, "/nonexistent.tsv"), JSTYLE_OK);
  EXPECT_NE(jstyle_analyze(cfg_, Seeded("Useless").c_str(), &report),
            JSTYLE_OK);
  EXPECT_EQ(jstyle_config_set_lexicon(cfg_, nullptr), JSTYLE_OK);

  jstyle_evolve_options opts;
  jstyle_evolve_options_init(&opts);
  EXPECT_EQ(opts.months, 12);
  EXPECT_EQ(opts.min_age_months, 36);
  EXPECT_EQ(jstyle_evolve(cfg_, Seeded("Useless").c_str(), &opts, &report),
            JSTYLE_ERR_GIT);
  opts.as_of = "2024-13";
  EXPECT_EQ(jstyle_evolve(cfg_, Seeded("Useless").c_str(), &opts, &report),
            JSTYLE_ERR_INVALID_ARGUMENT);
}

TEST_F(CApiTest, ClaimsSampleCorpus) {
  char* out = nullptr;
  ASSERT_EQ(jstyle_claims(cfg_, Seeded("Useless").c_str(), "json", &out),
            JSTYLE_OK);
  EXPECT_NE(Take(out).find("NoMention"), std::string::npos);
  EXPECT_EQ(jstyle_claims(cfg_, "/nonexistent", "json", &out), JSTYLE_ERR_IO);

  fs::path work = fs::temp_directory_path() / "jstyle_c_api_corpus";
  fs::create_directories(work);
  std::ofstream(work / "repos.txt")
      << Seeded("Useless") << "\n" << Seeded("EmptyCatchBlock") << "\n";
  ASSERT_EQ(jstyle_corpus(cfg_, (work / "repos.txt").c_str(),
                          (work / "out").c_str(), "csv", &out),
            JSTYLE_OK);
  EXPECT_EQ(Take(out).rfind("category,0.25", 0), 0u);
  ASSERT_EQ(jstyle_sample((work / "out" / "reports").c_str(), 2, 7, "json",
                          &out),
            JSTYLE_OK);
  EXPECT_NE(Take(out).find("\"seed\": \"7\""), std::string::npos);
  EXPECT_EQ(jstyle_sample((work / "out" / "reports").c_str(), 3, 7, "json",
                          &out),
            JSTYLE_ERR_INVALID_ARGUMENT);

  std::ofstream(work / "empty.txt") << "# nothing\n";
  EXPECT_EQ(jstyle_corpus(cfg_, (work / "empty.txt").c_str(), nullptr, "json",
                          &out),
            JSTYLE_ERR_INVALID_ARGUMENT);
  fs::remove_all(work);
}

}  // namespace
