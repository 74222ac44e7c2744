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

// Report assembly and rendering, plus the corpus and sampling drivers.

#ifndef JSTYLE_REPORT_H_
#define JSTYLE_REPORT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jstyle/analyzer.h"
#include "jstyle/claims.h"
#include "jstyle/config.h"
#include "jstyle/history.h"
#include "jstyle/scoring.h"

namespace jstyle {

inline constexpr const char* kToolName = "jstyle";
inline constexpr const char* kToolVersion = "1.0.0";

// Raised for caller mistakes such as an unknown output format.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A saved report that cannot be read back.
class ReportParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReportFormat { kJson, kMarkdown, kCsv };

// Throws UsageError for anything but "json", "markdown"/"md" or "csv".
ReportFormat ParseReportFormat(const std::string& name);

struct Report {
  std::string toolVersion = kToolVersion;
  std::string repoPath;
  Config config;
  ClaimResult claim;
  AnalysisResult analysis;
  std::optional<EvolutionResult> evolution;
};

// Analysis options derived from `config`; `lexicon` must outlive their use.
AnalysisOptions MakeAnalysisOptions(const Config& config,
                                    const Lexicon* lexicon);

// Loads the configured lexicon (if any), analyzes `root` and scans claims.
Report BuildReport(const std::filesystem::path& root, const Config& config);

std::string RenderReport(const Report& report, ReportFormat format);

std::string RenderClaims(const ClaimResult& claim, const std::string& repo,
                         ReportFormat format);

inline constexpr std::size_t kMarkdownViolationLimit = 100;

struct CorpusEntry {
  std::string path;
  std::optional<Report> report;  // empty when the repository failed
  std::string error;
};

struct CorpusResult {
  std::vector<CorpusEntry> entries;  // input order
  std::vector<CategoryStats> stats;  // over successful entries
  ThresholdTable thresholds;
};

// Analyzes every repository, `config.jobs` at a time.
CorpusResult RunCorpus(const std::vector<std::string>& paths,
                       const Config& config);

// Newline-separated paths; blank lines and '#' comments are skipped.
std::vector<std::string> ReadPathsFile(const std::filesystem::path& file);

std::string RenderCorpus(const CorpusResult& corpus, ReportFormat format);

// Writes reports/NNNN-<name>.json, stats.csv, thresholds.csv and
// corpus.json under `dir`.
void WriteCorpusOutputs(const CorpusResult& corpus,
                        const std::filesystem::path& dir);

// Reads every *.json report in `dir` (sorted by file name). Throws IoError
// for unreadable input and ReportParseError for malformed reports.
std::vector<RepoViolations> LoadReportViolations(
    const std::filesystem::path& dir);

std::string RenderSample(const SampleResult& sample, std::size_t groups,
                         std::uint64_t seed, ReportFormat format);

}  // namespace jstyle

#endif  // JSTYLE_REPORT_H_
