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

// Whole-repository analysis: discovery, parsing, indexing, checks, scores.

#ifndef JSTYLE_ANALYZER_H_
#define JSTYLE_ANALYZER_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jstyle/checkers.h"
#include "jstyle/lexicon.h"
#include "jstyle/scoring.h"
#include "jstyle/source_model.h"

namespace jstyle {

struct AnalysisOptions {
  double threshold = 0.05;
  std::optional<int> ordering;  // built-in ordering id, 1..4
  DiscoveryOptions discovery;
  int jobs = 1;                      // parser threads
  const Lexicon* lexicon = nullptr;  // null: the built-in lexicon
};

struct SkippedFile {
  std::string path;
  std::string reason;
  int line = 0;
  int column = 0;

  bool operator==(const SkippedFile&) const = default;
};

struct AnalysisResult {
  std::string repoPath;
  std::vector<std::string> files;  // analyzed, repo-relative
  std::vector<SkippedFile> skipped;
  std::vector<Violation> violations;  // sorted
  ConstructCounts counts;
  std::vector<CategoryScore> scores;
  double totalNormalized = 0;
  AdherenceVerdict verdict;
  std::vector<std::string> diagnostics;
};

// Parses already-read sources; `sources` pairs repo-relative paths with file
// contents. Exposed for tests and in-memory use.
AnalysisResult AnalyzeSources(
    const std::vector<std::pair<DiscoveredFile, std::string>>& sources,
    const AnalysisOptions& options);

// Throws IoError when `root` is not a readable directory.
AnalysisResult AnalyzeRepository(const std::filesystem::path& root,
                                 const AnalysisOptions& options);

// Scores from already-parsed models.
AnalysisResult AnalyzeModels(std::vector<SourceFileModel> models,
                             const AnalysisOptions& options);

// True when any scored category reaches the threshold.
bool ExceedsThreshold(const AnalysisResult& result, double threshold);

}  // namespace jstyle

#endif  // JSTYLE_ANALYZER_H_
