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

#include "jstyle/analyzer.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jstyle/project_index.h"
#include "parallel.h"

namespace jstyle {
namespace {

struct ParseOutcome {
  std::optional<SourceFileModel> model;
  std::optional<SkippedFile> skipped;
};

ParseOutcome ParseOne(const DiscoveredFile& file, const std::string& text) {
  ParseOutcome out;
  if (!IsValidUtf8(text)) {
    out.skipped = SkippedFile{file.relativePath, "invalid UTF-8", 0, 0};
    return out;
  }
  try {
    SourceFileModel model = ParseCompilationUnit(text, file.relativePath);
    model.sourceRoot = file.sourceRoot;
    out.model = std::move(model);
  } catch (const ParseError& e) {
    std::string what = e.what();
    // Drop the "path:line:col: " prefix; the fields carry it.
    std::string prefix = e.path() + ":" + std::to_string(e.line()) + ":" +
                         std::to_string(e.column()) + ": ";
    if (what.starts_with(prefix)) what = what.substr(prefix.size());
    out.skipped =
        SkippedFile{file.relativePath, "parse error: " + what, e.line(),
                    e.column()};
  }
  return out;
}

AnalysisResult Finish(std::vector<SourceFileModel> models,
                      std::vector<SkippedFile> skipped,
                      const AnalysisOptions& options) {
  const Lexicon& lexicon =
      options.lexicon != nullptr ? *options.lexicon : Lexicon::BuiltIn();
  AnalysisResult r;
  for (const SourceFileModel& m : models) r.files.push_back(m.path);
  r.skipped = std::move(skipped);
  ProjectIndex index = ProjectIndex::Build(models);
  r.diagnostics = index.diagnostics();
  std::optional<OrderingConfig> ordering;
  if (options.ordering) ordering = OrderingConfig::BuiltIn(*options.ordering);
  r.violations = RunAll(models, index, lexicon, ordering);
  r.counts = CountConstructs(models, index);
  r.scores = Normalize(r.violations, r.counts, ordering.has_value());
  for (const CategoryScore& s : r.scores) {
    if (s.undefined) {
      r.diagnostics.push_back(std::string(CategoryName(s.category)) + ": " +
                              std::to_string(s.absolute) +
                              " violations but no constructs; score undefined");
    }
  }
  r.totalNormalized = TotalNormalized(r.scores);
  r.verdict = ClassifyAdherence(r.scores, options.threshold);
  return r;
}

}  // namespace

AnalysisResult AnalyzeSources(
    const std::vector<std::pair<DiscoveredFile, std::string>>& sources,
    const AnalysisOptions& options) {
  std::vector<ParseOutcome> outcomes(sources.size());
  internal::ParallelFor(sources.size(), options.jobs, [&](std::size_t i) {
    outcomes[i] = ParseOne(sources[i].first, sources[i].second);
  });
  std::vector<SourceFileModel> models;
  std::vector<SkippedFile> skipped;
  for (ParseOutcome& o : outcomes) {
    if (o.model) models.push_back(std::move(*o.model));
    if (o.skipped) skipped.push_back(std::move(*o.skipped));
  }
  return Finish(std::move(models), std::move(skipped), options);
}

AnalysisResult AnalyzeRepository(const std::filesystem::path& root,
                                 const AnalysisOptions& options) {
  std::vector<DiscoveredFile> files = DiscoverSources(root, options.discovery);
  std::vector<ParseOutcome> outcomes(files.size());
  internal::ParallelFor(files.size(), options.jobs, [&](std::size_t i) {
    std::ifstream in(root / files[i].relativePath, std::ios::binary);
    if (!in) {
      outcomes[i].skipped =
          SkippedFile{files[i].relativePath, "unreadable file", 0, 0};
      return;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    outcomes[i] = ParseOne(files[i], buf.str());
  });
  std::vector<SourceFileModel> models;
  std::vector<SkippedFile> skipped;
  for (ParseOutcome& o : outcomes) {
    if (o.model) models.push_back(std::move(*o.model));
    if (o.skipped) skipped.push_back(std::move(*o.skipped));
  }
  AnalysisResult r = Finish(std::move(models), std::move(skipped), options);
  r.repoPath = root.generic_string();
  return r;
}

AnalysisResult AnalyzeModels(std::vector<SourceFileModel> models,
                             const AnalysisOptions& options) {
  return Finish(std::move(models), {}, options);
}

bool ExceedsThreshold(const AnalysisResult& result, double threshold) {
  for (const CategoryScore& s : result.scores) {
    if (!IsAdherent(s.normalized, threshold)) return true;
  }
  return false;
}

}  // namespace jstyle
