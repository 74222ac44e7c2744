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

// Normalized scores, corpus statistics, thresholds and sampling.

#ifndef JSTYLE_SCORING_H_
#define JSTYLE_SCORING_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jstyle/checkers.h"
#include "jstyle/project_index.h"
#include "jstyle/source_model.h"

namespace jstyle {

struct ConstructCounts {
  std::array<std::int64_t, kCategoryCount> denominators{};

  std::int64_t& operator[](Category c) {
    return denominators[static_cast<std::size_t>(c)];
  }
  std::int64_t operator[](Category c) const {
    return denominators[static_cast<std::size_t>(c)];
  }
};

ConstructCounts CountConstructs(const std::vector<SourceFileModel>& models,
                                const ProjectIndex& index);

struct CategoryScore {
  Category category = Category::kClassNames;
  std::int64_t absolute = 0;
  std::int64_t denominator = 0;
  double normalized = 0.0;
  // Violations without any construct to divide by; normalized is 0.
  bool undefined = false;

  bool operator==(const CategoryScore&) const = default;
};

// One score per scored category in enumeration order, plus Ordering when
// `include_ordering` is set.
std::vector<CategoryScore> Normalize(const std::vector<Violation>& violations,
                                     const ConstructCounts& counts,
                                     bool include_ordering = false);

// Unweighted mean over the 16 scored categories, JavadocFormatting capped
// at 1. Ordering never contributes.
double TotalNormalized(const std::vector<CategoryScore>& scores);

struct Stats {
  double min = 0;
  double max = 0;
  double mean = 0;
  double median = 0;
};

// Throws std::invalid_argument on empty input.
Stats Summarize(std::vector<double> values);

struct CategoryStats {
  Category category = Category::kClassNames;
  Stats absolute;
  Stats normalized;
};

using RepoScores = std::vector<CategoryScore>;

// Per category present in every repository. Throws on empty input.
std::vector<CategoryStats> Aggregate(const std::vector<RepoScores>& repos);

inline const std::vector<double>& DefaultThresholds() {
  static const std::vector<double> kThresholds = {
      0.25, 0.20, 0.15, 0.10, 0.05, 0.04, 0.03, 0.02, 0.01, 0.0};
  return kThresholds;
}

struct ThresholdRow {
  Category category = Category::kClassNames;
  std::vector<double> percentBelow;  // one per threshold
};

struct ThresholdTable {
  std::vector<double> thresholds;
  std::vector<ThresholdRow> rows;
};

// Percentage of repositories with normalized < t (<= 0 when t == 0).
ThresholdTable BuildThresholdTable(
    const std::vector<RepoScores>& repos,
    const std::vector<double>& thresholds = DefaultThresholds());

bool IsAdherent(double normalized, double threshold);

struct AdherenceVerdict {
  double threshold = 0.05;
  std::vector<std::pair<Category, bool>> perCategory;
  bool codeStyle = true;
  bool programmingPractice = true;
};

AdherenceVerdict ClassifyAdherence(const std::vector<CategoryScore>& scores,
                                   double threshold = 0.05);

struct RepoViolations {
  std::string repo;
  std::vector<Violation> violations;  // report order
};

struct SampledViolation {
  std::size_t group = 0;
  std::string repo;
  Violation violation;
};

struct SampleResult {
  std::size_t groupSize = 0;
  // [begin, end) repo indices per group.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  std::map<Category, std::vector<SampledViolation>> samples;
  std::vector<std::string> diagnostics;
};

// Contiguous groups of ceil(n / groups) repositories. Within a group the
// repositories are visited in a seeded random order and the first violation
// of each category is taken. Throws std::invalid_argument when `groups` is 0
// or exceeds the number of repositories.
SampleResult StratifiedSample(const std::vector<RepoViolations>& repos,
                              std::size_t groups, std::uint64_t seed);

std::string StatsCsv(const std::vector<CategoryStats>& stats);
std::string ThresholdCsv(const ThresholdTable& table);
std::string ScoresCsv(const std::vector<CategoryScore>& scores);

}  // namespace jstyle

#endif  // JSTYLE_SCORING_H_
