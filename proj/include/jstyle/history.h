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

// Git history replay: monthly commit selection, eligibility filters and the
// per-month adherence series.

#ifndef JSTYLE_HISTORY_H_
#define JSTYLE_HISTORY_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jstyle/analyzer.h"
#include "jstyle/scoring.h"

namespace jstyle {

class GitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommitRecord {
  std::string id;
  std::int64_t timestamp = 0;  // seconds since the epoch, UTC

  bool operator==(const CommitRecord&) const = default;
};

struct YearMonth {
  int year = 1970;
  int month = 1;  // 1..12

  std::string Label() const;  // "YYYY-MM"
  YearMonth Next() const;
  YearMonth Prev() const;
  int Index() const { return year * 12 + (month - 1); }
  auto operator<=>(const YearMonth&) const = default;
};

YearMonth MonthOf(std::int64_t timestamp);
int DayOfMonth(std::int64_t timestamp);
// Seconds since the epoch at 00:00:00 UTC on the first day of `ym`.
std::int64_t MonthStart(YearMonth ym);
// Accepts "YYYY-MM" or "YYYY-MM-DD"; returns the containing month.
std::optional<YearMonth> ParseYearMonth(const std::string& text);
// The month before the current UTC month.
YearMonth LastCompleteMonth();
// `count` months ending with `last`, oldest first.
std::vector<YearMonth> WindowMonths(YearMonth last, int count);

// Commit counts per window month; months without commits map to 0.
std::map<YearMonth, int> MonthlyActivity(
    const std::vector<CommitRecord>& commits,
    const std::vector<YearMonth>& window);

struct Eligibility {
  bool eligible = false;
  int ageMonths = 0;
  std::vector<std::string> reasons;  // "empty history", "age", "activity gap"
};

// Age counts the calendar months from the first commit's month through the
// last window month, inclusive.
Eligibility IsEligible(const std::vector<CommitRecord>& commits,
                       const std::vector<YearMonth>& window,
                       int min_age_months = 36);

// The commit whose day of month is closest to 15; ties go to the earlier
// commit. Throws std::invalid_argument on an empty list.
CommitRecord SelectMonthlyCommit(const std::vector<CommitRecord>& in_month);

struct SpacingReport {
  std::optional<double> minGapDays;  // empty with fewer than two selections
  std::vector<std::pair<std::string, std::string>> closePairs;  // < 10 days
};

SpacingReport ReportSpacing(const std::vector<CommitRecord>& selected,
                            double flag_below_days = 10.0);

struct EvolutionSample {
  std::string monthLabel;
  std::optional<CommitRecord> commit;
  bool failed = false;
  std::string error;
  std::vector<CategoryScore> scores;
  double totalNormalized = 0;
  std::size_t violationCount = 0;
};

struct EvolveOptions {
  int months = 12;
  std::optional<YearMonth> asOf;  // last window month; default LastCompleteMonth()
  int minAgeMonths = 36;
  bool ignoreEligibility = false;
  AnalysisOptions analysis;
};

struct EvolutionResult {
  std::string repoPath;
  std::vector<std::string> window;  // month labels
  Eligibility eligibility;
  std::vector<EvolutionSample> samples;  // empty when ineligible
  SpacingReport spacing;
};

// First-parent commits reachable from HEAD, oldest first.
std::vector<CommitRecord> ReadHistory(const std::filesystem::path& repo);

// Checks out the selected commit of each window month in turn, analyzes it
// and restores the original branch or commit afterwards. Throws GitError when
// `repo` is not a work tree or has uncommitted changes to tracked files.
EvolutionResult Evolve(const std::filesystem::path& repo,
                       const EvolveOptions& options);

}  // namespace jstyle

#endif  // JSTYLE_HISTORY_H_
