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

#include "jstyle/history.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <sstream>

#include "subprocess.h"

namespace jstyle {
namespace {

std::tm UtcTm(std::int64_t timestamp) {
  std::time_t t = static_cast<std::time_t>(timestamp);
  std::tm tm{};
  gmtime_r(&t, &tm);
  return tm;
}

std::string Git(const std::filesystem::path& repo,
                std::vector<std::string> args) {
  std::vector<std::string> argv = {"git", "-C", repo.string()};
  argv.insert(argv.end(), args.begin(), args.end());
  internal::ProcessResult r = internal::RunProcess(argv);
  if (r.exitCode != 0) {
    std::string cmd;
    for (const std::string& a : args) cmd += (cmd.empty() ? "" : " ") + a;
    std::string msg = r.err;
    while (!msg.empty() && (msg.back() == '\n' || msg.back() == '\r')) {
      msg.pop_back();
    }
    throw GitError("git " + cmd + " failed" + (msg.empty() ? "" : ": " + msg));
  }
  return r.out;
}

std::string Trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' ||
                        s.back() == ' ')) {
    s.pop_back();
  }
  return s;
}

// Puts the work tree back on the original ref when it goes out of scope.
class RefGuard {
 public:
  RefGuard(std::filesystem::path repo, std::string ref)
      : repo_(std::move(repo)), ref_(std::move(ref)) {}
  RefGuard(const RefGuard&) = delete;
  RefGuard& operator=(const RefGuard&) = delete;
  ~RefGuard() {
    try {
      Restore();
    } catch (...) {
    }
  }
  void Restore() {
    if (restored_) return;
    Git(repo_, {"-c", "advice.detachedHead=false", "checkout", "-q", ref_});
    restored_ = true;
  }

 private:
  std::filesystem::path repo_;
  std::string ref_;
  bool restored_ = false;
};

}  // namespace

std::string YearMonth::Label() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
  return buf;
}

YearMonth YearMonth::Next() const {
  return month == 12 ? YearMonth{year + 1, 1} : YearMonth{year, month + 1};
}

YearMonth YearMonth::Prev() const {
  return month == 1 ? YearMonth{year - 1, 12} : YearMonth{year, month - 1};
}

YearMonth MonthOf(std::int64_t timestamp) {
  std::tm tm = UtcTm(timestamp);
  return {tm.tm_year + 1900, tm.tm_mon + 1};
}

int DayOfMonth(std::int64_t timestamp) { return UtcTm(timestamp).tm_mday; }

std::int64_t MonthStart(YearMonth ym) {
  std::tm tm{};
  tm.tm_year = ym.year - 1900;
  tm.tm_mon = ym.month - 1;
  tm.tm_mday = 1;
  return static_cast<std::int64_t>(timegm(&tm));
}

std::optional<YearMonth> ParseYearMonth(const std::string& text) {
  int y = 0;
  int m = 0;
  int d = 0;
  char tail = 0;
  if (text.size() == 7 &&
      std::sscanf(text.c_str(), "%4d-%2d%c", &y, &m, &tail) == 2) {
    d = 1;
  } else if (text.size() != 10 ||
             std::sscanf(text.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &tail) !=
                 3) {
    return std::nullopt;
  }
  if (text[4] != '-' || m < 1 || m > 12 || d < 1 || d > 31 || y < 1970) {
    return std::nullopt;
  }
  return YearMonth{y, m};
}

YearMonth LastCompleteMonth() {
  return MonthOf(static_cast<std::int64_t>(std::time(nullptr))).Prev();
}

std::vector<YearMonth> WindowMonths(YearMonth last, int count) {
  std::vector<YearMonth> out;
  YearMonth ym = last;
  for (int i = 0; i < count; ++i) {
    out.push_back(ym);
    ym = ym.Prev();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::map<YearMonth, int> MonthlyActivity(
    const std::vector<CommitRecord>& commits,
    const std::vector<YearMonth>& window) {
  std::map<YearMonth, int> out;
  for (const YearMonth& ym : window) out[ym] = 0;
  for (const CommitRecord& c : commits) {
    auto it = out.find(MonthOf(c.timestamp));
    if (it != out.end()) ++it->second;
  }
  return out;
}

Eligibility IsEligible(const std::vector<CommitRecord>& commits,
                       const std::vector<YearMonth>& window,
                       int min_age_months) {
  Eligibility e;
  if (commits.empty()) {
    e.reasons.push_back("empty history");
    return e;
  }
  if (window.empty()) {
    e.reasons.push_back("empty window");
    return e;
  }
  std::int64_t first = commits.front().timestamp;
  for (const CommitRecord& c : commits) first = std::min(first, c.timestamp);
  e.ageMonths = std::max(0, window.back().Index() - MonthOf(first).Index() + 1);
  if (e.ageMonths < min_age_months) e.reasons.push_back("age");
  for (const auto& [month, count] : MonthlyActivity(commits, window)) {
    if (count == 0) {
      e.reasons.push_back("activity gap");
      break;
    }
  }
  e.eligible = e.reasons.empty();
  return e;
}

CommitRecord SelectMonthlyCommit(const std::vector<CommitRecord>& in_month) {
  if (in_month.empty()) {
    throw std::invalid_argument("no commits in month");
  }
  const CommitRecord* best = nullptr;
  int best_dist = 0;
  for (const CommitRecord& c : in_month) {
    int dist = std::abs(DayOfMonth(c.timestamp) - 15);
    if (best == nullptr || dist < best_dist ||
        (dist == best_dist && c.timestamp < best->timestamp)) {
      best = &c;
      best_dist = dist;
    }
  }
  return *best;
}

SpacingReport ReportSpacing(const std::vector<CommitRecord>& selected,
                            double flag_below_days) {
  SpacingReport report;
  std::vector<CommitRecord> sorted = selected;
  std::sort(sorted.begin(), sorted.end(),
            [](const CommitRecord& a, const CommitRecord& b) {
              return a.timestamp < b.timestamp;
            });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    double gap =
        static_cast<double>(sorted[i].timestamp - sorted[i - 1].timestamp) /
        86400.0;
    if (!report.minGapDays || gap < *report.minGapDays) {
      report.minGapDays = gap;
    }
    if (gap < flag_below_days) {
      report.closePairs.emplace_back(sorted[i - 1].id, sorted[i].id);
    }
  }
  return report;
}

std::vector<CommitRecord> ReadHistory(const std::filesystem::path& repo) {
  std::string out = Git(repo, {"log", "--first-parent", "--format=%H%x09%ct"});
  std::vector<CommitRecord> commits;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) continue;
    CommitRecord c;
    c.id = line.substr(0, tab);
    c.timestamp = std::strtoll(line.c_str() + tab + 1, nullptr, 10);
    commits.push_back(std::move(c));
  }
  std::reverse(commits.begin(), commits.end());
  return commits;
}

EvolutionResult Evolve(const std::filesystem::path& repo,
                       const EvolveOptions& options) {
  if (options.months < 1) {
    throw std::invalid_argument("months must be at least 1");
  }
  EvolutionResult result;
  result.repoPath = repo.string();
  if (Trim(Git(repo, {"rev-parse", "--is-inside-work-tree"})) != "true") {
    throw GitError(repo.string() + " is not a git work tree");
  }
  if (!Trim(Git(repo, {"status", "--porcelain", "--untracked-files=no"}))
           .empty()) {
    throw GitError(repo.string() + " has uncommitted changes");
  }

  std::vector<YearMonth> window = WindowMonths(
      options.asOf.value_or(LastCompleteMonth()), options.months);
  for (const YearMonth& ym : window) result.window.push_back(ym.Label());

  std::int64_t window_end = MonthStart(window.back().Next());
  std::vector<CommitRecord> commits;
  for (CommitRecord& c : ReadHistory(repo)) {
    if (c.timestamp < window_end) commits.push_back(std::move(c));
  }
  result.eligibility = IsEligible(commits, window, options.minAgeMonths);
  if (!result.eligibility.eligible && !options.ignoreEligibility) {
    return result;
  }

  std::map<YearMonth, std::vector<CommitRecord>> by_month;
  for (const CommitRecord& c : commits) {
    by_month[MonthOf(c.timestamp)].push_back(c);
  }

  std::string original;
  internal::ProcessResult sym = internal::RunProcess(
      {"git", "-C", repo.string(), "symbolic-ref", "-q", "--short", "HEAD"});
  original = sym.exitCode == 0 ? Trim(sym.out)
                               : Trim(Git(repo, {"rev-parse", "HEAD"}));

  std::vector<CommitRecord> selected;
  RefGuard guard(repo, original);
  for (const YearMonth& ym : window) {
    EvolutionSample sample;
    sample.monthLabel = ym.Label();
    auto it = by_month.find(ym);
    if (it == by_month.end()) {
      sample.failed = true;
      sample.error = "no commit in month";
      result.samples.push_back(std::move(sample));
      continue;
    }
    CommitRecord commit = SelectMonthlyCommit(it->second);
    sample.commit = commit;
    selected.push_back(commit);
    try {
      Git(repo,
          {"-c", "advice.detachedHead=false", "checkout", "-q", commit.id});
      AnalysisResult analysis = AnalyzeRepository(repo, options.analysis);
      sample.scores = std::move(analysis.scores);
      sample.totalNormalized = analysis.totalNormalized;
      sample.violationCount = analysis.violations.size();
    } catch (const std::exception& e) {
      sample.failed = true;
      sample.error = e.what();
    }
    result.samples.push_back(std::move(sample));
  }
  guard.Restore();
  result.spacing = ReportSpacing(selected);
  return result;
}

}  // namespace jstyle
