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

#include "jstyle/scoring.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "text_util.h"

namespace jstyle {
namespace {

using internal::FormatFixed;

bool IsClassLike(TypeKind k) {
  return k == TypeKind::kClass || k == TypeKind::kEnum ||
         k == TypeKind::kRecord;
}

void CountBody(const BodyFacts& body, ConstructCounts& c) {
  c[Category::kVariableNames] += static_cast<std::int64_t>(body.localVars.size());
  c[Category::kStringConcatenation] += static_cast<std::int64_t>(body.loops.size());
  c[Category::kEmptyCatchBlock] += static_cast<std::int64_t>(body.catches.size());
}

// Uniform value in [0, bound) by rejection, so results do not depend on the
// standard library's distribution implementation.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

ConstructCounts CountConstructs(const std::vector<SourceFileModel>& models,
                                const ProjectIndex& index) {
  ConstructCounts c;
  for (std::size_t f = 0; f < models.size(); ++f) {
    const SourceFileModel& model = models[f];
    c[Category::kPackageNames] += 1;
    c[Category::kUseless] += model.lineCount;
    for (std::size_t t = 0; t < model.types.size(); ++t) {
      const TypeFact& type = model.types[t];
      c[Category::kFinalizeOverride] += 1;
      if (IsClassLike(type.kind)) {
        c[Category::kClassNames] += 1;
        if (type.visibility == Visibility::kPublic) {
          c[Category::kJavadocClass] += 1;
        }
      }
      for (const BodyFacts& b : type.initializers) CountBody(b, c);
      c[Category::kOrdering] += static_cast<std::int64_t>(type.members.size());
      for (const MemberFact& m : type.members) {
        const bool pub = m.visibility == Visibility::kPublic;
        if (m.body) CountBody(*m.body, c);
        c[Category::kVariableNames] += static_cast<std::int64_t>(m.params.size());
        if (m.IsField()) {
          c[Category::kVariableNames] += 1;
          if (pub) c[Category::kJavadocField] += 1;
          if (m.kind == MemberKind::kInstanceField) {
            c[Category::kPrivateInstances] += 1;
          }
        } else if (m.IsMethod()) {
          c[Category::kMethodNames] += 1;
          if (pub) c[Category::kJavadocMethod] += 1;
          if (m.javadoc && !m.javadoc->inheritsDoc) {
            c[Category::kJavadocFormatting] += 1;
          }
          OverrideResolution r = ResolveOverride(index, f, t, m);
          if (r.overrides && r.parentResolved && !r.parentDeprecated) {
            c[Category::kMissingOverride] += 1;
          }
        } else if (m.kind == MemberKind::kConstructor && pub) {
          c[Category::kJavadocConstructor] += 1;
        }
      }
    }
    for (std::size_t t = 0; t < model.types.size(); ++t) {
      auto count_accesses = [&](const BodyFacts& body) {
        for (const AccessFact& a : body.memberAccesses) {
          StaticAccessResolution r = ResolveStaticAccess(index, f, t, a);
          if (r.resolved && r.isStaticMember) {
            c[Category::kUnqualifiedStaticAccess] += 1;
          }
        }
      };
      for (const MemberFact& m : model.types[t].members) {
        if (m.body) count_accesses(*m.body);
      }
      for (const BodyFacts& b : model.types[t].initializers) count_accesses(b);
    }
  }
  return c;
}

std::vector<CategoryScore> Normalize(const std::vector<Violation>& violations,
                                     const ConstructCounts& counts,
                                     bool include_ordering) {
  std::array<std::int64_t, kCategoryCount> absolute{};
  for (const Violation& v : violations) {
    absolute[static_cast<std::size_t>(v.category)] += 1;
  }
  std::vector<CategoryScore> scores;
  for (Category c : AllCategories()) {
    if (c == Category::kOrdering && !include_ordering) continue;
    CategoryScore s;
    s.category = c;
    s.absolute = absolute[static_cast<std::size_t>(c)];
    s.denominator = counts[c];
    if (s.denominator > 0) {
      s.normalized = static_cast<double>(s.absolute) /
                     static_cast<double>(s.denominator);
    } else {
      s.undefined = s.absolute > 0;
    }
    scores.push_back(s);
  }
  return scores;
}

double TotalNormalized(const std::vector<CategoryScore>& scores) {
  double sum = 0;
  std::size_t n = 0;
  for (const CategoryScore& s : scores) {
    if (s.category == Category::kOrdering) continue;
    double v = s.normalized;
    if (s.category == Category::kJavadocFormatting) v = std::min(v, 1.0);
    sum += v;
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

Stats Summarize(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("no values to summarize");
  std::sort(values.begin(), values.end());
  Stats s;
  s.min = values.front();
  s.max = values.back();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  const std::size_t n = values.size();
  s.median = n % 2 == 1 ? values[n / 2]
                        : (values[n / 2 - 1] + values[n / 2]) / 2.0;
  return s;
}

std::vector<CategoryStats> Aggregate(const std::vector<RepoScores>& repos) {
  if (repos.empty()) throw std::invalid_argument("no repositories to aggregate");
  std::vector<CategoryStats> out;
  for (Category c : AllCategories()) {
    std::vector<double> abs;
    std::vector<double> norm;
    for (const RepoScores& r : repos) {
      for (const CategoryScore& s : r) {
        if (s.category != c) continue;
        abs.push_back(static_cast<double>(s.absolute));
        norm.push_back(s.normalized);
      }
    }
    if (abs.size() != repos.size()) continue;
    out.push_back({c, Summarize(abs), Summarize(norm)});
  }
  return out;
}

ThresholdTable BuildThresholdTable(const std::vector<RepoScores>& repos,
                                   const std::vector<double>& thresholds) {
  if (repos.empty()) throw std::invalid_argument("no repositories");
  ThresholdTable table;
  table.thresholds = thresholds;
  for (Category c : AllCategories()) {
    std::vector<double> values;
    for (const RepoScores& r : repos) {
      for (const CategoryScore& s : r) {
        if (s.category == c) values.push_back(s.normalized);
      }
    }
    if (values.size() != repos.size()) continue;
    ThresholdRow row;
    row.category = c;
    for (double t : thresholds) {
      auto below = std::count_if(values.begin(), values.end(),
                                 [&](double v) { return IsAdherent(v, t); });
      row.percentBelow.push_back(100.0 * static_cast<double>(below) /
                                 static_cast<double>(values.size()));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

bool IsAdherent(double normalized, double threshold) {
  return threshold <= 0 ? normalized <= 0 : normalized < threshold;
}

AdherenceVerdict ClassifyAdherence(const std::vector<CategoryScore>& scores,
                                   double threshold) {
  AdherenceVerdict v;
  v.threshold = threshold;
  for (const CategoryScore& s : scores) {
    bool ok = IsAdherent(s.normalized, threshold);
    v.perCategory.emplace_back(s.category, ok);
    switch (GroupOf(s.category)) {
      case CategoryGroup::kCodeStyle:
        v.codeStyle = v.codeStyle && ok;
        break;
      case CategoryGroup::kProgrammingPractice:
        v.programmingPractice = v.programmingPractice && ok;
        break;
      case CategoryGroup::kOrdering:
        break;
    }
  }
  return v;
}

SampleResult StratifiedSample(const std::vector<RepoViolations>& repos,
                              std::size_t groups, std::uint64_t seed) {
  if (groups == 0) throw std::invalid_argument("group count must be positive");
  if (groups > repos.size()) {
    throw std::invalid_argument(
        "group count " + std::to_string(groups) + " exceeds repository count " +
        std::to_string(repos.size()));
  }
  SampleResult result;
  const std::size_t n = repos.size();
  result.groupSize = (n + groups - 1) / groups;
  for (std::size_t g = 0; g < groups; ++g) {
    std::size_t begin = std::min(n, g * result.groupSize);
    std::size_t end = std::min(n, begin + result.groupSize);
    result.groups.emplace_back(begin, end);
    if (begin == end) {
      result.diagnostics.push_back("group " + std::to_string(g + 1) +
                                   " is empty");
    }
  }

  std::mt19937_64 rng(seed);
  for (std::size_t g = 0; g < groups; ++g) {
    auto [begin, end] = result.groups[g];
    std::vector<std::size_t> order(end - begin);
    std::iota(order.begin(), order.end(), begin);
    for (std::size_t i = order.size(); i > 1; --i) {
      std::size_t j = UniformBelow(rng, i);
      std::swap(order[i - 1], order[j]);
    }
    for (Category c : AllCategories()) {
      for (std::size_t r : order) {
        const auto& vs = repos[r].violations;
        auto it = std::find_if(vs.begin(), vs.end(), [&](const Violation& v) {
          return v.category == c;
        });
        if (it == vs.end()) continue;
        result.samples[c].push_back({g, repos[r].repo, *it});
        break;
      }
    }
  }
  for (Category c : AllCategories()) {
    std::size_t got = result.samples.count(c) ? result.samples[c].size() : 0;
    if (got < groups) {
      result.diagnostics.push_back(
          std::string(CategoryName(c)) + ": " + std::to_string(got) + " of " +
          std::to_string(groups) + " groups contributed a sample");
    }
  }
  return result;
}

std::string StatsCsv(const std::vector<CategoryStats>& stats) {
  std::string out =
      "category,absMin,absMax,absMean,absMedian,normMin,normMax,normMean,"
      "normMedian\n";
  for (const CategoryStats& s : stats) {
    out += std::string(CategoryName(s.category));
    for (const Stats* st : {&s.absolute, &s.normalized}) {
      out += "," + FormatFixed(st->min) + "," + FormatFixed(st->max) + "," +
             FormatFixed(st->mean) + "," + FormatFixed(st->median);
    }
    out += "\n";
  }
  return out;
}

std::string ThresholdCsv(const ThresholdTable& table) {
  std::vector<std::size_t> cols(table.thresholds.size());
  std::iota(cols.begin(), cols.end(), 0);
  std::stable_sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) {
    return table.thresholds[a] > table.thresholds[b];
  });
  std::string out = "category";
  for (std::size_t i : cols) out += "," + FormatFixed(table.thresholds[i], 2);
  out += "\n";
  for (const ThresholdRow& row : table.rows) {
    out += std::string(CategoryName(row.category));
    for (std::size_t i : cols) out += "," + FormatFixed(row.percentBelow[i], 2);
    out += "\n";
  }
  return out;
}

std::string ScoresCsv(const std::vector<CategoryScore>& scores) {
  std::string out = "category,group,absolute,denominator,normalized\n";
  for (const CategoryScore& s : scores) {
    out += std::string(CategoryName(s.category)) + "," +
           std::string(GroupName(GroupOf(s.category))) + "," +
           std::to_string(s.absolute) + "," + std::to_string(s.denominator) +
           "," + FormatFixed(s.normalized) + "\n";
  }
  return out;
}

}  // namespace jstyle
