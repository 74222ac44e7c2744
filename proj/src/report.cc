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

#include "jstyle/report.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "json_writer.h"
#include "parallel.h"
#include "text_util.h"

namespace jstyle {
namespace {

namespace fs = std::filesystem;
using internal::FormatFixed;
using internal::Json;

std::string ReadText(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + p.string());
  out << text;
  if (!out) throw IoError("cannot write " + p.string());
}

Json ConfigJson(const Config& c) {
  Json excludes = Json::Array();
  for (const std::string& e : c.excludes) excludes.Push(e);
  Json j = Json::Object();
  j.Set("threshold", c.threshold);
  j.Set("ordering", c.ordering ? Json(*c.ordering) : Json());
  j.Set("lexicon", c.lexiconPath.empty() ? std::string("builtin")
                                         : c.lexiconPath);
  j.Set("exclude", std::move(excludes));
  j.Set("deepClaims", c.deepClaims);
  j.Set("digest", c.Digest());
  return j;
}

Json ScoreJson(const CategoryScore& s, double threshold, bool with_verdict) {
  Json j = Json::Object();
  j.Set("category", CategoryName(s.category));
  j.Set("group", GroupName(GroupOf(s.category)));
  j.Set("absolute", s.absolute);
  j.Set("denominator", s.denominator);
  j.Set("normalized", s.normalized);
  j.Set("undefined", s.undefined);
  if (with_verdict) j.Set("adherent", IsAdherent(s.normalized, threshold));
  return j;
}

Json ClaimJson(const ClaimResult& claim) {
  Json evidence = Json::Array();
  for (const ClaimEvidence& e : claim.evidence) {
    evidence.Push(Json::Object()
                      .Set("file", e.file)
                      .Set("line", e.line)
                      .Set("text", e.text));
  }
  return Json::Object()
      .Set("category", ToString(claim.category))
      .Set("evidence", std::move(evidence));
}

Json EvolutionJson(const EvolutionResult& evo) {
  Json window = Json::Array();
  for (const std::string& m : evo.window) window.Push(m);
  Json reasons = Json::Array();
  for (const std::string& r : evo.eligibility.reasons) reasons.Push(r);
  Json samples = Json::Array();
  for (const EvolutionSample& s : evo.samples) {
    Json scores = Json::Array();
    for (const CategoryScore& cs : s.scores) {
      scores.Push(ScoreJson(cs, 0, false));
    }
    Json js = Json::Object();
    js.Set("month", s.monthLabel);
    js.Set("commit", s.commit ? Json(s.commit->id) : Json());
    js.Set("timestamp", s.commit ? Json(s.commit->timestamp) : Json());
    js.Set("failed", s.failed);
    js.Set("error", s.error);
    js.Set("violations", s.violationCount);
    js.Set("totalNormalized", s.totalNormalized);
    js.Set("scores", std::move(scores));
    samples.Push(std::move(js));
  }
  Json pairs = Json::Array();
  for (const auto& [a, b] : evo.spacing.closePairs) {
    pairs.Push(Json::Array().Push(a).Push(b));
  }
  return Json::Object()
      .Set("window", std::move(window))
      .Set("eligibility", Json::Object()
                              .Set("eligible", evo.eligibility.eligible)
                              .Set("ageMonths", evo.eligibility.ageMonths)
                              .Set("reasons", std::move(reasons)))
      .Set("samples", std::move(samples))
      .Set("spacing",
           Json::Object()
               .Set("minGapDays", evo.spacing.minGapDays
                                      ? Json(*evo.spacing.minGapDays)
                                      : Json())
               .Set("closePairs", std::move(pairs)));
}

std::string ReportJson(const Report& r) {
  const AnalysisResult& a = r.analysis;
  Json skipped = Json::Array();
  for (const SkippedFile& s : a.skipped) {
    skipped.Push(Json::Object()
                     .Set("path", s.path)
                     .Set("reason", s.reason)
                     .Set("line", s.line)
                     .Set("column", s.column));
  }
  Json scores = Json::Array();
  for (const CategoryScore& s : a.scores) {
    scores.Push(ScoreJson(s, a.verdict.threshold, true));
  }
  Json per_category = Json::Object();
  for (const auto& [cat, ok] : a.verdict.perCategory) {
    per_category.Set(std::string(CategoryName(cat)), ok);
  }
  Json violations = Json::Array();
  for (const Violation& v : a.violations) {
    violations.Push(Json::Object()
                        .Set("category", CategoryName(v.category))
                        .Set("file", v.filePath)
                        .Set("line", v.line)
                        .Set("message", v.message)
                        .Set("detail", v.detail ? Json(*v.detail) : Json()));
  }
  Json diagnostics = Json::Array();
  for (const std::string& d : a.diagnostics) diagnostics.Push(d);

  Json root = Json::Object();
  root.Set("tool", kToolName);
  root.Set("version", r.toolVersion);
  root.Set("repo", r.repoPath);
  root.Set("config", ConfigJson(r.config));
  root.Set("files", Json::Object()
                        .Set("analyzed", a.files.size())
                        .Set("skipped", std::move(skipped)));
  root.Set("claim", ClaimJson(r.claim));
  root.Set("scores", std::move(scores));
  root.Set("totalNormalized", a.totalNormalized);
  root.Set("verdict",
           Json::Object()
               .Set("threshold", a.verdict.threshold)
               .Set("codeStyle", a.verdict.codeStyle)
               .Set("programmingPractice", a.verdict.programmingPractice)
               .Set("categories", std::move(per_category)));
  root.Set("violations", std::move(violations));
  root.Set("diagnostics", std::move(diagnostics));
  if (r.evolution) root.Set("evolution", EvolutionJson(*r.evolution));
  return root.Dump();
}

// Keeps table cells on one line.
std::string MdCell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n' || c == '\r') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

std::string LinkTarget(const std::string& repo, const std::string& file,
                       int line) {
  std::string base = repo;
  if (!base.empty() && base.back() != '/') base += '/';
  return base + file + "#L" + std::to_string(line);
}

std::string ReportMarkdown(const Report& r) {
  const AnalysisResult& a = r.analysis;
  std::ostringstream md;
  md << "# jstyle report\n\n";
  md << "- Repository: " << MdCell(r.repoPath) << "\n";
  md << "- Tool version: " << r.toolVersion << "\n";
  md << "- Config digest: " << r.config.Digest() << "\n";
  md << "- Files analyzed: " << a.files.size() << ", skipped: "
     << a.skipped.size() << "\n";
  md << "- Claim: " << ToString(r.claim.category) << "\n";
  md << "- Total normalized: " << FormatFixed(a.totalNormalized) << "\n";
  md << "- Threshold: " << FormatFixed(a.verdict.threshold)
     << "; code style adherent: " << (a.verdict.codeStyle ? "yes" : "no")
     << "; programming practice adherent: "
     << (a.verdict.programmingPractice ? "yes" : "no") << "\n\n";

  md << "| Category | Group | Absolute | Denominator | Normalized | Adherent |\n";
  md << "|---|---|---:|---:|---:|---|\n";
  for (const CategoryScore& s : a.scores) {
    md << "| " << CategoryName(s.category) << " | "
       << GroupName(GroupOf(s.category)) << " | " << s.absolute << " | "
       << s.denominator << " | " << FormatFixed(s.normalized)
       << (s.undefined ? " (undefined)" : "") << " | "
       << (IsAdherent(s.normalized, a.verdict.threshold) ? "yes" : "no")
       << " |\n";
  }

  std::size_t shown = std::min(a.violations.size(), kMarkdownViolationLimit);
  md << "\n## Violations (" << shown << " of " << a.violations.size()
     << ")\n\n";
  for (std::size_t i = 0; i < shown; ++i) {
    const Violation& v = a.violations[i];
    md << "- [" << v.filePath << ":" << v.line << "]("
       << LinkTarget(r.repoPath, v.filePath, v.line) << ") "
       << CategoryName(v.category) << ": " << MdCell(v.message) << "\n";
  }
  if (!a.skipped.empty()) {
    md << "\n## Skipped files\n\n";
    for (const SkippedFile& s : a.skipped) {
      md << "- " << s.path << ": " << MdCell(s.reason) << "\n";
    }
  }
  if (r.evolution) {
    const EvolutionResult& e = *r.evolution;
    md << "\n## Evolution\n\n";
    md << "- Eligible: " << (e.eligibility.eligible ? "yes" : "no");
    for (const std::string& reason : e.eligibility.reasons) {
      md << " (" << reason << ")";
    }
    md << "\n";
    if (e.spacing.minGapDays) {
      md << "- Minimum gap between samples: "
         << FormatFixed(*e.spacing.minGapDays) << " days\n";
    }
    md << "\n| Month | Commit | Total normalized | Violations | Status |\n";
    md << "|---|---|---:|---:|---|\n";
    for (const EvolutionSample& s : e.samples) {
      md << "| " << s.monthLabel << " | "
         << (s.commit ? s.commit->id.substr(0, 12) : std::string("-"))
         << " | " << FormatFixed(s.totalNormalized) << " | "
         << s.violationCount << " | "
         << (s.failed ? "failed: " + MdCell(s.error) : std::string("ok"))
         << " |\n";
    }
  }
  return md.str();
}

std::string EvolutionCsv(const EvolutionResult& e) {
  std::string out =
      "month,commit,failed,category,absolute,denominator,normalized\n";
  for (const EvolutionSample& s : e.samples) {
    std::string prefix = s.monthLabel + "," +
                         (s.commit ? s.commit->id : std::string()) + "," +
                         (s.failed ? "true" : "false") + ",";
    if (s.scores.empty()) {
      out += prefix + ",,,\n";
      continue;
    }
    for (const CategoryScore& cs : s.scores) {
      out += prefix + std::string(CategoryName(cs.category)) + "," +
             std::to_string(cs.absolute) + "," +
             std::to_string(cs.denominator) + "," +
             FormatFixed(cs.normalized) + "\n";
    }
  }
  return out;
}

std::string RepoFileName(std::size_t index, const std::string& path) {
  std::string name = fs::path(path).lexically_normal().filename().string();
  if (name.empty() || name == "." || name == "..") {
    name = fs::path(path).lexically_normal().parent_path().filename().string();
  }
  std::string safe;
  for (char c : name) {
    safe += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
             c == '_' || c == '.')
                ? c
                : '_';
  }
  if (safe.empty()) safe = "repo";
  char prefix[16];
  std::snprintf(prefix, sizeof(prefix), "%04zu-", index);
  return prefix + safe + ".json";
}

}  // namespace

ReportFormat ParseReportFormat(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  if (name == "csv") return ReportFormat::kCsv;
  throw UsageError("unknown format '" + name +
                   "' (expected json, markdown or csv)");
}

AnalysisOptions MakeAnalysisOptions(const Config& config,
                                    const Lexicon* lexicon) {
  AnalysisOptions o;
  o.threshold = config.threshold;
  o.ordering = config.ordering;
  o.discovery.excludedDirNames = config.excludes;
  o.jobs = config.jobs;
  o.lexicon = lexicon;
  return o;
}

Report BuildReport(const fs::path& root, const Config& config) {
  std::optional<Lexicon> lexicon;
  if (!config.lexiconPath.empty()) {
    lexicon = Lexicon::LoadFile(config.lexiconPath);
  }
  Report r;
  r.repoPath = root.string();
  r.config = config;
  r.analysis = AnalyzeRepository(
      root, MakeAnalysisOptions(config, lexicon ? &*lexicon : nullptr));
  r.claim = ScanClaims(root, ClaimOptions{config.deepClaims});
  return r;
}

std::string RenderReport(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      return ReportJson(report);
    case ReportFormat::kMarkdown:
      return ReportMarkdown(report);
    case ReportFormat::kCsv:
      return report.evolution ? EvolutionCsv(*report.evolution)
                              : ScoresCsv(report.analysis.scores);
  }
  throw UsageError("unknown format");
}

std::vector<std::string> ReadPathsFile(const fs::path& file) {
  std::istringstream in(ReadText(file));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.pop_back();
    }
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    fs::path p = line.substr(b);
    if (p.is_relative()) p = file.parent_path() / p;
    out.push_back(p.lexically_normal().string());
  }
  return out;
}

CorpusResult RunCorpus(const std::vector<std::string>& paths,
                       const Config& config) {
  CorpusResult corpus;
  corpus.entries.resize(paths.size());
  // Repositories run in parallel; each one parses on a single thread.
  Config per_repo = config;
  per_repo.jobs = 1;
  std::optional<Lexicon> lexicon;
  if (!config.lexiconPath.empty()) {
    lexicon = Lexicon::LoadFile(config.lexiconPath);
  }
  const Lexicon* lex = lexicon ? &*lexicon : nullptr;
  internal::ParallelFor(paths.size(), config.jobs, [&](std::size_t i) {
    CorpusEntry& entry = corpus.entries[i];
    entry.path = paths[i];
    try {
      Report r;
      r.repoPath = paths[i];
      r.config = config;
      r.analysis =
          AnalyzeRepository(paths[i], MakeAnalysisOptions(per_repo, lex));
      r.claim = ScanClaims(paths[i], ClaimOptions{config.deepClaims});
      entry.report = std::move(r);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
  });
  std::vector<RepoScores> scores;
  for (const CorpusEntry& e : corpus.entries) {
    if (e.report) scores.push_back(e.report->analysis.scores);
  }
  if (!scores.empty()) {
    corpus.stats = Aggregate(scores);
    corpus.thresholds = BuildThresholdTable(scores);
  }
  return corpus;
}

std::string RenderCorpus(const CorpusResult& corpus, ReportFormat format) {
  if (format == ReportFormat::kCsv) return ThresholdCsv(corpus.thresholds);
  if (format == ReportFormat::kMarkdown) {
    std::ostringstream md;
    md << "# jstyle corpus\n\n| Repository | Files | Violations | Total "
          "normalized | Code style | Programming practice |\n"
          "|---|---:|---:|---:|---|---|\n";
    for (const CorpusEntry& e : corpus.entries) {
      if (!e.report) {
        md << "| " << MdCell(e.path) << " | - | - | - | error: "
           << MdCell(e.error) << " | |\n";
        continue;
      }
      const AnalysisResult& a = e.report->analysis;
      md << "| " << MdCell(e.path) << " | " << a.files.size() << " | "
         << a.violations.size() << " | " << FormatFixed(a.totalNormalized)
         << " | " << (a.verdict.codeStyle ? "yes" : "no") << " | "
         << (a.verdict.programmingPractice ? "yes" : "no") << " |\n";
    }
    md << "\n## Percentage of repositories below threshold\n\n| Category |";
    for (double t : corpus.thresholds.thresholds) {
      md << " " << FormatFixed(t, 2) << " |";
    }
    md << "\n|---|";
    for (std::size_t i = 0; i < corpus.thresholds.thresholds.size(); ++i) {
      md << "---:|";
    }
    md << "\n";
    for (const ThresholdRow& row : corpus.thresholds.rows) {
      md << "| " << CategoryName(row.category) << " |";
      for (double p : row.percentBelow) md << " " << FormatFixed(p, 2) << " |";
      md << "\n";
    }
    return md.str();
  }

  Json repos = Json::Array();
  for (const CorpusEntry& e : corpus.entries) {
    Json j = Json::Object();
    j.Set("repo", e.path);
    if (!e.report) {
      j.Set("error", e.error);
    } else {
      const AnalysisResult& a = e.report->analysis;
      j.Set("files", a.files.size());
      j.Set("violations", a.violations.size());
      j.Set("totalNormalized", a.totalNormalized);
      j.Set("codeStyle", a.verdict.codeStyle);
      j.Set("programmingPractice", a.verdict.programmingPractice);
      j.Set("claim", ToString(e.report->claim.category));
    }
    repos.Push(std::move(j));
  }
  Json stats = Json::Array();
  for (const CategoryStats& s : corpus.stats) {
    auto stat_json = [](const Stats& st) {
      return Json::Object()
          .Set("min", st.min)
          .Set("max", st.max)
          .Set("mean", st.mean)
          .Set("median", st.median);
    };
    stats.Push(Json::Object()
                   .Set("category", CategoryName(s.category))
                   .Set("absolute", stat_json(s.absolute))
                   .Set("normalized", stat_json(s.normalized)));
  }
  Json thresholds = Json::Array();
  for (double t : corpus.thresholds.thresholds) thresholds.Push(t);
  Json rows = Json::Array();
  for (const ThresholdRow& row : corpus.thresholds.rows) {
    Json pct = Json::Array();
    for (double p : row.percentBelow) pct.Push(p);
    rows.Push(Json::Object()
                  .Set("category", CategoryName(row.category))
                  .Set("percentBelow", std::move(pct)));
  }
  return Json::Object()
      .Set("tool", kToolName)
      .Set("version", kToolVersion)
      .Set("repos", std::move(repos))
      .Set("stats", std::move(stats))
      .Set("thresholds", Json::Object()
                             .Set("values", std::move(thresholds))
                             .Set("rows", std::move(rows)))
      .Dump();
}

void WriteCorpusOutputs(const CorpusResult& corpus, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir / "reports", ec);
  if (ec) throw IoError("cannot create " + (dir / "reports").string());
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    const CorpusEntry& e = corpus.entries[i];
    if (!e.report) continue;
    WriteText(dir / "reports" / RepoFileName(i, e.path),
              RenderReport(*e.report, ReportFormat::kJson));
  }
  WriteText(dir / "stats.csv", StatsCsv(corpus.stats));
  WriteText(dir / "thresholds.csv", ThresholdCsv(corpus.thresholds));
  WriteText(dir / "corpus.json", RenderCorpus(corpus, ReportFormat::kJson));
}

std::string RenderClaims(const ClaimResult& claim, const std::string& repo,
                         ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      return Json::Object()
          .Set("tool", kToolName)
          .Set("version", kToolVersion)
          .Set("repo", repo)
          .Set("claim", ClaimJson(claim))
          .Dump();
    case ReportFormat::kMarkdown: {
      std::string out = "# jstyle claims\n\n- Repository: " + MdCell(repo) +
                        "\n- Claim: " + ToString(claim.category) + "\n";
      for (const ClaimEvidence& e : claim.evidence) {
        out += "- " + e.file + ":" + std::to_string(e.line) + " " +
               MdCell(e.text) + "\n";
      }
      return out;
    }
    case ReportFormat::kCsv: {
      std::string out = "category,file,line,text\n";
      for (const ClaimEvidence& e : claim.evidence) {
        out += std::string(ToString(claim.category)) + "," +
               internal::CsvField(e.file) + "," + std::to_string(e.line) +
               "," + internal::CsvField(e.text) + "\n";
      }
      if (claim.evidence.empty()) {
        out += std::string(ToString(claim.category)) + ",,,\n";
      }
      return out;
    }
  }
  throw UsageError("unknown format");
}

std::vector<RepoViolations> LoadReportViolations(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError(dir.string() + " is not a directory");
  }
  std::vector<fs::path> files;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (it->is_regular_file(ec) && it->path().extension() == ".json") {
      files.push_back(it->path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<RepoViolations> out;
  for (const fs::path& f : files) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(ReadText(f));
    } catch (const nlohmann::json::exception& e) {
      throw ReportParseError(f.string() + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("violations")) continue;
    RepoViolations rv;
    rv.repo = j.value("repo", f.stem().string());
    if (!j["violations"].is_array()) {
      throw ReportParseError(f.string() + ": violations is not an array");
    }
    for (const auto& v : j["violations"]) {
      if (!v.is_object()) {
        throw ReportParseError(f.string() + ": malformed violation");
      }
      auto cat = CategoryFromName(v.value("category", std::string()));
      if (!cat) {
        throw ReportParseError(f.string() + ": unknown category in violation");
      }
      Violation viol;
      viol.category = *cat;
      viol.filePath = v.value("file", std::string());
      viol.line = v.value("line", 0);
      viol.message = v.value("message", std::string());
      if (v.contains("detail") && v["detail"].is_string()) {
        viol.detail = v["detail"].get<std::string>();
      }
      rv.violations.push_back(std::move(viol));
    }
    out.push_back(std::move(rv));
  }
  return out;
}

std::string RenderSample(const SampleResult& sample, std::size_t groups,
                         std::uint64_t seed, ReportFormat format) {
  if (format == ReportFormat::kMarkdown) {
    std::ostringstream md;
    md << "# jstyle sample\n\n- Groups: " << groups
       << "\n- Group size: " << sample.groupSize << "\n- Seed: " << seed
       << "\n\n| Category | Group | Repository | Location | Message |\n"
          "|---|---:|---|---|---|\n";
    for (const auto& [cat, items] : sample.samples) {
      for (const SampledViolation& s : items) {
        md << "| " << CategoryName(cat) << " | " << s.group << " | "
           << MdCell(s.repo) << " | " << MdCell(s.violation.filePath) << ":"
           << s.violation.line << " | " << MdCell(s.violation.message)
           << " |\n";
      }
    }
    for (const std::string& d : sample.diagnostics) {
      md << "\n- " << MdCell(d);
    }
    return md.str();
  }
  if (format == ReportFormat::kCsv) {
    std::string out = "category,group,repo,file,line,message\n";
    for (const auto& [cat, items] : sample.samples) {
      for (const SampledViolation& s : items) {
        out += std::string(CategoryName(cat)) + "," +
               std::to_string(s.group) + "," + internal::CsvField(s.repo) +
               "," + internal::CsvField(s.violation.filePath) + "," +
               std::to_string(s.violation.line) + "," +
               internal::CsvField(s.violation.message) + "\n";
      }
    }
    return out;
  }
  Json samples = Json::Object();
  for (const auto& [cat, items] : sample.samples) {
    Json arr = Json::Array();
    for (const SampledViolation& s : items) {
      arr.Push(Json::Object()
                   .Set("group", s.group)
                   .Set("repo", s.repo)
                   .Set("file", s.violation.filePath)
                   .Set("line", s.violation.line)
                   .Set("message", s.violation.message));
    }
    samples.Set(std::string(CategoryName(cat)), std::move(arr));
  }
  Json diagnostics = Json::Array();
  for (const std::string& d : sample.diagnostics) diagnostics.Push(d);
  return Json::Object()
      .Set("tool", kToolName)
      .Set("version", kToolVersion)
      .Set("groups", groups)
      .Set("groupSize", sample.groupSize)
      .Set("seed", std::to_string(seed))
      .Set("samples", std::move(samples))
      .Set("diagnostics", std::move(diagnostics))
      .Dump();
}

}  // namespace jstyle
