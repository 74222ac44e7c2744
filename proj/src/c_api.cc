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

#include "jstyle/jstyle.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "jstyle/config.h"
#include "jstyle/history.h"
#include "jstyle/lexicon.h"
#include "jstyle/report.h"

struct jstyle_config {
  jstyle::Config config;
};

struct jstyle_report {
  jstyle::Report report;
};

namespace {

thread_local std::string g_last_error;

jstyle_status Fail(jstyle_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Maps exceptions from the library onto status codes.
template <typename F>
jstyle_status Guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return JSTYLE_OK;
  } catch (const jstyle::UsageError& e) {
    return Fail(JSTYLE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const jstyle::ConfigError& e) {
    return Fail(JSTYLE_ERR_PARSE, e.what());
  } catch (const jstyle::LexiconError& e) {
    return Fail(JSTYLE_ERR_PARSE, e.what());
  } catch (const jstyle::ReportParseError& e) {
    return Fail(JSTYLE_ERR_PARSE, e.what());
  } catch (const jstyle::GitError& e) {
    return Fail(JSTYLE_ERR_GIT, e.what());
  } catch (const jstyle::IoError& e) {
    return Fail(JSTYLE_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(JSTYLE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(JSTYLE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(JSTYLE_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(JSTYLE_ERR_INTERNAL, "unknown error");
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

jstyle::ReportFormat Format(const char* format) {
  if (format == nullptr) throw jstyle::UsageError("format is null");
  return jstyle::ParseReportFormat(format);
}

void Require(const void* p, const char* what) {
  if (p == nullptr) throw jstyle::UsageError(std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* jstyle_version(void) { return jstyle::kToolVersion; }

const char* jstyle_last_error(void) { return g_last_error.c_str(); }

void jstyle_string_free(char* s) { std::free(s); }

jstyle_status jstyle_config_new(jstyle_config** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new jstyle_config();
  });
}

void jstyle_config_free(jstyle_config* config) { delete config; }

jstyle_status jstyle_config_load_file(jstyle_config* config,
                                      const char* path) {
  return Guard([&] {
    Require(config, "config");
    Require(path, "path");
    jstyle::Config updated = config->config;
    updated.LoadFile(path);
    config->config = std::move(updated);
  });
}

jstyle_status jstyle_config_set_threshold(jstyle_config* config,
                                          double threshold) {
  return Guard([&] {
    Require(config, "config");
    if (!jstyle::ValidThreshold(threshold)) {
      throw jstyle::UsageError("threshold must be in [0, 1]");
    }
    config->config.threshold = threshold;
  });
}

jstyle_status jstyle_config_set_ordering(jstyle_config* config, int ordering) {
  return Guard([&] {
    Require(config, "config");
    if (ordering == 0) {
      config->config.ordering.reset();
    } else if (jstyle::ValidOrdering(ordering)) {
      config->config.ordering = ordering;
    } else {
      throw jstyle::UsageError("ordering must be 1, 2, 3 or 4");
    }
  });
}

jstyle_status jstyle_config_set_lexicon(jstyle_config* config,
                                        const char* path) {
  return Guard([&] {
    Require(config, "config");
    config->config.lexiconPath = path == nullptr ? "" : path;
  });
}

jstyle_status jstyle_config_set_deep_claims(jstyle_config* config,
                                            int enabled) {
  return Guard([&] {
    Require(config, "config");
    config->config.deepClaims = enabled != 0;
  });
}

jstyle_status jstyle_config_set_jobs(jstyle_config* config, int jobs) {
  return Guard([&] {
    Require(config, "config");
    if (jobs < 1 || jobs > 256) {
      throw jstyle::UsageError("jobs must be in [1, 256]");
    }
    config->config.jobs = jobs;
  });
}

jstyle_status jstyle_config_digest(const jstyle_config* config, char** out) {
  return Guard([&] {
    Require(config, "config");
    Require(out, "out");
    *out = Dup(config->config.Digest());
  });
}

jstyle_status jstyle_analyze(const jstyle_config* config,
                             const char* repo_path, jstyle_report** out) {
  return Guard([&] {
    Require(config, "config");
    Require(repo_path, "repo_path");
    Require(out, "out");
    auto* r = new jstyle_report();
    try {
      r->report = jstyle::BuildReport(repo_path, config->config);
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

void jstyle_evolve_options_init(jstyle_evolve_options* options) {
  if (options == nullptr) return;
  options->months = 12;
  options->as_of = nullptr;
  options->min_age_months = 36;
  options->ignore_eligibility = 0;
}

jstyle_status jstyle_evolve(const jstyle_config* config,
                            const char* repo_path,
                            const jstyle_evolve_options* options,
                            jstyle_report** out) {
  return Guard([&] {
    Require(config, "config");
    Require(repo_path, "repo_path");
    Require(out, "out");
    jstyle_evolve_options defaults;
    jstyle_evolve_options_init(&defaults);
    const jstyle_evolve_options& o = options ? *options : defaults;
    if (o.months < 1 || o.months > 1200) {
      throw jstyle::UsageError("months must be in [1, 1200]");
    }
    if (o.min_age_months < 0) {
      throw jstyle::UsageError("min_age_months must be non-negative");
    }
    jstyle::EvolveOptions eo;
    eo.months = o.months;
    eo.minAgeMonths = o.min_age_months;
    eo.ignoreEligibility = o.ignore_eligibility != 0;
    if (o.as_of != nullptr && o.as_of[0] != '\0') {
      eo.asOf = jstyle::ParseYearMonth(o.as_of);
      if (!eo.asOf) {
        throw jstyle::UsageError(std::string("invalid date '") + o.as_of +
                                 "' (expected YYYY-MM or YYYY-MM-DD)");
      }
    }
    std::optional<jstyle::Lexicon> lexicon;
    if (!config->config.lexiconPath.empty()) {
      lexicon = jstyle::Lexicon::LoadFile(config->config.lexiconPath);
    }
    eo.analysis = jstyle::MakeAnalysisOptions(config->config,
                                              lexicon ? &*lexicon : nullptr);
    jstyle::EvolutionResult evolution = jstyle::Evolve(repo_path, eo);
    auto* r = new jstyle_report();
    try {
      r->report = jstyle::BuildReport(repo_path, config->config);
      r->report.evolution = std::move(evolution);
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

void jstyle_report_free(jstyle_report* report) { delete report; }

jstyle_status jstyle_report_render(const jstyle_report* report,
                                   const char* format, char** out) {
  return Guard([&] {
    Require(report, "report");
    Require(out, "out");
    *out = Dup(jstyle::RenderReport(report->report, Format(format)));
  });
}

size_t jstyle_report_violation_count(const jstyle_report* report) {
  return report == nullptr ? 0 : report->report.analysis.violations.size();
}

size_t jstyle_report_skipped_count(const jstyle_report* report) {
  return report == nullptr ? 0 : report->report.analysis.skipped.size();
}

int jstyle_report_exceeds_threshold(const jstyle_report* report) {
  if (report == nullptr) return 0;
  return jstyle::ExceedsThreshold(report->report.analysis,
                                  report->report.config.threshold)
             ? 1
             : 0;
}

jstyle_status jstyle_claims(const jstyle_config* config, const char* repo_path,
                            const char* format, char** out) {
  return Guard([&] {
    Require(config, "config");
    Require(repo_path, "repo_path");
    Require(out, "out");
    jstyle::ReportFormat f = Format(format);
    std::error_code ec;
    if (!std::filesystem::is_directory(repo_path, ec)) {
      throw jstyle::IoError(std::string(repo_path) + " is not a directory");
    }
    jstyle::ClaimResult claim = jstyle::ScanClaims(
        repo_path, jstyle::ClaimOptions{config->config.deepClaims});
    *out = Dup(jstyle::RenderClaims(claim, repo_path, f));
  });
}

jstyle_status jstyle_sample(const char* reports_dir, size_t groups,
                            uint64_t seed, const char* format, char** out) {
  return Guard([&] {
    Require(reports_dir, "reports_dir");
    Require(out, "out");
    jstyle::ReportFormat f = Format(format);
    std::vector<jstyle::RepoViolations> repos =
        jstyle::LoadReportViolations(reports_dir);
    jstyle::SampleResult sample = jstyle::StratifiedSample(repos, groups, seed);
    *out = Dup(jstyle::RenderSample(sample, groups, seed, f));
  });
}

jstyle_status jstyle_corpus(const jstyle_config* config,
                            const char* paths_file, const char* out_dir,
                            const char* format, char** out) {
  return Guard([&] {
    Require(config, "config");
    Require(paths_file, "paths_file");
    Require(out, "out");
    jstyle::ReportFormat f = Format(format);
    std::vector<std::string> paths = jstyle::ReadPathsFile(paths_file);
    if (paths.empty()) {
      throw jstyle::UsageError(std::string(paths_file) +
                               " lists no repositories");
    }
    jstyle::CorpusResult corpus = jstyle::RunCorpus(paths, config->config);
    if (out_dir != nullptr && out_dir[0] != '\0') {
      jstyle::WriteCorpusOutputs(corpus, out_dir);
    }
    *out = Dup(jstyle::RenderCorpus(corpus, f));
  });
}

}  // extern "C"
