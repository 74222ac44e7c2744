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

// jstyle command-line tool. Talks to the library only through jstyle.h.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "jstyle/jstyle.h"

namespace {

enum ExitCode {
  kExitOk = 0,
  kExitOverThreshold = 1,
  kExitUsage = 2,
  kExitFatal = 3,
};

int ExitFor(jstyle_status status) {
  return status == JSTYLE_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFatal;
}

int Report(jstyle_status status, const char* context) {
  std::cerr << "jstyle: " << context << ": " << jstyle_last_error() << "\n";
  return ExitFor(status);
}

// Owns a config handle for the duration of one command.
class ConfigHandle {
 public:
  ConfigHandle() {
    if (jstyle_config_new(&config_) != JSTYLE_OK) config_ = nullptr;
  }
  ~ConfigHandle() { jstyle_config_free(config_); }
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;
  jstyle_config* get() const { return config_; }

 private:
  jstyle_config* config_ = nullptr;
};

struct CommonFlags {
  std::string configFile;
  std::optional<double> threshold;
  std::optional<int> ordering;
  std::optional<std::string> lexicon;
  bool deepClaims = false;
  std::optional<int> jobs;
  std::string format = "json";
};

// Builds the effective configuration: defaults, then $JSTYLE_CONFIG, then
// --config, then individual flags.
int ApplyConfig(const CommonFlags& flags, jstyle_config* config) {
  jstyle_status s = JSTYLE_OK;
  if (const char* env = std::getenv("JSTYLE_CONFIG"); env && *env) {
    if ((s = jstyle_config_load_file(config, env)) != JSTYLE_OK) {
      return Report(s, "JSTYLE_CONFIG");
    }
  }
  if (!flags.configFile.empty() &&
      (s = jstyle_config_load_file(config, flags.configFile.c_str())) !=
          JSTYLE_OK) {
    return Report(s, "--config");
  }
  if (flags.threshold &&
      (s = jstyle_config_set_threshold(config, *flags.threshold)) !=
          JSTYLE_OK) {
    return Report(s, "--threshold");
  }
  if (flags.ordering &&
      (s = jstyle_config_set_ordering(config, *flags.ordering)) != JSTYLE_OK) {
    return Report(s, "--ordering");
  }
  if (flags.lexicon &&
      (s = jstyle_config_set_lexicon(config, flags.lexicon->c_str())) !=
          JSTYLE_OK) {
    return Report(s, "--lexicon");
  }
  if (flags.deepClaims) jstyle_config_set_deep_claims(config, 1);
  if (flags.jobs &&
      (s = jstyle_config_set_jobs(config, *flags.jobs)) != JSTYLE_OK) {
    return Report(s, "--jobs");
  }
  return kExitOk;
}

int Emit(char* text) {
  std::fputs(text, stdout);
  jstyle_string_free(text);
  return std::fflush(stdout) == 0 ? kExitOk : kExitFatal;
}

void AddFormat(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--format", flags->format,
                  "Output format: json, markdown or csv")
      ->capture_default_str();
}

void AddConfigFlags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--config", flags->configFile, "Configuration file");
  cmd->add_option("--threshold", flags->threshold,
                  "Adherence threshold in [0, 1] (default 0.05)");
  cmd->add_option("--ordering", flags->ordering,
                  "Member ordering convention 1-4 (0 disables)");
  cmd->add_option("--lexicon", flags->lexicon,
                  "Word category file replacing the built-in lexicon");
  cmd->add_flag("--deep-claims", flags->deepClaims,
                "Also scan docs/**/*.md for style claims");
  cmd->add_option("--jobs", flags->jobs, "Worker threads");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Java code-style adherence auditor", "jstyle"};
  app.set_version_flag("--version",
                       std::string("jstyle ") + jstyle_version());
  app.require_subcommand(1);

  CommonFlags flags;
  std::string path;
  bool fail_over = false;
  int months = 12;
  std::string as_of;
  int min_age = 36;
  bool ignore_eligibility = false;
  std::size_t groups = 31;
  std::uint64_t seed = 0;
  std::string out_dir;

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze one repository");
  analyze->add_option("path", path, "Repository root")->required();
  AddFormat(analyze, &flags);
  AddConfigFlags(analyze, &flags);
  analyze->add_flag("--fail-over", fail_over,
                    "Exit 1 when any category reaches the threshold");

  CLI::App* evolve =
      app.add_subcommand("evolve", "Replay monthly commits of a git repository");
  evolve->add_option("path", path, "Git work tree")->required();
  AddFormat(evolve, &flags);
  AddConfigFlags(evolve, &flags);
  evolve->add_option("--months", months, "Window length in months")
      ->capture_default_str();
  evolve->add_option("--as-of", as_of,
                     "Last month of the window, YYYY-MM or YYYY-MM-DD "
                     "(default: previous month)");
  evolve->add_option("--min-age", min_age, "Minimum history age in months")
      ->capture_default_str();
  evolve->add_flag("--ignore-eligibility", ignore_eligibility,
                   "Replay even when the age or activity filters fail");

  CLI::App* claims =
      app.add_subcommand("claims", "Classify documented style claims");
  claims->add_option("path", path, "Repository root")->required();
  AddFormat(claims, &flags);
  AddConfigFlags(claims, &flags);

  CLI::App* sample = app.add_subcommand(
      "sample", "Draw a stratified violation sample from saved JSON reports");
  sample->add_option("scores-dir", path, "Directory of JSON reports")
      ->required();
  AddFormat(sample, &flags);
  sample->add_option("--groups", groups, "Number of repository groups")
      ->capture_default_str();
  sample->add_option("--seed", seed, "Random seed")->capture_default_str();

  CLI::App* corpus = app.add_subcommand(
      "corpus", "Analyze many repositories and aggregate the scores");
  corpus->add_option("paths-file", path, "File listing repository roots")
      ->required();
  AddFormat(corpus, &flags);
  AddConfigFlags(corpus, &flags);
  corpus->add_option("--out-dir", out_dir,
                     "Write per-repository reports and CSV tables here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (flags.format != "json" && flags.format != "markdown" &&
      flags.format != "md" && flags.format != "csv") {
    std::cerr << "jstyle: unknown format '" << flags.format
              << "' (expected json, markdown or csv)\n";
    return kExitUsage;
  }

  ConfigHandle config;
  if (config.get() == nullptr) return Report(JSTYLE_ERR_INTERNAL, "config");
  if (*sample) {
    char* out = nullptr;
    jstyle_status s =
        jstyle_sample(path.c_str(), groups, seed, flags.format.c_str(), &out);
    return s == JSTYLE_OK ? Emit(out) : Report(s, "sample");
  }
  if (int rc = ApplyConfig(flags, config.get()); rc != kExitOk) return rc;

  if (*analyze || *evolve) {
    jstyle_report* report = nullptr;
    jstyle_status s;
    if (*analyze) {
      s = jstyle_analyze(config.get(), path.c_str(), &report);
    } else {
      jstyle_evolve_options options;
      jstyle_evolve_options_init(&options);
      options.months = months;
      options.as_of = as_of.empty() ? nullptr : as_of.c_str();
      options.min_age_months = min_age;
      options.ignore_eligibility = ignore_eligibility ? 1 : 0;
      s = jstyle_evolve(config.get(), path.c_str(), &options, &report);
    }
    if (s != JSTYLE_OK) return Report(s, *analyze ? "analyze" : "evolve");
    char* out = nullptr;
    s = jstyle_report_render(report, flags.format.c_str(), &out);
    bool over = jstyle_report_exceeds_threshold(report) != 0;
    jstyle_report_free(report);
    if (s != JSTYLE_OK) return Report(s, "render");
    int rc = Emit(out);
    if (rc != kExitOk) return rc;
    return fail_over && over ? kExitOverThreshold : kExitOk;
  }
  if (*claims) {
    char* out = nullptr;
    jstyle_status s =
        jstyle_claims(config.get(), path.c_str(), flags.format.c_str(), &out);
    return s == JSTYLE_OK ? Emit(out) : Report(s, "claims");
  }
  char* out = nullptr;
  jstyle_status s = jstyle_corpus(
      config.get(), path.c_str(), out_dir.empty() ? nullptr : out_dir.c_str(),
      flags.format.c_str(), &out);
  return s == JSTYLE_OK ? Emit(out) : Report(s, "corpus");
}
