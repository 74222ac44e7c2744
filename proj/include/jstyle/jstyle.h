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

/* C interface to the jstyle library. All strings are UTF-8 and
 * NUL-terminated. Functions returning jstyle_status set a thread-local
 * message readable through jstyle_last_error() on failure. Strings handed
 * out through char** parameters must be released with jstyle_string_free().
 */

#ifndef JSTYLE_JSTYLE_H_
#define JSTYLE_JSTYLE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define JSTYLE_API __declspec(dllexport)
#else
#define JSTYLE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jstyle_status {
  JSTYLE_OK = 0,
  JSTYLE_ERR_INVALID_ARGUMENT = 1, /* bad flag value, unknown format */
  JSTYLE_ERR_IO = 2,               /* unreadable path or output */
  JSTYLE_ERR_PARSE = 3,            /* malformed config, lexicon or report */
  JSTYLE_ERR_GIT = 4,              /* git failed or the tree is dirty */
  JSTYLE_ERR_INTERNAL = 5
} jstyle_status;

typedef struct jstyle_config jstyle_config;
typedef struct jstyle_report jstyle_report;

typedef struct jstyle_evolve_options {
  int months;             /* window length, default 12 */
  const char* as_of;      /* last window month, YYYY-MM[-DD]; NULL: last
                             complete month */
  int min_age_months;     /* default 36 */
  int ignore_eligibility; /* nonzero: replay even ineligible histories */
} jstyle_evolve_options;

JSTYLE_API const char* jstyle_version(void);
/* Message for the last failure on this thread; "" when none. */
JSTYLE_API const char* jstyle_last_error(void);
JSTYLE_API void jstyle_string_free(char* s);

JSTYLE_API jstyle_status jstyle_config_new(jstyle_config** out);
JSTYLE_API void jstyle_config_free(jstyle_config* config);
JSTYLE_API jstyle_status jstyle_config_load_file(jstyle_config* config,
                                                 const char* path);
JSTYLE_API jstyle_status jstyle_config_set_threshold(jstyle_config* config,
                                                     double threshold);
/* 1..4 selects a built-in ordering; 0 disables ordering checks. */
JSTYLE_API jstyle_status jstyle_config_set_ordering(jstyle_config* config,
                                                    int ordering);
/* NULL or "" restores the built-in lexicon. */
JSTYLE_API jstyle_status jstyle_config_set_lexicon(jstyle_config* config,
                                                   const char* path);
JSTYLE_API jstyle_status jstyle_config_set_deep_claims(jstyle_config* config,
                                                       int enabled);
JSTYLE_API jstyle_status jstyle_config_set_jobs(jstyle_config* config,
                                                int jobs);
JSTYLE_API jstyle_status jstyle_config_digest(const jstyle_config* config,
                                              char** out);

JSTYLE_API jstyle_status jstyle_analyze(const jstyle_config* config,
                                        const char* repo_path,
                                        jstyle_report** out);
JSTYLE_API void jstyle_evolve_options_init(jstyle_evolve_options* options);
/* Produces a report of the current tree with the monthly series attached. */
JSTYLE_API jstyle_status jstyle_evolve(const jstyle_config* config,
                                       const char* repo_path,
                                       const jstyle_evolve_options* options,
                                       jstyle_report** out);
JSTYLE_API void jstyle_report_free(jstyle_report* report);
/* format: "json", "markdown" or "csv". */
JSTYLE_API jstyle_status jstyle_report_render(const jstyle_report* report,
                                              const char* format, char** out);
JSTYLE_API size_t jstyle_report_violation_count(const jstyle_report* report);
JSTYLE_API size_t jstyle_report_skipped_count(const jstyle_report* report);
/* 1 when a scored category reaches the configured threshold, else 0. */
JSTYLE_API int jstyle_report_exceeds_threshold(const jstyle_report* report);

JSTYLE_API jstyle_status jstyle_claims(const jstyle_config* config,
                                       const char* repo_path,
                                       const char* format, char** out);
/* Reads JSON reports from reports_dir and draws the stratified sample. */
JSTYLE_API jstyle_status jstyle_sample(const char* reports_dir, size_t groups,
                                       uint64_t seed, const char* format,
                                       char** out);
/* paths_file lists one repository per line; out_dir may be NULL. */
JSTYLE_API jstyle_status jstyle_corpus(const jstyle_config* config,
                                       const char* paths_file,
                                       const char* out_dir, const char* format,
                                       char** out);

#ifdef __cplusplus
}
#endif

#endif /* JSTYLE_JSTYLE_H_ */
