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

// Classifies how a repository's documentation talks about code style.

#ifndef JSTYLE_CLAIMS_H_
#define JSTYLE_CLAIMS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace jstyle {

enum class ClaimCategory { kNoMention, kMentionCodeStyle, kGoogleExplicit };

const char* ToString(ClaimCategory c);  // "NoMention", ...

struct ClaimEvidence {
  std::string file;  // repo-relative
  int line = 0;      // 0 for whole-file evidence such as a config file
  std::string text;  // the matched text

  bool operator==(const ClaimEvidence&) const = default;
};

struct ClaimResult {
  ClaimCategory category = ClaimCategory::kNoMention;
  // Evidence for the winning category only, sorted by (file, line, text).
  std::vector<ClaimEvidence> evidence;
};

struct ClaimOptions {
  bool deep = false;  // also scan docs/**/*.md
};

// Pattern lists, ECMAScript syntax, matched case-insensitively.
const std::vector<std::string>& GoogleClaimPatterns();
const std::vector<std::string>& GeneralClaimPatterns();

// Matches of the pattern set in `text`, one entry per (line, match).
std::vector<ClaimEvidence> FindClaimMatches(
    std::string_view text, std::string_view file,
    const std::vector<std::string>& patterns);

ClaimResult ScanClaims(const std::filesystem::path& root,
                       const ClaimOptions& options = {});

}  // namespace jstyle

#endif  // JSTYLE_CLAIMS_H_
