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

#include "jstyle/claims.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>
#include <tuple>

namespace jstyle {
namespace {

namespace fs = std::filesystem;

std::string Lower(std::string s) {
  for (char& c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

bool ReadAll(const fs::path& p, std::string* out) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return true;
}

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool IsStyleConfigName(const std::string& name) {
  std::string lower = Lower(name);
  if (!EndsWith(lower, ".xml")) return false;
  return lower.rfind("checkstyle", 0) == 0 || lower.rfind("pmd", 0) == 0 ||
         lower.rfind("ruleset", 0) == 0;
}

const std::vector<std::regex>& Compiled(
    const std::vector<std::string>& patterns) {
  static const std::vector<std::regex> google = [] {
    std::vector<std::regex> out;
    for (const std::string& p : GoogleClaimPatterns()) {
      out.emplace_back(p, std::regex::ECMAScript | std::regex::icase);
    }
    return out;
  }();
  static const std::vector<std::regex> general = [] {
    std::vector<std::regex> out;
    for (const std::string& p : GeneralClaimPatterns()) {
      out.emplace_back(p, std::regex::ECMAScript | std::regex::icase);
    }
    return out;
  }();
  return &patterns == &GoogleClaimPatterns() ? google : general;
}

void SortEvidence(std::vector<ClaimEvidence>* ev) {
  std::sort(ev->begin(), ev->end(),
            [](const ClaimEvidence& a, const ClaimEvidence& b) {
              return std::tie(a.file, a.line, a.text) <
                     std::tie(b.file, b.line, b.text);
            });
  ev->erase(std::unique(ev->begin(), ev->end()), ev->end());
}

}  // namespace

const char* ToString(ClaimCategory c) {
  switch (c) {
    case ClaimCategory::kNoMention:
      return "NoMention";
    case ClaimCategory::kMentionCodeStyle:
      return "MentionCodeStyle";
    case ClaimCategory::kGoogleExplicit:
      return "GoogleExplicit";
  }
  return "NoMention";
}

const std::vector<std::string>& GoogleClaimPatterns() {
  static const std::vector<std::string> kPatterns = {
      R"(google[\s_-]+java[\s_-]+style)",
      R"(google\.github\.io/styleguide/javaguide)",
  };
  return kPatterns;
}

const std::vector<std::string>& GeneralClaimPatterns() {
  static const std::vector<std::string> kPatterns = {
      R"(code[\s-]style)",
      R"(coding[\s-]standards?)",
      R"(style[\s-]guide)",
  };
  return kPatterns;
}

std::vector<ClaimEvidence> FindClaimMatches(
    std::string_view text, std::string_view file,
    const std::vector<std::string>& patterns) {
  std::vector<std::regex> local;
  const std::vector<std::regex>* regexes;
  if (&patterns == &GoogleClaimPatterns() ||
      &patterns == &GeneralClaimPatterns()) {
    regexes = &Compiled(patterns);
  } else {
    for (const std::string& p : patterns) {
      local.emplace_back(p, std::regex::ECMAScript | std::regex::icase);
    }
    regexes = &local;
  }
  std::vector<ClaimEvidence> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (const std::regex& re : *regexes) {
      for (auto it = std::sregex_iterator(line.begin(), line.end(), re);
           it != std::sregex_iterator(); ++it) {
        out.push_back({std::string(file), line_no, it->str()});
      }
    }
  }
  return out;
}

ClaimResult ScanClaims(const fs::path& root, const ClaimOptions& options) {
  std::vector<std::pair<fs::path, std::string>> markdown;  // (path, relative)
  std::vector<std::pair<fs::path, std::string>> configs;
  std::error_code ec;
  for (fs::directory_iterator it(root, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (!it->is_regular_file(ec)) continue;
    std::string name = it->path().filename().string();
    if (EndsWith(Lower(name), ".md")) {
      markdown.emplace_back(it->path(), name);
    } else if (IsStyleConfigName(name)) {
      configs.emplace_back(it->path(), name);
    }
  }
  if (options.deep && fs::is_directory(root / "docs", ec)) {
    for (fs::recursive_directory_iterator it(root / "docs", ec), end;
         !ec && it != end; it.increment(ec)) {
      if (it->is_regular_file(ec) &&
          EndsWith(Lower(it->path().filename().string()), ".md")) {
        markdown.emplace_back(
            it->path(), fs::relative(it->path(), root, ec).generic_string());
      }
    }
  }

  std::vector<ClaimEvidence> google;
  std::vector<ClaimEvidence> general;
  for (const auto& [path, rel] : markdown) {
    std::string text;
    if (!ReadAll(path, &text)) continue;
    for (ClaimEvidence& e :
         FindClaimMatches(text, rel, GoogleClaimPatterns())) {
      google.push_back(std::move(e));
    }
    for (ClaimEvidence& e :
         FindClaimMatches(text, rel, GeneralClaimPatterns())) {
      general.push_back(std::move(e));
    }
  }
  for (const auto& [path, rel] : configs) {
    std::string text;
    if (!ReadAll(path, &text)) continue;
    if (Lower(text).find("google") != std::string::npos) {
      google.push_back({rel, 0, "google"});
    } else {
      general.push_back({rel, 0, rel});
    }
  }

  ClaimResult result;
  if (!google.empty()) {
    result.category = ClaimCategory::kGoogleExplicit;
    result.evidence = std::move(google);
  } else if (!general.empty()) {
    result.category = ClaimCategory::kMentionCodeStyle;
    result.evidence = std::move(general);
  }
  SortEvidence(&result.evidence);
  return result;
}

}  // namespace jstyle
