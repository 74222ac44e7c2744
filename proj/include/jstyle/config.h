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

// Run configuration and its key=value text format.

#ifndef JSTYLE_CONFIG_H_
#define JSTYLE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jstyle {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

struct Config {
  double threshold = 0.05;
  std::optional<int> ordering;
  std::string lexiconPath;  // empty: built-in lexicon
  std::vector<std::string> excludes = {"target", "build", ".git"};
  bool deepClaims = false;
  int jobs = 1;

  // Applies `text` on top of the current values. Keys: threshold, ordering,
  // lexicon, exclude (comma list; replaces the default list on first use),
  // deep_claims, jobs. Lines starting with '#' are comments.
  void Parse(std::string_view text, const std::string& source = "<config>");
  void LoadFile(const std::filesystem::path& path);

  // Canonical one-key-per-line rendering; the digest hashes this text.
  std::string Canonical() const;
  std::string Digest() const;  // 16 lowercase hex digits, FNV-1a 64
};

std::uint64_t Fnv1a64(std::string_view data);

// Validation shared with the command line.
bool ValidThreshold(double t);
bool ValidOrdering(int id);

inline constexpr const char* kConfigEnvVar = "JSTYLE_CONFIG";

}  // namespace jstyle

#endif  // JSTYLE_CONFIG_H_
