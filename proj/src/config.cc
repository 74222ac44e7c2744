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

#include "jstyle/config.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "jstyle/source_model.h"
#include "text_util.h"

namespace jstyle {
namespace {

std::string Strip(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool ParseInt(const std::string& s, int* out) {
  if (s.empty()) return false;
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (*end != '\0' || v < -1000000 || v > 1000000) return false;
  *out = static_cast<int>(v);
  return true;
}

bool ParseDouble(const std::string& s, double* out) {
  if (s.empty()) return false;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (*end != '\0' || !std::isfinite(v)) return false;
  *out = v;
  return true;
}

bool ParseBool(const std::string& s, bool* out) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") {
    *out = true;
  } else if (s == "false" || s == "0" || s == "no" || s == "off") {
    *out = false;
  } else {
    return false;
  }
  return true;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line,
                         const std::string& what)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : "") +
                         ": " + what),
      line_(line) {}

bool ValidThreshold(double t) { return std::isfinite(t) && t >= 0 && t <= 1; }

bool ValidOrdering(int id) { return id >= 1 && id <= 4; }

void Config::Parse(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool excludes_replaced = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = Strip(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source, line_no, "expected key = value");
    }
    std::string key = Strip(line.substr(0, eq));
    std::string value = Strip(line.substr(eq + 1));
    if (key == "threshold") {
      double t = 0;
      if (!ParseDouble(value, &t) || !ValidThreshold(t)) {
        throw ConfigError(source, line_no, "threshold must be in [0, 1]");
      }
      threshold = t;
    } else if (key == "ordering") {
      int id = 0;
      if (value == "none" || value.empty()) {
        ordering.reset();
      } else if (ParseInt(value, &id) && ValidOrdering(id)) {
        ordering = id;
      } else {
        throw ConfigError(source, line_no, "ordering must be 1, 2, 3, 4 or none");
      }
    } else if (key == "lexicon") {
      lexiconPath = value;
    } else if (key == "exclude") {
      if (!excludes_replaced) {
        excludes.clear();
        excludes_replaced = true;
      }
      std::stringstream parts(value);
      std::string part;
      while (std::getline(parts, part, ',')) {
        part = Strip(part);
        if (!part.empty()) excludes.push_back(part);
      }
    } else if (key == "deep_claims") {
      if (!ParseBool(value, &deepClaims)) {
        throw ConfigError(source, line_no, "deep_claims must be true or false");
      }
    } else if (key == "jobs") {
      int j = 0;
      if (!ParseInt(value, &j) || j < 1 || j > 256) {
        throw ConfigError(source, line_no, "jobs must be in [1, 256]");
      }
      jobs = j;
    } else {
      throw ConfigError(source, line_no, "unknown key '" + key + "'");
    }
  }
}

void Config::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  Parse(ss.str(), path.string());
}

std::string Config::Canonical() const {
  std::string out;
  out += "threshold=" + internal::FormatFixed(threshold) + "\n";
  out += "ordering=" + (ordering ? std::to_string(*ordering) : "none") + "\n";
  out += "lexicon=" + lexiconPath + "\n";
  std::string ex;
  for (const std::string& e : excludes) ex += (ex.empty() ? "" : ",") + e;
  out += "exclude=" + ex + "\n";
  out += std::string("deep_claims=") + (deepClaims ? "true" : "false") + "\n";
  return out;
}

std::string Config::Digest() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(Canonical())));
  return buf;
}

std::uint64_t Fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace jstyle
