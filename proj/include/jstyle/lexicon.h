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

// Identifier splitting, casing conventions and part-of-speech lookup.

#ifndef JSTYLE_LEXICON_H_
#define JSTYLE_LEXICON_H_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jstyle {

enum class WordCategory : std::uint8_t {
  kNoun = 1,
  kVerb = 2,
  kAdjective = 4,
  kAdverb = 8,
  kOther = 16,
};

// Bit set over WordCategory values.
class CategorySet {
 public:
  CategorySet() = default;
  explicit CategorySet(std::uint8_t bits) : bits_(bits) {}

  bool Has(WordCategory c) const {
    return (bits_ & static_cast<std::uint8_t>(c)) != 0;
  }
  void Add(WordCategory c) { bits_ |= static_cast<std::uint8_t>(c); }
  bool empty() const { return bits_ == 0; }
  std::uint8_t bits() const { return bits_; }
  // Letters in n,v,a,r,o order, comma separated.
  std::string ToString() const;

  bool operator==(const CategorySet&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

enum class Casing { kUpperCamel, kLowerCamel, kConstant };

struct IdentifierWords {
  std::string raw;
  std::vector<std::string> words;  // lowercase
  bool casingValid = false;        // against the convention passed in

  bool operator==(const IdentifierWords&) const = default;
};

class LexiconError : public std::runtime_error {
 public:
  LexiconError(const std::string& what, std::vector<int> bad_lines)
      : std::runtime_error(what), bad_lines_(std::move(bad_lines)) {}
  const std::vector<int>& bad_lines() const { return bad_lines_; }

 private:
  std::vector<int> bad_lines_;
};

class Lexicon {
 public:
  Lexicon() = default;

  // The WordNet-derived word list compiled into the library.
  static const Lexicon& BuiltIn();

  // `word<TAB>categories` per line, categories a comma-separated subset of
  // n,v,a,r,o. Blank lines and lines starting with '#' are ignored.
  // Throws LexiconError listing every malformed line.
  static Lexicon Parse(std::string_view text, std::string_view source_name);
  static Lexicon LoadFile(const std::filesystem::path& path);

  void Add(std::string_view word, CategorySet cats);

  // Exact, case-insensitive lookup. Unknown words give an empty set.
  CategorySet Lookup(std::string_view word) const;

  // Lookup that retries after stripping a plural -s/-es/-ies, -ing or -ed
  // suffix when the word itself is unknown.
  CategorySet LookupWithFallback(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, CategorySet> entries_;
};

IdentifierWords SplitIdentifier(std::string_view name,
                                Casing convention = Casing::kLowerCamel);

CategorySet ClassifyWord(std::string_view word, const Lexicon& lexicon);

bool MatchesCasing(std::string_view name, Casing convention);

}  // namespace jstyle

#endif  // JSTYLE_LEXICON_H_
