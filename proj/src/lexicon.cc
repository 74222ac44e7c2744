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

#include "jstyle/lexicon.h"

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jstyle {
namespace internal {
extern const char kBuiltinLexicon[];
extern const std::size_t kBuiltinLexicon_size;
}  // namespace internal

namespace {

bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsLower(char c) { return c >= 'a' && c <= 'z'; }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (IsUpper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool ParseCategories(std::string_view field, CategorySet* out) {
  CategorySet set;
  while (!field.empty()) {
    std::size_t comma = field.find(',');
    std::string_view item = Trim(field.substr(0, comma));
    if (item == "n") {
      set.Add(WordCategory::kNoun);
    } else if (item == "v") {
      set.Add(WordCategory::kVerb);
    } else if (item == "a") {
      set.Add(WordCategory::kAdjective);
    } else if (item == "r") {
      set.Add(WordCategory::kAdverb);
    } else if (item == "o") {
      set.Add(WordCategory::kOther);
    } else {
      return false;
    }
    if (comma == std::string_view::npos) break;
    field.remove_prefix(comma + 1);
  }
  if (set.empty()) return false;
  *out = set;
  return true;
}

// Candidate stems for an unknown word, most specific first.
std::vector<std::string> SuffixStems(const std::string& w) {
  std::vector<std::string> stems;
  auto ends = [&](std::string_view suf) {
    return w.size() > suf.size() + 1 && w.ends_with(suf);
  };
  auto cut = [&](std::size_t n) { return w.substr(0, w.size() - n); };
  auto undouble = [](const std::string& s) {
    std::size_t n = s.size();
    if (n >= 3 && s[n - 1] == s[n - 2] && !IsDigit(s[n - 1])) {
      return s.substr(0, n - 1);
    }
    return std::string();
  };
  if (ends("ies")) stems.push_back(cut(3) + "y");
  if (ends("es")) stems.push_back(cut(2));
  if (ends("s") && !ends("ss")) stems.push_back(cut(1));
  if (ends("ing")) {
    std::string base = cut(3);
    stems.push_back(base);
    stems.push_back(base + "e");
    if (std::string u = undouble(base); !u.empty()) stems.push_back(u);
  }
  if (ends("ied")) stems.push_back(cut(3) + "y");
  if (ends("ed")) {
    std::string base = cut(2);
    stems.push_back(base);
    stems.push_back(base + "e");
    if (std::string u = undouble(base); !u.empty()) stems.push_back(u);
  }
  return stems;
}

}  // namespace

std::string CategorySet::ToString() const {
  std::string out;
  auto add = [&](WordCategory c, char letter) {
    if (!Has(c)) return;
    if (!out.empty()) out += ',';
    out += letter;
  };
  add(WordCategory::kNoun, 'n');
  add(WordCategory::kVerb, 'v');
  add(WordCategory::kAdjective, 'a');
  add(WordCategory::kAdverb, 'r');
  add(WordCategory::kOther, 'o');
  return out;
}

const Lexicon& Lexicon::BuiltIn() {
  static const Lexicon* lexicon = new Lexicon(
      Parse(std::string_view(internal::kBuiltinLexicon,
                             internal::kBuiltinLexicon_size),
            "<built-in>"));
  return *lexicon;
}

Lexicon Lexicon::Parse(std::string_view text, std::string_view source_name) {
  Lexicon lex;
  std::vector<int> bad;
  int line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::size_t tab = trimmed.find('\t');
    CategorySet cats;
    std::string_view word =
        tab == std::string_view::npos ? trimmed : Trim(trimmed.substr(0, tab));
    bool ok = tab != std::string_view::npos && !word.empty() &&
              word.find(' ') == std::string_view::npos &&
              ParseCategories(trimmed.substr(tab + 1), &cats);
    if (!ok) {
      bad.push_back(line_no);
      continue;
    }
    lex.Add(word, cats);
  }
  if (!bad.empty()) {
    std::string msg = std::string(source_name) + ": malformed lexicon line";
    msg += bad.size() == 1 ? " " : "s ";
    for (std::size_t i = 0; i < bad.size(); ++i) {
      if (i > 0) msg += ", ";
      if (i == 20) {
        msg += "... (" + std::to_string(bad.size()) + " total)";
        break;
      }
      msg += std::to_string(bad[i]);
    }
    throw LexiconError(msg, std::move(bad));
  }
  return lex;
}

Lexicon Lexicon::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LexiconError("cannot read lexicon file: " + path.string(), {});
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str(), path.string());
}

void Lexicon::Add(std::string_view word, CategorySet cats) {
  CategorySet& slot = entries_[Lower(word)];
  slot = CategorySet(slot.bits() | cats.bits());
}

CategorySet Lexicon::Lookup(std::string_view word) const {
  auto it = entries_.find(Lower(word));
  return it == entries_.end() ? CategorySet() : it->second;
}

CategorySet Lexicon::LookupWithFallback(std::string_view word) const {
  std::string w = Lower(word);
  CategorySet exact = Lookup(w);
  if (!exact.empty()) return exact;
  for (const std::string& stem : SuffixStems(w)) {
    CategorySet c = Lookup(stem);
    if (!c.empty()) return c;
  }
  return {};
}

IdentifierWords SplitIdentifier(std::string_view name, Casing convention) {
  IdentifierWords out;
  out.raw = std::string(name);
  out.casingValid = MatchesCasing(name, convention);
  const std::size_t n = name.size();
  std::size_t i = 0;
  while (i < n) {
    char c = name[i];
    std::size_t start = i;
    if (IsDigit(c)) {
      while (i < n && IsDigit(name[i])) ++i;
    } else if (IsLower(c)) {
      while (i < n && IsLower(name[i])) ++i;
    } else if (IsUpper(c)) {
      std::size_t run_end = i;
      while (run_end < n && IsUpper(name[run_end])) ++run_end;
      bool lower_follows = run_end < n && IsLower(name[run_end]);
      if (!lower_follows) {
        i = run_end;
      } else if (run_end - i >= 2) {
        i = run_end - 1;  // the last capital starts the next word
      } else {
        i = run_end;
        while (i < n && IsLower(name[i])) ++i;
      }
    } else {
      ++i;  // separator
      continue;
    }
    out.words.push_back(Lower(name.substr(start, i - start)));
  }
  if (out.words.empty() && !name.empty()) out.words.push_back(Lower(name));
  return out;
}

CategorySet ClassifyWord(std::string_view word, const Lexicon& lexicon) {
  return lexicon.Lookup(word);
}

bool MatchesCasing(std::string_view name, Casing convention) {
  if (name.empty()) return false;
  auto alnum = [](char c) { return IsUpper(c) || IsLower(c) || IsDigit(c); };
  switch (convention) {
    case Casing::kUpperCamel:
    case Casing::kLowerCamel: {
      bool first_ok = convention == Casing::kUpperCamel ? IsUpper(name[0])
                                                        : IsLower(name[0]);
      if (!first_ok) return false;
      for (char c : name.substr(1)) {
        if (!alnum(c)) return false;
      }
      return true;
    }
    case Casing::kConstant: {
      if (!IsUpper(name[0])) return false;
      bool after_underscore = false;
      for (char c : name.substr(1)) {
        if (c == '_') {
          if (after_underscore) return false;
          after_underscore = true;
        } else if (IsUpper(c) || IsDigit(c)) {
          after_underscore = false;
        } else {
          return false;
        }
      }
      return !after_underscore;
    }
  }
  return false;
}

}  // namespace jstyle
