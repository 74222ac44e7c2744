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

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "jstyle/source_model.h"

namespace jstyle {
namespace {

std::string StripDelimiters(std::string_view raw) {
  if (raw.starts_with("/**")) {
    raw.remove_prefix(3);
  } else if (raw.starts_with("/*")) {
    raw.remove_prefix(2);
  }
  if (raw.ends_with("*/")) raw.remove_suffix(2);
  return std::string(raw);
}

// Drops the `{@tag` opener of inline tags and the matching brace so that
// only the payload words remain.
std::string UnwrapInlineTags(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  std::vector<bool> brace_is_inline;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '{' && i + 1 < text.size() && text[i + 1] == '@') {
      std::size_t j = i + 2;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      brace_is_inline.push_back(true);
      out.push_back(' ');
      i = j - 1;
    } else if (c == '{') {
      brace_is_inline.push_back(false);
      out.push_back(c);
    } else if (c == '}' && !brace_is_inline.empty()) {
      bool inline_tag = brace_is_inline.back();
      brace_is_inline.pop_back();
      out.push_back(inline_tag ? ' ' : c);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> CommentLines(std::string_view raw) {
  std::vector<std::string> lines;
  std::string body = StripDelimiters(raw);
  std::string current;
  auto flush = [&] {
    std::size_t k = 0;
    while (k < current.size() &&
           (current[k] == ' ' || current[k] == '\t' || current[k] == '\r')) {
      ++k;
    }
    while (k < current.size() && current[k] == '*') ++k;
    lines.push_back(current.substr(k));
    current.clear();
  };
  for (char c : body) {
    if (c == '\n') {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return lines;
}

std::vector<std::string> Words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream in(line);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

bool IsBlockTag(const std::string& word) {
  if (word.size() < 2 || word[0] != '@') return false;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (!std::isalpha(static_cast<unsigned char>(word[i]))) return false;
  }
  return true;
}

bool TakesArgument(std::string_view tag) {
  return tag == "param" || tag == "throws" || tag == "exception";
}

}  // namespace

JavadocFact ExtractJavadoc(std::string_view raw_comment, int line) {
  JavadocFact fact;
  fact.line = line;
  fact.inheritsDoc = raw_comment.find("{@inheritDoc}") != std::string_view::npos;

  bool need_arg = false;
  for (const std::string& raw_line : CommentLines(raw_comment)) {
    std::vector<std::string> words = Words(UnwrapInlineTags(raw_line));
    std::size_t i = 0;
    if (!words.empty() && IsBlockTag(words[0])) {
      JavadocTag tag;
      tag.name = words[0].substr(1);
      need_arg = TakesArgument(tag.name);
      fact.tags.push_back(std::move(tag));
      i = 1;
    }
    for (; i < words.size(); ++i) {
      if (need_arg) {
        fact.tags.back().argName = words[i];
        need_arg = false;
        continue;
      }
      ++fact.wordCount;
      if (!fact.tags.empty()) ++fact.tags.back().descriptionWordCount;
    }
  }
  return fact;
}

}  // namespace jstyle
