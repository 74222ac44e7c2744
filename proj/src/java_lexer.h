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

#ifndef JSTYLE_SRC_JAVA_LEXER_H_
#define JSTYLE_SRC_JAVA_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "jstyle/source_model.h"

namespace jstyle::internal {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kNumber,
  kChar,
  kString,
  kTextBlock,
  kOperator,
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string_view text;
  int line = 0;
  int column = 0;
  int endLine = 0;
  // Index into LexedFile::comments of a Javadoc comment that directly
  // precedes this token, or -1.
  int doc = -1;
  // True when the next character in the source is not whitespace.
  bool adjacentNext = false;

  bool Is(std::string_view s) const {
    return (kind == TokenKind::kOperator || kind == TokenKind::kKeyword ||
            kind == TokenKind::kIdentifier) &&
           text == s;
  }
  bool IsIdent() const { return kind == TokenKind::kIdentifier; }
};

struct LexedFile {
  std::vector<Token> tokens;  // always terminated by a kEnd token
  std::vector<CommentFact> comments;
  // For each comment, the index of the first token after it.
  std::vector<std::size_t> commentNextToken;
  int totalLines = 0;
  int nonBlankLines = 0;
};

bool IsJavaKeyword(std::string_view word);
bool IsPrimitiveType(std::string_view word);

// Throws ParseError for unterminated comments, strings or stray characters.
LexedFile LexJava(std::string_view source, std::string_view path);

}  // namespace jstyle::internal

#endif  // JSTYLE_SRC_JAVA_LEXER_H_
