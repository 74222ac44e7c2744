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

#include "java_lexer.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace jstyle::internal {
namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract",  "assert",     "boolean",   "break",      "byte",
    "case",      "catch",      "char",      "class",      "const",
    "continue",  "default",    "do",        "double",     "else",
    "enum",      "extends",    "final",     "finally",    "float",
    "for",       "goto",       "if",        "implements", "import",
    "instanceof", "int",       "interface", "long",       "native",
    "new",       "package",    "private",   "protected",  "public",
    "return",    "short",      "static",    "strictfp",   "super",
    "switch",    "synchronized", "this",    "throw",      "throws",
    "transient", "try",        "void",      "volatile",   "while",
    "true",      "false",      "null",
};

// Longest first. '>' is always emitted alone so that nested generic closers
// lex uniformly; the parser re-joins shift and comparison operators.
constexpr std::array<std::string_view, 21> kMultiCharOps = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "<<", "@",
};

bool IsIdentStart(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}
bool IsIdentPart(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}

class Lexer {
 public:
  Lexer(std::string_view src, std::string_view path) : src_(src), path_(path) {}

  LexedFile Run() {
    while (true) {
      SkipWhitespace();
      if (pos_ >= src_.size()) break;
      char c = src_[pos_];
      if (c == '/' && Peek(1) == '/') {
        LineComment();
      } else if (c == '/' && Peek(1) == '*') {
        BlockComment();
      } else {
        LexToken();
      }
    }
    Token end;
    end.kind = TokenKind::kEnd;
    end.line = line_;
    end.column = column();
    end.endLine = line_;
    out_.tokens.push_back(end);
    Finish();
    return std::move(out_);
  }

 private:
  char Peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  int column() const { return static_cast<int>(pos_ - line_start_) + 1; }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(std::string(path_), line_, column(), what);
  }

  // Advances over one character, tracking line breaks (\n, \r\n, \r).
  void Advance() {
    char c = src_[pos_++];
    if (c == '\n' || (c == '\r' && Peek(0) != '\n')) {
      ++line_;
      line_start_ = pos_;
    }
  }

  void SkipWhitespace() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
        Advance();
      } else {
        break;
      }
    }
  }

  void LineComment() {
    int start_line = line_;
    std::size_t begin = pos_;
    while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r') {
      ++pos_;
    }
    AddComment(begin, start_line, line_, false);
  }

  void BlockComment() {
    int start_line = line_;
    std::size_t begin = pos_;
    bool javadoc = Peek(2) == '*' && Peek(3) != '/';
    pos_ += 2;
    while (true) {
      if (pos_ >= src_.size()) Fail("unterminated comment");
      if (src_[pos_] == '*' && Peek(1) == '/') {
        pos_ += 2;
        break;
      }
      Advance();
    }
    AddComment(begin, start_line, line_, javadoc);
    if (javadoc) pending_doc_ = static_cast<int>(out_.comments.size()) - 1;
  }

  void AddComment(std::size_t begin, int start_line, int end_line,
                  bool javadoc) {
    CommentFact c;
    c.startLine = start_line;
    c.endLine = end_line;
    c.text = std::string(src_.substr(begin, pos_ - begin));
    c.isJavadoc = javadoc;
    out_.comments.push_back(std::move(c));
    out_.commentNextToken.push_back(out_.tokens.size());
  }

  void LexToken() {
    Token tok;
    tok.line = line_;
    tok.column = column();
    tok.doc = pending_doc_;
    pending_doc_ = -1;
    std::size_t begin = pos_;
    auto c = static_cast<unsigned char>(src_[pos_]);

    if (IsIdentStart(c)) {
      while (pos_ < src_.size() &&
             IsIdentPart(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      tok.text = src_.substr(begin, pos_ - begin);
      tok.kind = IsJavaKeyword(tok.text) ? TokenKind::kKeyword
                                         : TokenKind::kIdentifier;
    } else if (std::isdigit(c) ||
               (c == '.' && std::isdigit(static_cast<unsigned char>(Peek(1))))) {
      Number();
      tok.kind = TokenKind::kNumber;
    } else if (c == '"') {
      if (Peek(1) == '"' && Peek(2) == '"') {
        TextBlock();
        tok.kind = TokenKind::kTextBlock;
      } else {
        Quoted('"');
        tok.kind = TokenKind::kString;
      }
    } else if (c == '\'') {
      Quoted('\'');
      tok.kind = TokenKind::kChar;
    } else {
      tok.kind = TokenKind::kOperator;
      std::string_view rest = src_.substr(pos_);
      std::size_t len = 0;
      for (std::string_view op : kMultiCharOps) {
        if (rest.starts_with(op)) {
          len = op.size();
          break;
        }
      }
      if (len == 0) {
        if (std::string_view("(){}[];,.=<>!~?:+-*/&|^%").find(c) ==
            std::string_view::npos) {
          Fail(std::string("unexpected character '") + static_cast<char>(c) +
               "'");
        }
        len = 1;
      }
      pos_ += len;
    }
    if (tok.text.empty()) tok.text = src_.substr(begin, pos_ - begin);
    tok.endLine = line_;
    if (pos_ < src_.size()) {
      char n = src_[pos_];
      tok.adjacentNext = !(n == ' ' || n == '\t' || n == '\n' || n == '\r' ||
                           n == '\f');
    }
    out_.tokens.push_back(tok);
  }

  void Number() {
    bool hex = src_[pos_] == '0' && (Peek(1) == 'x' || Peek(1) == 'X');
    if (hex) pos_ += 2;
    while (pos_ < src_.size()) {
      auto ch = static_cast<unsigned char>(src_[pos_]);
      if (std::isalnum(ch) || ch == '_' || ch == '.') {
        if (ch == '.' && !std::isdigit(static_cast<unsigned char>(Peek(1))) &&
            std::isalpha(static_cast<unsigned char>(Peek(1))) &&
            Peek(1) != 'e' && Peek(1) != 'E' && Peek(1) != 'f' &&
            Peek(1) != 'F' && Peek(1) != 'd' && Peek(1) != 'D') {
          break;  // `1.toString` is not Java, but stop at member access
        }
        bool exponent = hex ? (ch == 'p' || ch == 'P') : (ch == 'e' || ch == 'E');
        ++pos_;
        if (exponent && (Peek(0) == '+' || Peek(0) == '-')) ++pos_;
      } else {
        break;
      }
    }
  }

  void Quoted(char quote) {
    ++pos_;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n' || src_[pos_] == '\r') {
        Fail(quote == '"' ? "unterminated string literal"
                          : "unterminated character literal");
      }
      char ch = src_[pos_];
      if (ch == '\\') {
        pos_ += 2;
        continue;
      }
      ++pos_;
      if (ch == quote) break;
    }
  }

  void TextBlock() {
    pos_ += 3;
    while (true) {
      if (pos_ >= src_.size()) Fail("unterminated text block");
      if (src_[pos_] == '\\') {
        Advance();
        if (pos_ < src_.size()) Advance();
        continue;
      }
      if (src_[pos_] == '"' && Peek(1) == '"' && Peek(2) == '"') {
        pos_ += 3;
        break;
      }
      Advance();
    }
  }

  void Finish() {
    // Line statistics.
    int lines = 0;
    int non_blank = 0;
    bool has_content = false;
    bool any = false;
    for (std::size_t i = 0; i < src_.size(); ++i) {
      char ch = src_[i];
      any = true;
      if (ch == '\n' || (ch == '\r' && (i + 1 >= src_.size() || src_[i + 1] != '\n'))) {
        ++lines;
        if (has_content) ++non_blank;
        has_content = false;
        any = false;
      } else if (!(ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f')) {
        has_content = true;
      }
    }
    if (any) {
      ++lines;
      if (has_content) ++non_blank;
    }
    out_.totalLines = std::max(lines, 1);
    out_.nonBlankLines = non_blank;

    const auto& toks = out_.tokens;
    for (std::size_t i = 0; i < out_.comments.size(); ++i) {
      CommentFact& c = out_.comments[i];
      std::size_t next = out_.commentNextToken[i];
      bool before_clear = next == 0 || toks[next - 1].endLine != c.startLine;
      bool after_clear = toks[next].kind == TokenKind::kEnd ||
                         toks[next].line != c.endLine;
      c.ownLine = before_clear && after_clear;
    }
  }

  std::string_view src_;
  std::string_view path_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
  int pending_doc_ = -1;
  LexedFile out_;
};

}  // namespace

bool IsJavaKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool IsPrimitiveType(std::string_view word) {
  return word == "int" || word == "long" || word == "short" || word == "byte" ||
         word == "char" || word == "boolean" || word == "float" ||
         word == "double";
}

LexedFile LexJava(std::string_view source, std::string_view path) {
  return Lexer(source, path).Run();
}

}  // namespace jstyle::internal
