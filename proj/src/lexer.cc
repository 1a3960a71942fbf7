// Copyright 2026 The Lingua Authors
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

#include <algorithm>
#include <array>
#include <cctype>

#include "lingua/keywords.h"
#include "lingua/syntax.h"

namespace lingua {
namespace {

constexpr std::string_view kKeywords[] = {
    "true",        "false",          "not",
    "and",         "or",             "list",
    "ee",          "push",           "on",
    "top",         "array",          "add-to-arr",
    "new",         "record",         "expand-record",
    "remove-attr", "at",             "by",
    "if",          "then",           "else",
    "fi",          "glue",           "it",
    "TT",          "all-list",       "boolean",
    "number",      "word",           "list-type",
    "array-type",  "record-type",    "expand-record-type",
    "replace-transfer-in", "as",     "yoke",
    "skip",        "call",           "ref",
    "val",         "while",          "do",
    "od",          "let",            "be",
    "tel",         "set",            "tes",
    "proc",        "end",            "fun",
    "return",      "begin",          "multiproc",
    "begin-program", "end-program",
};

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      SkipTrivia();
      if (at_end()) {
        tokens.push_back({TokenKind::kEnd, "", pos_});
        return tokens;
      }
      tokens.push_back(Next());
    }
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(size_t ahead = 0) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const {
    return src_.substr(i_, s.size()) == s;
  }

  void Advance(size_t n = 1) {
    for (size_t k = 0; k < n && !at_end(); ++k) {
      char c = src_[i_++];
      if (c == '\n') {
        ++pos_.line;
        pos_.column = 1;
      } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
        ++pos_.column;
      }
    }
  }

  void SkipTrivia() {
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (c == '-' && peek(1) == '-') {
        while (!at_end() && peek() != '\n') Advance();
      } else {
        return;
      }
    }
  }

  Token Next() {
    SourcePos start = pos_;
    char c = peek();
    if (IsIdentStart(c)) return LexName(start);
    if (IsDigit(c)) return LexNumber(start);
    if (c == '\'') return LexWord(start);

    static constexpr std::array<std::pair<std::string_view, std::string_view>, 21>
        kPunct = {{
            {":=", ":="}, {"<>", "<>"}, {"<=", "<="}, {">=", ">="},
            {"≠", "<>"}, {"≤", "<="}, {"≥", ">="},
            {"(", "("}, {")", ")"}, {"[", "["}, {"]", "]"},
            {",", ","}, {";", ";"}, {".", "."}, {"+", "+"},
            {"-", "-"}, {"*", "*"}, {"/", "/"}, {"=", "="},
            {"<", "<"}, {">", ">"},
        }};
    for (const auto& [spelling, canonical] : kPunct) {
      if (starts_with(spelling)) {
        Advance(spelling.size());
        return {TokenKind::kPunct, std::string(canonical), start};
      }
    }
    throw SyntaxError(start, std::string("unexpected character '") + c + "'");
  }

  Token LexName(SourcePos start) {
    size_t begin = i_;
    while (true) {
      while (IsIdentChar(peek())) Advance();
      // A hyphen continues the name only when a letter follows, so `x-1`
      // is a subtraction while `ch-name` is one identifier.
      if (peek() == '-' && IsIdentStart(peek(1))) {
        Advance();
        continue;
      }
      break;
    }
    std::string text(src_.substr(begin, i_ - begin));
    TokenKind kind =
        IsReservedWord(text) ? TokenKind::kKeyword : TokenKind::kIdentifier;
    return {kind, std::move(text), start};
  }

  Token LexNumber(SourcePos start) {
    size_t begin = i_;
    while (IsDigit(peek())) Advance();
    if (peek() == '.' && IsDigit(peek(1))) {
      Advance();
      while (IsDigit(peek())) Advance();
    }
    return {TokenKind::kNumber, std::string(src_.substr(begin, i_ - begin)),
            start};
  }

  Token LexWord(SourcePos start) {
    Advance();  // opening apostrophe
    size_t begin = i_;
    while (!at_end() && peek() != '\'' && peek() != '\n') Advance();
    if (at_end() || peek() != '\'') {
      throw SyntaxError(start, "unterminated word literal");
    }
    std::string text(src_.substr(begin, i_ - begin));
    Advance();  // closing apostrophe
    return {TokenKind::kWord, std::move(text), start};
  }

  std::string_view src_;
  size_t i_ = 0;
  SourcePos pos_;
};

std::string FormatError(SourcePos pos, const std::string& message,
                        const std::vector<std::string>& expected) {
  std::string out = std::to_string(pos.line) + ":" +
                    std::to_string(pos.column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

}  // namespace

bool IsReservedWord(std::string_view word) {
  return std::find(std::begin(kKeywords), std::end(kKeywords), word) != std::end(kKeywords);
}

SyntaxError::SyntaxError(SourcePos pos, std::string message,
                         std::vector<std::string> expected)
    : std::runtime_error(FormatError(pos, message, expected)),
      pos_(pos),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

std::vector<Token> Tokenize(std::string_view source) {
  return Lexer(source).Run();
}

}  // namespace lingua
