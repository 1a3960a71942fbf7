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

#ifndef LINGUA_SYNTAX_H_
#define LINGUA_SYNTAX_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lingua/ast.h"

namespace lingua {

struct SourcePos {
  int line = 1;
  int column = 1;
};

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kNumber,
  kWord,
  kPunct,
  kEnd,
};

struct Token {
  TokenKind kind;
  // Keywords, identifiers and punctuation carry their spelling (Unicode
  // operator aliases are normalized to ASCII); numbers their digits; words
  // their contents without apostrophes.
  std::string text;
  SourcePos pos;

  bool operator==(const Token& other) const {
    return kind == other.kind && text == other.text;
  }
};

// Lexical and grammatical errors. what() is `line:col: message`.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SourcePos pos, std::string message,
              std::vector<std::string> expected = {});

  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::string message_;
  std::vector<std::string> expected_;
};

// Longest-match lexing. Hyphenated keywords (record-type, begin-program, ...)
// are single tokens; `--` starts a comment running to the end of the line.
std::vector<Token> Tokenize(std::string_view source);

enum class SyntaxMode {
  // Fully parenthesized concrete syntax only.
  kStrict,
  // Concrete syntax plus colloquialisms, restored to concrete trees.
  kColloquial,
};

// Entry points. Each consumes the whole input.
Program ParseProgram(std::string_view source, SyntaxMode mode);
Instruction ParseInstruction(std::string_view source, SyntaxMode mode);
DatExp ParseDatExp(std::string_view source, SyntaxMode mode);
TraExp ParseTraExp(std::string_view source, SyntaxMode mode);
TypExp ParseTypExp(std::string_view source, SyntaxMode mode);

// The restoring transformation: parses colloquial source and returns the
// concrete tree it stands for.
inline Program RestoreColloquial(std::string_view source) {
  return ParseProgram(source, SyntaxMode::kColloquial);
}

}  // namespace lingua

#endif  // LINGUA_SYNTAX_H_
