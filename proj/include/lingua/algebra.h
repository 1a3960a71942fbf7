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

#ifndef LINGUA_ALGEBRA_H_
#define LINGUA_ALGEBRA_H_

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lingua/decimal.h"

namespace lingua::algebra {

// Malformed signature, grammar or term.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// --- signatures --------------------------------------------------------------

struct Constructor {
  std::string name;
  std::vector<std::string> args;
  std::string result;
  bool operator==(const Constructor&) const = default;
};

struct Signature {
  std::vector<std::string> sorts;
  std::vector<Constructor> constructors;
  bool operator==(const Signature&) const = default;
};

// Line format:
//   sort Num
//   ctor + : Num x Num -> Num
//   ctor 0 : -> Num
// Blank lines and lines starting with '#' are skipped.
Signature ParseSignature(std::string_view text);
std::string FormatSignature(const Signature& sig);

// Least fixpoint: a sort is reachable iff some constructor into it has only
// reachable argument sorts.
std::map<std::string, bool> ReachableSorts(const Signature& sig);

// --- equational grammars -----------------------------------------------------

// A language expression over finite word sets.
struct LangExp {
  enum class Kind { kTerminal, kNonterminal, kUnion, kConcat, kPower, kStar,
                    kPlus };
  Kind kind = Kind::kUnion;
  std::string text;              // terminal word or nonterminal name
  std::vector<LangExp> parts;    // union/concat operands, or the one operand
  int exponent = 0;              // kPower only

  static LangExp Terminal(std::string word);
  static LangExp Nonterminal(std::string name);
  static LangExp Union(std::vector<LangExp> alternatives);
  static LangExp Concat(std::vector<LangExp> items);
  static LangExp Power(LangExp base, int n);
  static LangExp Star(LangExp base);
  static LangExp Plus(LangExp base);
  // The empty language.
  static LangExp Empty() { return Union({}); }

  bool operator==(const LangExp&) const = default;
};

struct Equation {
  std::string nonterminal;
  LangExp rhs;
  bool operator==(const Equation&) const = default;
};

struct Grammar {
  std::vector<Equation> equations;

  const LangExp* Find(std::string_view nonterminal) const;
  bool operator==(const Grammar&) const = default;
};

// Line format: `NT = alt | alt ...` where an alternative juxtaposes double
// quoted terminals, nonterminals and parenthesized groups, each optionally
// followed by `*`, `+` or `^n`. `""` is the empty word; an empty right-hand
// side is the empty language.
Grammar ParseGrammar(std::string_view text);
std::string FormatGrammar(const Grammar& g);

// One equation per sort; a constructor c : S1 x ... x Sn -> S contributes
// the alternative "c" "(" S1 "," ... "," Sn ")", a constant just "c".
Grammar DeriveAbstractSyntax(const Signature& sig);

// --- enumeration -------------------------------------------------------------

// Words ordered by length, then lexicographically.
struct ShortLex {
  bool operator()(const std::string& a, const std::string& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};
using Language = std::set<std::string, ShortLex>;
using Solution = std::map<std::string, Language>;

enum class Execution { kSerial, kParallel };

struct EnumerateOptions {
  size_t max_length = 0;
  Execution execution = Execution::kSerial;
  // Restricts every iterate to words that pass the filter. The filter must be
  // closed under taking factors (substrings) or the result is not the slice
  // of the least solution.
  std::function<bool(const std::string&)> factor_filter;
  // Called with each Kleene iterate, starting from the all-empty tuple.
  std::function<void(const Solution&)> on_iterate;
};

// The length-bounded slice of the least solution of `g`, for every
// nonterminal, by Jacobi-style Kleene iteration.
Solution SolveBounded(const Grammar& g, const EnumerateOptions& options);

Language Enumerate(const Grammar& g, const std::string& nonterminal,
                   size_t max_length, Execution execution = Execution::kSerial);

bool Member(const Grammar& g, const std::string& nonterminal,
            const std::string& word);

// --- the NumBool reference semantics ------------------------------------------

// Evaluates a NumBoolExp word such as "+(1,+(1,0))" in the algebra of
// non-negative integers and Booleans. Throws AlgebraError on a malformed term.
using NumBoolValue = std::variant<BigInt, bool>;
NumBoolValue EvalNumBool(std::string_view term);

}  // namespace lingua::algebra

#endif  // LINGUA_ALGEBRA_H_
