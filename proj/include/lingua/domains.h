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

#ifndef LINGUA_DOMAINS_H_
#define LINGUA_DOMAINS_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lingua/ast.h"
#include "lingua/decimal.h"

namespace lingua {

// An abstract error: an apostrophe-free, nonempty word such as
// 'division-by-zero'.
struct AbstractError {
  std::string word;
  bool operator==(const AbstractError&) const = default;
};

// Error words produced by the interpreter.
namespace err {
inline constexpr std::string_view kNumberExpected = "number-expected";
inline constexpr std::string_view kWordExpected = "word-expected";
inline constexpr std::string_view kBooleanExpected = "boolean-expected";
inline constexpr std::string_view kListExpected = "list-expected";
inline constexpr std::string_view kArrayExpected = "array-expected";
inline constexpr std::string_view kRecordExpected = "record-expected";
inline constexpr std::string_view kDivisionByZero = "division-by-zero";
inline constexpr std::string_view kOverflow = "overflow";
inline constexpr std::string_view kIncomparable = "incomparable";
inline constexpr std::string_view kBodyMismatch = "body-mismatch";
inline constexpr std::string_view kEmptyList = "empty-list";
inline constexpr std::string_view kIndexOutOfRange = "index-out-of-range";
inline constexpr std::string_view kAttributeExists = "attribute-exists";
inline constexpr std::string_view kAttributeMissing = "attribute-missing";
inline constexpr std::string_view kAYokeExpected = "a-yoke-expected";
inline constexpr std::string_view kYokeNotSatisfied = "yoke-not-satisfied";
inline constexpr std::string_view kNoCoherence = "no-coherence";
inline constexpr std::string_view kIdentifierNotDeclared =
    "identifier-not-declared";
inline constexpr std::string_view kIdentifierNotFree = "identifier-not-free";
inline constexpr std::string_view kVariableNotInitialized =
    "variable-not-initialized";
inline constexpr std::string_view kTypeNotDefined = "type-not-defined";
inline constexpr std::string_view kRecordTypeExpected = "record-type-expected";
inline constexpr std::string_view kProcedureNotDeclared =
    "procedure-not-declared";
inline constexpr std::string_view kParameterListMismatch =
    "parameter-list-mismatch";
inline constexpr std::string_view kParameterTypeMismatch =
    "parameter-type-mismatch";
inline constexpr std::string_view kResultTypeMismatch = "result-type-mismatch";
}  // namespace err

inline AbstractError MakeError(std::string_view word) {
  return AbstractError{std::string(word)};
}

// Structural description of data: ('Boolean') | ('number') | ('word') |
// ('L', bod) | ('A', bod) | ('R', ide => bod).
class Body {
 public:
  enum class Kind { kBoolean, kNumber, kWord, kList, kArray, kRecord };
  // Sorted by attribute name, no duplicates.
  using Fields = std::vector<std::pair<std::string, Body>>;

  static Body Boolean();
  static Body Number();
  static Body Word();
  static Body Simple(SimpleKind kind);
  static Body List(Body element);
  static Body Array(Body element);
  // Throws std::invalid_argument on duplicate attributes.
  static Body Record(Fields fields);

  Kind kind() const;
  bool is_simple() const;
  // List and array bodies only.
  const Body& element() const;
  // Record bodies only.
  const Fields& fields() const;
  const Body* field(std::string_view attribute) const;

  friend bool operator==(const Body& a, const Body& b);

 private:
  struct Rep;
  explicit Body(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// Runtime data. Arrays are sequences indexed 1..n; records map attributes to
// data.
class Data {
 public:
  enum class Kind { kBoolean, kNumber, kWord, kList, kArray, kRecord };
  using Fields = std::vector<std::pair<std::string, Data>>;

  static Data Boolean(bool value);
  static Data Number(Decimal value);
  // Throws std::invalid_argument if the word contains an apostrophe.
  static Data Word(std::string value);
  static Data List(std::vector<Data> elements);
  static Data Array(std::vector<Data> elements);
  // Throws std::invalid_argument on duplicate attributes.
  static Data Record(Fields fields);

  Kind kind() const;
  bool boolean() const;
  const Decimal& number() const;
  const std::string& word() const;
  // List and array data only.
  const std::vector<Data>& elements() const;
  // Record data only.
  const Fields& fields() const;
  const Data* field(std::string_view attribute) const;

  friend bool operator==(const Data& a, const Data& b);

 private:
  struct Rep;
  explicit Data(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

bool ClanContainsBody(const Body& body, const Data& data);

// A (data, body) pair with data in the clan of body.
class Composite {
 public:
  // Throws std::invalid_argument unless ClanContainsBody(body, data).
  Composite(Data data, Body body);

  // For producers that establish clan membership by construction.
  static Composite Unchecked(Data data, Body body);

  const Data& data() const { return data_; }
  const Body& body() const { return body_; }

  friend bool operator==(const Composite&, const Composite&) = default;

 private:
  struct UncheckedTag {};
  Composite(Data data, Body body, UncheckedTag)
      : data_(std::move(data)), body_(std::move(body)) {}
  Data data_;
  Body body_;
};

using CompositeOrError = std::variant<Composite, AbstractError>;

inline bool IsError(const CompositeOrError& c) {
  return std::holds_alternative<AbstractError>(c);
}

Composite BooComposite(bool value);
// The truth value of a Boolean composite, nullopt for any other composite.
std::optional<bool> AsBoolean(const Composite& c);

struct Limits {
  int max_number_total_digits = 12;
  int max_number_fraction_digits = 4;
  int max_word_length = 4096;
  int max_collection_size = 65536;
  // Optional bound on |n| for every number, on top of the digit budget.
  std::optional<Decimal> max_magnitude;

  bool Valid() const;
};

bool Oversized(const Data& data, const Limits& limits);

// A transfer is the denotation of a transfer expression: a total function on
// composites-or-errors. Error inputs are returned unchanged.
class Transfer {
 public:
  explicit Transfer(TraExp expression) : expression_(std::move(expression)) {}

  // The always-true transfer TT.
  static Transfer True();

  const TraExp& expression() const { return *expression_; }
  bool is_true() const;

  CompositeOrError Apply(const CompositeOrError& input,
                         const Limits& limits) const;

  friend bool operator==(const Transfer&, const Transfer&) = default;

 private:
  Box<TraExp> expression_;
};

inline CompositeOrError ApplyTransfer(const Transfer& transfer,
                                      const CompositeOrError& input,
                                      const Limits& limits) {
  return transfer.Apply(input, limits);
}

struct Type {
  Body body;
  Transfer transfer;
  bool operator==(const Type&) const = default;
};

bool ClanContainsType(const Type& type, const Composite& com,
                      const Limits& limits);

// A value bound to a variable. An empty `content` is the pseudo-data Ω.
struct Value {
  std::optional<Data> content;
  Type type;

  bool is_pseudo() const { return !content.has_value(); }
  // Precondition: !is_pseudo().
  Composite composite() const { return Composite::Unchecked(*content, type.body); }
  bool operator==(const Value&) const = default;
};

bool Coherent(const Body& a, const Body& b);

// Composite-level operations. All are transparent: the first error argument
// (left to right) is the result.
CompositeOrError CompArith(ArithOp op, const CompositeOrError& lhs,
                           const CompositeOrError& rhs, const Limits& limits);
CompositeOrError CompCompare(CompareOp op, const CompositeOrError& lhs,
                             const CompositeOrError& rhs);
CompositeOrError CompGlue(const CompositeOrError& lhs,
                          const CompositeOrError& rhs, const Limits& limits);

CompositeOrError ListMake(const CompositeOrError& element,
                          const Limits& limits);
CompositeOrError ListPush(const CompositeOrError& element,
                          const CompositeOrError& list, const Limits& limits);
CompositeOrError ListTop(const CompositeOrError& list);

CompositeOrError ArrayMake(const CompositeOrError& element,
                           const Limits& limits);
CompositeOrError ArrayAppend(const CompositeOrError& array,
                             const CompositeOrError& element,
                             const Limits& limits);
CompositeOrError ArrayIndex(const CompositeOrError& array,
                            const CompositeOrError& index);

CompositeOrError RecordMake(const std::string& attribute,
                            const CompositeOrError& value,
                            const Limits& limits);
CompositeOrError RecordExpand(const CompositeOrError& record,
                              const std::string& attribute,
                              const CompositeOrError& value,
                              const Limits& limits);
CompositeOrError RecordRemove(const CompositeOrError& record,
                              const std::string& attribute);
CompositeOrError RecordSelect(const CompositeOrError& record,
                              const std::string& attribute);

// Literal composites; oversized literals become 'overflow'.
CompositeOrError NumberLiteral(const Decimal& value, const Limits& limits);
CompositeOrError WordLiteral(const std::string& value, const Limits& limits);

std::string ToString(const Data& data);
// Bodies and types print as type expressions, e.g. `list-type number ee`.
std::string ToString(const Body& body);
std::string ToString(const Type& type);
// `(2, number)`
std::string ToString(const Composite& com);
// A composite, or `error: <word>`.
std::string ToString(const CompositeOrError& result);

}  // namespace lingua

#endif  // LINGUA_DOMAINS_H_
