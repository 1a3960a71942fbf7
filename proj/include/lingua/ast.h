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

#ifndef LINGUA_AST_H_
#define LINGUA_AST_H_

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lingua/decimal.h"

namespace lingua {

// Immutable shared pointer with value equality. Lets recursive AST nodes
// default their comparison operators to deep structural equality.
template <class T>
class Box {
 public:
  Box(T value)  // NOLINT(google-explicit-constructor)
      : ptr_(std::make_shared<const T>(std::move(value))) {}

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  const T& get() const { return *ptr_; }

  friend bool operator==(const Box& a, const Box& b) {
    return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_;
  }

 private:
  std::shared_ptr<const T> ptr_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };
enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe };
enum class LogicalOp { kAnd, kOr };
enum class SimpleKind { kBoolean, kNumber, kWord };

std::string_view ToString(ArithOp op);
std::string_view ToString(CompareOp op);
std::string_view ToString(LogicalOp op);
std::string_view ToString(SimpleKind kind);

// ---------------------------------------------------------------------------
// Data expressions
// ---------------------------------------------------------------------------

struct DatExp;

namespace dat {

struct BoolLit {
  bool value;
  bool operator==(const BoolLit&) const = default;
};
struct NumLit {
  Decimal value;
  bool operator==(const NumLit&) const = default;
};
struct WordLit {
  std::string value;
  bool operator==(const WordLit&) const = default;
};
struct Ident {
  std::string name;
  bool operator==(const Ident&) const = default;
};
struct Logical {
  LogicalOp op;
  Box<DatExp> lhs, rhs;
  bool operator==(const Logical&) const = default;
};
struct Not {
  Box<DatExp> operand;
  bool operator==(const Not&) const = default;
};
struct Arith {
  ArithOp op;
  Box<DatExp> lhs, rhs;
  bool operator==(const Arith&) const = default;
};
struct Compare {
  CompareOp op;
  Box<DatExp> lhs, rhs;
  bool operator==(const Compare&) const = default;
};
struct Glue {
  Box<DatExp> lhs, rhs;
  bool operator==(const Glue&) const = default;
};
struct ListMake {
  Box<DatExp> element;
  bool operator==(const ListMake&) const = default;
};
struct Push {
  Box<DatExp> element, list;
  bool operator==(const Push&) const = default;
};
struct Top {
  Box<DatExp> list;
  bool operator==(const Top&) const = default;
};
struct ArrayMake {
  Box<DatExp> element;
  bool operator==(const ArrayMake&) const = default;
};
struct AddToArr {
  Box<DatExp> array, element;
  bool operator==(const AddToArr&) const = default;
};
struct Index {
  Box<DatExp> array, index;
  bool operator==(const Index&) const = default;
};
struct RecordMake {
  std::string attribute;
  Box<DatExp> value;
  bool operator==(const RecordMake&) const = default;
};
struct ExpandRecord {
  Box<DatExp> record;
  std::string attribute;
  Box<DatExp> value;
  bool operator==(const ExpandRecord&) const = default;
};
struct RemoveAttr {
  Box<DatExp> record;
  std::string attribute;
  bool operator==(const RemoveAttr&) const = default;
};
struct Select {
  Box<DatExp> record;
  std::string attribute;
  bool operator==(const Select&) const = default;
};
struct IfThenElse {
  Box<DatExp> condition, then_branch, else_branch;
  bool operator==(const IfThenElse&) const = default;
};
// Actual parameters of a functional call are plain identifiers.
struct FunCall {
  std::string name;
  std::vector<std::string> args;
  bool operator==(const FunCall&) const = default;
};

}  // namespace dat

struct DatExp {
  using Node = std::variant<dat::BoolLit, dat::NumLit, dat::WordLit, dat::Ident,
                            dat::Logical, dat::Not, dat::Arith, dat::Compare,
                            dat::Glue, dat::ListMake, dat::Push, dat::Top,
                            dat::ArrayMake, dat::AddToArr, dat::Index,
                            dat::RecordMake, dat::ExpandRecord,
                            dat::RemoveAttr, dat::Select, dat::IfThenElse,
                            dat::FunCall>;
  Node node;

  template <class T>
  DatExp(T n) : node(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  bool operator==(const DatExp&) const = default;
};

// ---------------------------------------------------------------------------
// Transfer expressions. Their denotations are state-independent functions
// of the "current composite".
// ---------------------------------------------------------------------------

struct TraExp;

namespace tra {

struct BoolConst {
  bool value;
  bool operator==(const BoolConst&) const = default;
};
struct NumConst {
  Decimal value;
  bool operator==(const NumConst&) const = default;
};
struct WordConst {
  std::string value;
  bool operator==(const WordConst&) const = default;
};
// `it`: the identity transfer.
struct Current {
  bool operator==(const Current&) const = default;
};
// `record.ide`: selects an attribute of the current record composite.
struct Attr {
  std::string attribute;
  bool operator==(const Attr&) const = default;
};
struct Arith {
  ArithOp op;
  Box<TraExp> lhs, rhs;
  bool operator==(const Arith&) const = default;
};
struct Compare {
  CompareOp op;
  Box<TraExp> lhs, rhs;
  bool operator==(const Compare&) const = default;
};
struct Logical {
  LogicalOp op;
  Box<TraExp> lhs, rhs;
  bool operator==(const Logical&) const = default;
};
struct Not {
  Box<TraExp> operand;
  bool operator==(const Not&) const = default;
};
// `number`, `word`, `boolean`: tests the body of the current composite.
struct BodyTest {
  SimpleKind kind;
  bool operator==(const BodyTest&) const = default;
};
struct AllList {
  Box<TraExp> inner;
  bool operator==(const AllList&) const = default;
};
// `TT`: the always-true transfer.
struct Truth {
  bool operator==(const Truth&) const = default;
};

}  // namespace tra

struct TraExp {
  using Node = std::variant<tra::BoolConst, tra::NumConst, tra::WordConst,
                            tra::Current, tra::Attr, tra::Arith, tra::Compare,
                            tra::Logical, tra::Not, tra::BodyTest,
                            tra::AllList, tra::Truth>;
  Node node;

  template <class T>
  TraExp(T n) : node(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  bool operator==(const TraExp&) const = default;
};

// ---------------------------------------------------------------------------
// Type expressions
// ---------------------------------------------------------------------------

struct TypExp;

namespace typ {

struct Simple {
  SimpleKind kind;
  bool operator==(const Simple&) const = default;
};
struct Constant {
  std::string name;
  bool operator==(const Constant&) const = default;
};
struct ListType {
  Box<TypExp> element;
  bool operator==(const ListType&) const = default;
};
struct ArrayType {
  Box<TypExp> element;
  bool operator==(const ArrayType&) const = default;
};
struct RecordType {
  std::string attribute;
  Box<TypExp> element;
  bool operator==(const RecordType&) const = default;
};
struct ExpandRecordType {
  Box<TypExp> base;
  std::string attribute;
  Box<TypExp> element;
  bool operator==(const ExpandRecordType&) const = default;
};
struct ReplaceTransfer {
  Box<TypExp> base;
  Box<TraExp> transfer;
  bool operator==(const ReplaceTransfer&) const = default;
};

}  // namespace typ

struct TypExp {
  using Node = std::variant<typ::Simple, typ::Constant, typ::ListType,
                            typ::ArrayType, typ::RecordType,
                            typ::ExpandRecordType, typ::ReplaceTransfer>;
  Node node;

  template <class T>
  TypExp(T n) : node(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  bool operator==(const TypExp&) const = default;
};

// ---------------------------------------------------------------------------
// Instructions
// ---------------------------------------------------------------------------

struct Instruction;

namespace ins {

struct Assign {
  std::string target;
  Box<DatExp> value;
  bool operator==(const Assign&) const = default;
};
struct YokeReplace {
  std::string target;
  Box<TraExp> transfer;
  bool operator==(const YokeReplace&) const = default;
};
struct Skip {
  bool operator==(const Skip&) const = default;
};
struct Call {
  std::string procedure;
  std::vector<std::string> ref_args;
  std::vector<std::string> val_args;
  bool operator==(const Call&) const = default;
};
// `if dae then ins fi`: runs `body` when the register holds the error word
// that `condition` evaluates to.
struct ErrorHandler {
  Box<DatExp> condition;
  Box<Instruction> body;
  bool operator==(const ErrorHandler&) const = default;
};
struct If {
  Box<DatExp> condition;
  Box<Instruction> then_branch, else_branch;
  bool operator==(const If&) const = default;
};
struct While {
  Box<DatExp> condition;
  Box<Instruction> body;
  bool operator==(const While&) const = default;
};
struct Seq {
  Box<Instruction> first, second;
  bool operator==(const Seq&) const = default;
};

}  // namespace ins

struct Instruction {
  using Node = std::variant<ins::Assign, ins::YokeReplace, ins::Skip,
                            ins::Call, ins::ErrorHandler, ins::If, ins::While,
                            ins::Seq>;
  Node node;

  template <class T>
  Instruction(T n) : node(std::move(n)) {}  // NOLINT
  bool operator==(const Instruction&) const = default;
};

// ---------------------------------------------------------------------------
// Declarations, preambles and programs
// ---------------------------------------------------------------------------

struct Program;

struct FormalParam {
  std::string name;
  Box<TypExp> type;
  bool operator==(const FormalParam&) const = default;
};

struct ProcDecl {
  std::string name;
  std::vector<FormalParam> ref_params;
  std::vector<FormalParam> val_params;
  Box<Program> body;
  bool operator==(const ProcDecl&) const = default;
};

struct FunDecl {
  std::string name;
  std::vector<FormalParam> params;
  Box<Program> body;
  Box<DatExp> result;
  Box<TypExp> result_type;
  bool operator==(const FunDecl&) const = default;
};

struct Preamble;

namespace pre {

struct VarDecl {
  std::string name;
  Box<TypExp> type;
  bool operator==(const VarDecl&) const = default;
};
struct TypeDef {
  std::string name;
  Box<TypExp> type;
  bool operator==(const TypeDef&) const = default;
};
struct Proc {
  ProcDecl decl;
  bool operator==(const Proc&) const = default;
};
struct MultiProc {
  std::vector<ProcDecl> members;
  bool operator==(const MultiProc&) const = default;
};
struct Fun {
  FunDecl decl;
  bool operator==(const Fun&) const = default;
};
struct Skip {
  bool operator==(const Skip&) const = default;
};
struct Seq {
  Box<Preamble> first, second;
  bool operator==(const Seq&) const = default;
};

}  // namespace pre

struct Preamble {
  using Node = std::variant<pre::VarDecl, pre::TypeDef, pre::Proc,
                            pre::MultiProc, pre::Fun, pre::Skip, pre::Seq>;
  Node node;

  template <class T>
  Preamble(T n) : node(std::move(n)) {}  // NOLINT
  bool operator==(const Preamble&) const = default;
};

struct Program {
  Box<Preamble> preamble;
  Box<Instruction> body;
  bool operator==(const Program&) const = default;
};

// Fully parenthesized concrete syntax. The output is accepted by both the
// strict parser and the colloquial parser and parses back to the same tree
// (sequences are emitted flat, so only right-nested sequences round-trip).
std::string Pretty(const DatExp& e);
std::string Pretty(const TraExp& e);
std::string Pretty(const TypExp& e);
std::string Pretty(const Instruction& i);
std::string Pretty(const Preamble& p);
std::string Pretty(const Program& p);

// Canonical prefix dump, one constructor per node:
//   (assign x (arith + (ide y) (num 1)))
std::string DumpAst(const DatExp& e);
std::string DumpAst(const TraExp& e);
std::string DumpAst(const TypExp& e);
std::string DumpAst(const Instruction& i);
std::string DumpAst(const Preamble& p);
std::string DumpAst(const Program& p);

template <class Node>
bool AstEqual(const Node& a, const Node& b) {
  return a == b;
}

}  // namespace lingua

#endif  // LINGUA_AST_H_
