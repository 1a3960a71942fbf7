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

#ifndef LINGUA_TESTS_GENERATORS_H_
#define LINGUA_TESTS_GENERATORS_H_

// Random syntax trees and random programs for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lingua/ast.h"
#include "lingua/decimal.h"

namespace lingua::testing {

// Trees in the canonical shape that printing preserves: instruction and
// preamble sequences nest to the right, and `skip` appears in a preamble only
// as the whole preamble.
class AstGenerator {
 public:
  explicit AstGenerator(uint64_t seed) : rng_(seed) {}

  DatExp Dat(int depth) {
    if (depth <= 0 || Chance(0.2)) {
      switch (Pick(5)) {
        case 0: return dat::BoolLit{Chance(0.5)};
        case 1: return dat::NumLit{Number()};
        case 2: return dat::WordLit{Word()};
        case 3: return dat::Ident{Name()};
        default: return dat::FunCall{Name(), Names(Pick(3))};
      }
    }
    auto sub = [&] { return Dat(depth - 1); };
    switch (Pick(16)) {
      case 0: return dat::Logical{Chance(0.5) ? LogicalOp::kAnd : LogicalOp::kOr,
                                  sub(), sub()};
      case 1: return dat::Not{sub()};
      case 2: return dat::Arith{static_cast<ArithOp>(Pick(4)), sub(), sub()};
      case 3: return dat::Compare{static_cast<CompareOp>(Pick(6)), sub(), sub()};
      case 4: return dat::Glue{sub(), sub()};
      case 5: return dat::ListMake{sub()};
      case 6: return dat::Push{sub(), sub()};
      case 7: return dat::Top{sub()};
      case 8: return dat::ArrayMake{sub()};
      case 9: return dat::AddToArr{sub(), sub()};
      case 10: return dat::Index{sub(), sub()};
      case 11: return dat::RecordMake{Name(), sub()};
      case 12: return dat::ExpandRecord{sub(), Name(), sub()};
      case 13: return dat::RemoveAttr{sub(), Name()};
      case 14: return dat::Select{sub(), Name()};
      default: return dat::IfThenElse{sub(), sub(), sub()};
    }
  }

  TraExp Tra(int depth) {
    if (depth <= 0 || Chance(0.25)) {
      switch (Pick(7)) {
        case 0: return tra::BoolConst{Chance(0.5)};
        case 1: return tra::NumConst{Number()};
        case 2: return tra::WordConst{Word()};
        case 3: return tra::Current{};
        case 4: return tra::Attr{Name()};
        case 5: return tra::BodyTest{static_cast<SimpleKind>(Pick(3))};
        default: return tra::Truth{};
      }
    }
    auto sub = [&] { return Tra(depth - 1); };
    switch (Pick(5)) {
      case 0: return tra::Arith{static_cast<ArithOp>(Pick(4)), sub(), sub()};
      case 1: return tra::Compare{static_cast<CompareOp>(Pick(6)), sub(), sub()};
      case 2: return tra::Logical{Chance(0.5) ? LogicalOp::kAnd : LogicalOp::kOr,
                                  sub(), sub()};
      case 3: return tra::Not{sub()};
      default: return tra::AllList{sub()};
    }
  }

  TypExp Typ(int depth) {
    if (depth <= 0 || Chance(0.3)) {
      if (Chance(0.7)) return typ::Simple{static_cast<SimpleKind>(Pick(3))};
      return typ::Constant{TypeName()};
    }
    auto sub = [&] { return Typ(depth - 1); };
    switch (Pick(5)) {
      case 0: return typ::ListType{sub()};
      case 1: return typ::ArrayType{sub()};
      case 2: return typ::RecordType{Name(), sub()};
      case 3: return typ::ExpandRecordType{sub(), Name(), sub()};
      default: return typ::ReplaceTransfer{sub(), Tra(depth - 1)};
    }
  }

  Instruction Ins(int depth) {
    if (depth > 0 && Chance(0.3)) return ins::Seq{Atom(depth), Ins(depth - 1)};
    return Atom(depth);
  }

  Preamble Pre(int depth) {
    if (Chance(0.15)) return pre::Skip{};
    return PreSeq(depth, 1 + Pick(3));
  }

  Program Prog(int depth) { return Program{Pre(depth), Ins(depth)}; }

 private:
  Instruction Atom(int depth) {
    if (depth <= 0 || Chance(0.4)) {
      switch (Pick(4)) {
        case 0: return ins::Assign{Name(), Dat(depth)};
        case 1: return ins::YokeReplace{Name(), Tra(depth)};
        case 2: return ins::Skip{};
        default: return ins::Call{ProcName(), Names(Pick(3)), Names(Pick(3))};
      }
    }
    switch (Pick(3)) {
      case 0: return ins::ErrorHandler{Dat(depth - 1), Ins(depth - 1)};
      case 1: return ins::If{Dat(depth - 1), Ins(depth - 1), Ins(depth - 1)};
      default: return ins::While{Dat(depth - 1), Ins(depth - 1)};
    }
  }

  Preamble PreSeq(int depth, int items) {
    Preamble item = PreItem(depth);
    if (items <= 1) return item;
    return pre::Seq{item, PreSeq(depth, items - 1)};
  }

  Preamble PreItem(int depth) {
    switch (Pick(depth > 0 ? 5 : 2)) {
      case 0: return pre::VarDecl{Name(), Typ(2)};
      case 1: return pre::TypeDef{TypeName(), Typ(2)};
      case 2: return pre::Proc{Proc(depth)};
      case 3: {
        std::vector<ProcDecl> members;
        members.reserve(2);
        members.push_back(Proc(depth));
        if (Chance(0.5)) members.push_back(Proc(depth));
        return pre::MultiProc{std::move(members)};
      }
      default: {
        std::vector<FormalParam> params = Formals(Pick(3), 0);
        return pre::Fun{FunDecl{ProcName(), std::move(params),
                                Prog(depth - 1), Dat(depth - 1), Typ(1)}};
      }
    }
  }

  ProcDecl Proc(int depth) {
    size_t refs = Pick(3);
    std::vector<FormalParam> ref_params = Formals(refs, 0);
    std::vector<FormalParam> val_params = Formals(Pick(3), refs);
    return ProcDecl{ProcName(), std::move(ref_params), std::move(val_params),
                    Prog(depth - 1)};
  }

  // Distinct formal names, numbered from `offset`.
  std::vector<FormalParam> Formals(size_t count, size_t offset) {
    std::vector<FormalParam> params;
    for (size_t i = 0; i < count; ++i) {
      params.push_back(FormalParam{"f" + std::to_string(offset + i), Typ(1)});
    }
    return params;
  }

  bool Chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  size_t Pick(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng_);
  }

  std::string Name() {
    static const char* kNames[] = {"x", "y", "z", "n", "total", "a-b", "k2"};
    return kNames[Pick(std::size(kNames))];
  }
  std::string TypeName() {
    static const char* kNames[] = {"T", "Price", "row-type"};
    return kNames[Pick(std::size(kNames))];
  }
  std::string ProcName() {
    static const char* kNames[] = {"p", "q", "fact", "even"};
    return kNames[Pick(std::size(kNames))];
  }
  std::vector<std::string> Names(size_t n) {
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i) out.push_back(Name());
    return out;
  }
  Decimal Number() {
    static const char* kNumbers[] = {"0", "1", "42", "3.25", "-4", "-0.5",
                                     "1000000", "0.0001"};
    return *Decimal::Parse(kNumbers[Pick(std::size(kNumbers))]);
  }
  std::string Word() {
    static const char* kWords[] = {"", "a", "abc", "two words", "x-y"};
    return kWords[Pick(std::size(kWords))];
  }

  std::mt19937_64 rng_;
};

// Random colloquial programs over a fixed set of typed variables, a yoked
// type, a procedure with a reference parameter and a function. They run
// without syntax errors and hit abstract errors, handlers, yokes and loops.
class ProgramSourceGenerator {
 public:
  explicit ProgramSourceGenerator(uint64_t seed) : rng_(seed) {}

  std::string Program(int instructions) {
    std::string body;
    for (int i = 0; i < instructions; ++i) {
      body += " ;\n  " + Instruction(2);
    }
    return std::string(kPrelude) + body + "\nend-program\n";
  }

 private:
  static constexpr const char* kPrelude =
      "begin-program\n"
      "  set Small as replace-transfer-in number by it < 100 ee tes ;\n"
      "  let n be number tel ; let m be Small tel ; let w be word tel ;\n"
      "  let b be boolean tel ; let l be list-type number ee tel ;\n"
      "  let r be record-type a as number ee tel ;\n"
      "  let ar be array-type word ee tel ; let k be number tel ;\n"
      "  let j be number tel ;\n"
      "  proc bump (ref x as number val d as number) x := x + d end proc ;\n"
      "  fun twice (val x as number) skip return x * 2 as number ;\n"
      "  n := 1 ; m := 2 ; w := 'a' ; b := true ; l := list 1 ee ;\n"
      "  r := record a as 1 ee ; ar := array 'x' ee ; k := 0 ; j := 0";

  std::string Instruction(int depth) {
    switch (Pick(depth > 0 ? 12 : 8)) {
      case 0: return "n := " + Num(2);
      case 1: return "m := " + Num(2);
      case 2: return "w := " + Wrd(2);
      case 3: return "b := " + Bool(2);
      case 4: return "l := " + Lst(2);
      case 5: return Chance(0.5) ? "r := " + Rec(2) : "ar := " + Arr(2);
      case 6: return Yoke();
      case 7: {
        static const char* kCalls[] = {
            "call bump (ref n val m)", "call bump (ref m val n)",
            "call bump (ref m val k)", "call bump (ref w val n)",
            "call bump (ref n val w)", "call bump (val n)"};
        return kCalls[Pick(std::size(kCalls))];
      }
      case 8:
        return "if " + Bool(1) + " then " + Instruction(depth - 1) + " else " +
               Instruction(depth - 1) + " fi";
      case 9: {
        static const char* kErrors[] = {
            "division-by-zero", "overflow", "yoke-not-satisfied",
            "no-coherence", "number-expected", "empty-list",
            "index-out-of-range", "attribute-missing", "attribute-exists",
            "parameter-type-mismatch"};
        return "if '" + std::string(kErrors[Pick(std::size(kErrors))]) +
               "' then " + Instruction(depth - 1) + " fi";
      }
      case 10: {
        // One counter per nesting level, so inner loops cannot reset outer
        // ones.
        std::string k = depth > 1 ? "k" : "j";
        return k + " := 0 ; while " + k + " < " + std::to_string(Pick(4)) +
               " do " + Instruction(depth - 1) + " ; " + k + " := " + k +
               " + 1 od";
      }
      default:
        return Instruction(depth - 1) + " ; " + Instruction(depth - 1);
    }
  }

  std::string Yoke() {
    static const char* kYokes[] = {
        "yoke n := it > -50",        "yoke n := it < 1000",
        "yoke m := it >= 0",         "yoke w := word",
        "yoke r := record.a < 50",   "yoke l := all-list it < 500 ee",
        "yoke b := TT",              "yoke n := it + 1",
        "yoke k := it < 10"};
    return kYokes[Pick(std::size(kYokes))];
  }

  std::string Num(int d) {
    if (d <= 0 || Chance(0.3)) {
      static const char* kLeaves[] = {"0", "1", "7", "-3", "2.5", "99",
                                      "n", "m", "k", "r.a", "top (l)",
                                      "twice(n)", "twice(m)", "w"};
      return kLeaves[Pick(std::size(kLeaves))];
    }
    static const char* kOps[] = {" + ", " - ", " * ", " / "};
    return "(" + Num(d - 1) + kOps[Pick(4)] + Num(d - 1) + ")";
  }

  std::string Bool(int d) {
    if (d <= 0 || Chance(0.3)) {
      static const char* kLeaves[] = {"true", "false", "b", "n < m",
                                      "w = 'a'", "r.a >= 1", "k <> 0", "n"};
      return kLeaves[Pick(std::size(kLeaves))];
    }
    switch (Pick(3)) {
      case 0: return "(" + Bool(d - 1) + " and " + Bool(d - 1) + ")";
      case 1: return "(" + Bool(d - 1) + " or " + Bool(d - 1) + ")";
      default: return "not (" + Bool(d - 1) + ")";
    }
  }

  std::string Wrd(int d) {
    if (d <= 0 || Chance(0.4)) {
      static const char* kLeaves[] = {"'a'", "'bc'", "w", "ar[1]", "ar[2]",
                                      "n"};
      return kLeaves[Pick(std::size(kLeaves))];
    }
    return Wrd(d - 1) + " glue " + Wrd(d - 1);
  }

  std::string Lst(int d) {
    switch (Pick(3)) {
      case 0: return "list " + Num(d - 1) + " ee";
      case 1: return "push " + Num(d - 1) + " on l ee";
      default: return "l";
    }
  }

  std::string Rec(int d) {
    switch (Pick(4)) {
      case 0: return "record a as " + Num(d - 1) + " ee";
      case 1: return "expand-record r at c by " + Num(d - 1) + " ee";
      case 2: return "remove-attr r at c ee";
      default: return "record c as " + Num(d - 1) + " ee";
    }
  }

  std::string Arr(int d) {
    switch (Pick(3)) {
      case 0: return "array [" + Wrd(d - 1) + ", " + Wrd(d - 1) + "]";
      case 1: return "add-to-arr ar new " + Wrd(d - 1) + " ee";
      default: return "array " + Num(d - 1) + " ee";
    }
  }

  bool Chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  size_t Pick(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng_);
  }

  std::mt19937_64 rng_;
};

}  // namespace lingua::testing

#endif  // LINGUA_TESTS_GENERATORS_H_
