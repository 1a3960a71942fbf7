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

#include "lingua/semantics.h"

#include <gtest/gtest.h>

#include <string>

#include "lingua/syntax.h"

namespace lingua {
namespace {

constexpr uint64_t kFuel = 100000;

State RunSource(std::string_view source, Limits limits = {}) {
  Fuel fuel(kFuel);
  Outcome out = Interpreter(limits).Run(
      ParseProgram(source, SyntaxMode::kColloquial), fuel);
  EXPECT_FALSE(IsOutOfFuel(out)) << source;
  return IsOutOfFuel(out) ? InitialState() : std::get<State>(out);
}

std::string Register(const State& s) {
  return s.store.error ? s.store.error->word : "OK";
}

std::string ValueOf(const State& s, const char* name) {
  const Value* v = LookupVar(s, name);
  if (v == nullptr) return "<unbound>";
  if (v->is_pseudo()) return "Ω";
  return ToString(*v->content);
}

std::string Eval(std::string_view text, const State& s = InitialState(),
                 Limits limits = {}) {
  Fuel fuel(kFuel);
  ExpOutcome out = Interpreter(limits).EvalDataExp(
      ParseDatExp(text, SyntaxMode::kColloquial), s, fuel);
  if (IsOutOfFuel(out)) return "out-of-fuel";
  return ToString(std::get<CompositeOrError>(out));
}

std::string Prog(std::string_view body) {
  return "begin-program " + std::string(body) + " end-program";
}

TEST(EvalTest, Examples) {
  EXPECT_EQ(Eval("(1 + (1 + 0))"), "(2, number)");
  EXPECT_EQ(Eval("1 / 0"), "error: division-by-zero");
  EXPECT_EQ(Eval("x"), "error: identifier-not-declared");
  EXPECT_EQ(Eval("if 1 < 2 then 'a' else 'b' fi"), "('a', word)");
  EXPECT_EQ(Eval("if 1 then 'a' else 'b' fi"), "error: boolean-expected");
  EXPECT_EQ(Eval("not (1 = 1)"), "(false, boolean)");
  EXPECT_EQ(Eval("'ab' glue 'c'"), "('abc', word)");
}

TEST(EvalTest, ErrorStateWins) {
  State s = InsertError(InitialState(), MakeError("overflow"));
  EXPECT_EQ(Eval("1 + 1", s), "error: overflow");
  EXPECT_EQ(Eval("true or false", s), "error: overflow");
}

TEST(EvalTest, LogicalOperatorsAreLazy) {
  State s = RunSource(Prog("let x be number tel ; x := 0"));
  EXPECT_EQ(Eval("x <> 0 and 1 / x < 10", s), "(false, boolean)");
  EXPECT_EQ(Eval("x = 0 or 1 / x < 10", s), "(true, boolean)");
  EXPECT_EQ(Eval("x = 0 and 1 / x < 10", s), "error: division-by-zero");
  EXPECT_EQ(Eval("1 and true", s), "error: boolean-expected");
  EXPECT_EQ(Eval("false and 1", s), "(false, boolean)");
  EXPECT_EQ(Eval("true and 1", s), "error: boolean-expected");
}

TEST(EvalTest, UninitializedVariable) {
  State s = RunSource(Prog("let x be number tel ; skip"));
  EXPECT_EQ(Eval("x", s), "error: variable-not-initialized");
}

TEST(EvalTest, OverflowOrderMatters) {
  Limits small;
  small.max_magnitude = Decimal(10);
  EXPECT_EQ(Eval("(-4 + (10 + 3))", InitialState(), small), "error: overflow");
  EXPECT_EQ(Eval("((-4 + 10) + 3)", InitialState(), small), "(9, number)");
  EXPECT_EQ(Eval("-4 + 10 + 3", InitialState(), small), "(9, number)");
}

TEST(TypeTest, Examples) {
  Interpreter interp;
  State s = InitialState();
  auto type = [&](std::string_view text, const State& st) {
    TypeOrError t =
        interp.EvalTypeExp(ParseTypExp(text, SyntaxMode::kColloquial), st);
    return std::holds_alternative<AbstractError>(t)
               ? "error: " + std::get<AbstractError>(t).word
               : ToString(std::get<Type>(t));
  };
  EXPECT_EQ(type("number", s), "number");
  EXPECT_EQ(type("T", s), "error: type-not-defined");
  EXPECT_EQ(type("record-type price as number ee", s),
            "record-type price as number ee");
  EXPECT_EQ(type("list-type word ee", s), "list-type word ee");
  EXPECT_EQ(type("expand-record-type number at a by number ee", s),
            "error: record-type-expected");
  EXPECT_EQ(type("expand-record-type record-type a as number ee at a by "
                 "word ee",
                 s),
            "error: attribute-exists");
  TypeOrError yoked = interp.EvalTypeExp(
      ParseTypExp("replace-transfer-in number by it < 10 ee",
                  SyntaxMode::kColloquial),
      s);
  ASSERT_TRUE(std::holds_alternative<Type>(yoked));
  EXPECT_FALSE(std::get<Type>(yoked).transfer.is_true());
  EXPECT_EQ(std::get<Type>(yoked).body, Body::Number());
}

TEST(AssignTest, NineSteps) {
  EXPECT_EQ(Register(RunSource(Prog("skip ; x := 1"))), "identifier-not-declared");
  State yoked = RunSource(Prog(
      "let x be replace-transfer-in number by it < 10 ee tel ; x := 20"));
  EXPECT_EQ(Register(yoked), "yoke-not-satisfied");
  EXPECT_EQ(ValueOf(yoked, "x"), "Ω");

  State ok = RunSource(Prog(
      "let x be replace-transfer-in number by it < 10 ee tel ; x := 5"));
  EXPECT_EQ(Register(ok), "OK");
  EXPECT_EQ(ValueOf(ok, "x"), "5");

  EXPECT_EQ(Register(RunSource(Prog("let x be number tel ; x := 'a'"))),
            "no-coherence");
  EXPECT_EQ(Register(RunSource(Prog(
                "let x be replace-transfer-in number by 1 ee tel ; x := 1"))),
            "a-yoke-expected");
  EXPECT_EQ(Register(RunSource(Prog("let x be number tel ; x := 1 / 0"))),
            "division-by-zero");
}

TEST(AssignTest, RecordBodiesGrowByOneAttribute) {
  State s = RunSource(Prog(
      "let r be record-type a as number ee tel ; "
      "r := record a as 1 ee ; "
      "r := expand-record r at b by 'w' ee"));
  ASSERT_EQ(Register(s), "OK");
  const Value* r = LookupVar(s, "r");
  ASSERT_NE(r, nullptr);
  EXPECT_NE(r->type.body.field("b"), nullptr);
  EXPECT_TRUE(r->type.transfer.is_true());

  State jump = RunSource(Prog(
      "let r be record-type a as number ee tel ; "
      "r := record a as 1 ee ; "
      "r := expand-record expand-record r at b by 1 ee at c by 2 ee"));
  EXPECT_EQ(Register(jump), "no-coherence");
}

TEST(InstructionTest, ErrorStatesPassThrough) {
  State s = RunSource(Prog("let x be number tel ; x := 1 / 0 ; x := 2"));
  EXPECT_EQ(Register(s), "division-by-zero");
  EXPECT_EQ(ValueOf(s, "x"), "Ω");
}

TEST(InstructionTest, ErrorHandler) {
  State caught = RunSource(Prog(
      "let x be number tel ; x := 1 / 0 ; "
      "if 'division-by-zero' then x := 7 fi"));
  EXPECT_EQ(Register(caught), "OK");
  EXPECT_EQ(ValueOf(caught, "x"), "7");

  State missed = RunSource(Prog(
      "let x be number tel ; x := 1 / 0 ; if 'overflow' then x := 7 fi"));
  EXPECT_EQ(Register(missed), "division-by-zero");

  State idle = RunSource(Prog(
      "let x be number tel ; x := 1 ; if 'overflow' then x := 7 fi"));
  EXPECT_EQ(ValueOf(idle, "x"), "1");
}

TEST(InstructionTest, YokeReplace) {
  State s = RunSource(Prog("let x be number tel ; x := 5 ; yoke x := it < 10"));
  EXPECT_EQ(Register(s), "OK");
  EXPECT_EQ(Register(RunSource(Prog("let x be number tel ; x := 5 ; "
                              "yoke x := it < 3"))),
            "yoke-not-satisfied");
  EXPECT_EQ(Register(RunSource(Prog("let x be number tel ; x := 5 ; "
                              "yoke x := it < 10 ; x := 12"))),
            "yoke-not-satisfied");
}

TEST(InstructionTest, ConditionsAndLoops) {
  State s = RunSource(Prog(
      "let i be number tel ; let t be number tel ; i := 0 ; t := 0 ; "
      "while i < 5 do i := i + 1 ; t := t + i od"));
  EXPECT_EQ(ValueOf(s, "t"), "15");
  EXPECT_EQ(Register(RunSource(Prog("let i be number tel ; "
                              "while i < 5 do skip od"))),
            "variable-not-initialized");
  EXPECT_EQ(Register(RunSource(Prog("if 1 then skip else skip fi"))),
            "boolean-expected");

  Fuel fuel(500);
  Outcome out = Interpreter().Run(
      ParseProgram(Prog("skip ; while true do skip od"),
                   SyntaxMode::kColloquial),
      fuel);
  ASSERT_TRUE(IsOutOfFuel(out));
  EXPECT_EQ(std::get<OutOfFuel>(out).steps, 500u);
}

TEST(DeclarationTest, Examples) {
  EXPECT_EQ(Register(RunSource(Prog(
                "let x be number tel ; let x be number tel ; skip"))),
            "identifier-not-free");
  EXPECT_EQ(Register(RunSource(Prog("let x be U tel ; skip"))), "type-not-defined");
  State s = RunSource(Prog(
      "set T as record-type a as number ee tes ; let x be T tel ; skip"));
  ASSERT_EQ(Register(s), "OK");
  const Value* x = LookupVar(s, "x");
  ASSERT_NE(x, nullptr);
  EXPECT_TRUE(x->is_pseudo());
  EXPECT_EQ(x->type, *LookupType(s, "T"));
  EXPECT_EQ(Register(RunSource(Prog("set T as number tes ; set T as word tes ; "
                              "skip"))),
            "identifier-not-free");
}

TEST(ProcedureTest, Factorial) {
  State s = RunSource(
      "begin-program "
      "proc fact (ref r as number val n as number) begin-program "
      "  let m be number tel ; "
      "  if n = 0 then r := 1 "
      "  else m := n - 1 ; call fact (ref r val m) ; r := r * n fi "
      "end-program end proc ; "
      "let x be number tel ; let n be number tel ; n := 5 ; "
      "call fact (ref x val n) "
      "end-program");
  EXPECT_EQ(Register(s), "OK");
  EXPECT_EQ(ValueOf(s, "x"), "120");
  EXPECT_EQ(ValueOf(s, "n"), "5");
}

TEST(ProcedureTest, NoGlobalVariables) {
  State s = RunSource(
      "begin-program let g be number tel ; "
      "proc p (ref r as number) r := g end proc ; "
      "let x be number tel ; g := 1 ; call p (ref x) "
      "end-program");
  EXPECT_EQ(Register(s), "identifier-not-declared");
}

TEST(ProcedureTest, LaterDeclarationsAreInvisible) {
  State s = RunSource(
      "begin-program "
      "proc p (ref r as number) begin-program let y be T tel ; r := 1 "
      "end-program end proc ; "
      "set T as number tes ; let x be number tel ; call p (ref x) "
      "end-program");
  EXPECT_EQ(Register(s), "type-not-defined");
}

TEST(ProcedureTest, CallErrors) {
  EXPECT_EQ(Register(RunSource(Prog("let x be number tel ; call q (ref x)"))),
            "procedure-not-declared");
  const char* decl =
      "proc p (ref r as number val n as number) r := n end proc ; "
      "let x be number tel ; let w be word tel ; w := 'a' ; ";
  EXPECT_EQ(Register(RunSource(Prog(std::string(decl) + "call p (ref x)"))),
            "parameter-list-mismatch");
  EXPECT_EQ(Register(RunSource(Prog(std::string(decl) + "call p (ref x val w)"))),
            "parameter-type-mismatch");
  EXPECT_EQ(Register(RunSource(Prog(
                "proc p (ref r as number) skip end proc ; "
                "proc p (ref r as number) skip end proc ; skip"))),
            "identifier-not-free");
}

TEST(ProcedureTest, RefReturnKeepsCallerYoke) {
  State s = RunSource(Prog(
      "proc p (ref r as number) r := 50 end proc ; "
      "let x be replace-transfer-in number by it < 10 ee tel ; x := 1 ; "
      "call p (ref x)"));
  EXPECT_EQ(Register(s), "yoke-not-satisfied");
  EXPECT_EQ(ValueOf(s, "x"), "1");
}

TEST(ProcedureTest, LocalErrorsReachTheCaller) {
  State s = RunSource(Prog(
      "proc p (ref r as number) r := 1 / 0 end proc ; "
      "let x be number tel ; x := 3 ; call p (ref x)"));
  EXPECT_EQ(Register(s), "division-by-zero");
  EXPECT_EQ(ValueOf(s, "x"), "3");
}

TEST(ProcedureTest, MutualRecursion) {
  State s = RunSource(
      "begin-program begin multiproc "
      "proc even (ref r as boolean val n as number) begin-program "
      "  let m be number tel ; "
      "  if n = 0 then r := true else m := n - 1 ; call odd (ref r val m) fi "
      "end-program end proc ; "
      "proc odd (ref r as boolean val n as number) begin-program "
      "  let m be number tel ; "
      "  if n = 0 then r := false else m := n - 1 ; call even (ref r val m) fi "
      "end-program end proc end multiproc ; "
      "let b be boolean tel ; let k be number tel ; k := 7 ; "
      "call even (ref b val k) end-program");
  EXPECT_EQ(Register(s), "OK");
  EXPECT_EQ(ValueOf(s, "b"), "false");
}

TEST(FunctionTest, Examples) {
  const char* sq =
      "fun sq (val x as number) skip return x * x as number ; "
      "let y be number tel ; let three be number tel ; three := 3 ; ";
  EXPECT_EQ(ValueOf(RunSource(Prog(std::string(sq) + "y := sq (three)")), "y"), "9");
  State bad = RunSource(Prog(
      "fun neg (val x as number) skip return x as "
      "replace-transfer-in number by it < 0 ee ; "
      "let y be number tel ; let one be number tel ; one := 1 ; "
      "y := neg (one)"));
  EXPECT_EQ(Register(bad), "result-type-mismatch");
}

TEST(FunctionTest, CallerStateIsUntouched) {
  State s = RunSource(Prog(
      "fun f (val x as number) begin-program let z be number tel ; "
      "z := x end-program return z + 1 as number ; "
      "let a be number tel ; a := 4"));
  Interpreter interp;
  Fuel fuel(kFuel);
  State before = s;
  ExpOutcome out = interp.CallFunctional("f", {"a"}, s, fuel);
  ASSERT_FALSE(IsOutOfFuel(out));
  EXPECT_EQ(ToString(std::get<CompositeOrError>(out)), "(5, number)");
  EXPECT_EQ(s, before);
}

TEST(FunctionTest, DivergentBodyRunsOutOfFuel) {
  State s = RunSource(Prog(
      "fun f (val x as number) while true do skip od "
      "return x as number ; "
      "let a be number tel ; a := 4"));
  Fuel fuel(1000);
  EXPECT_TRUE(IsOutOfFuel(Interpreter().CallFunctional("f", {"a"}, s, fuel)));
}

TEST(ProgramTest, Composition) {
  EXPECT_EQ(RunSource("begin-program skip ; skip end-program"), InitialState());
  State s = RunSource(Prog("let x be number tel ; x := 1"));
  EXPECT_EQ(ValueOf(s, "x"), "1");
  EXPECT_EQ(Register(RunSource(Prog("skip ; y := 1"))), "identifier-not-declared");
}

TEST(ProgramTest, Deterministic) {
  const char* src =
      "begin-program let x be number tel ; x := 1 ; "
      "while x < 100 do x := x * 3 od end-program";
  EXPECT_EQ(RunSource(src), RunSource(src));
  EXPECT_EQ(ValueOf(RunSource(src), "x"), "243");
}

}  // namespace
}  // namespace lingua
