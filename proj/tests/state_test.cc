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

#include "lingua/state.h"

#include <gtest/gtest.h>

#include "lingua/semantics.h"
#include "lingua/syntax.h"

namespace lingua {
namespace {

Type NumberType() { return {Body::Number(), Transfer::True()}; }

TEST(StateTest, InitialStateIsClean) {
  State s = InitialState();
  EXPECT_FALSE(IsError(s));
  EXPECT_EQ(LookupVar(s, "x"), nullptr);
  EXPECT_EQ(LookupType(s, "T"), nullptr);
  EXPECT_EQ(LookupProc(s, "p"), nullptr);
  EXPECT_EQ(DumpState(s), "register: OK\n");
}

TEST(StateTest, InsertErrorTouchesOnlyTheRegister) {
  State s = DeclareVar(InitialState(), "x", NumberType());
  State e = InsertError(s, MakeError("overflow"));
  EXPECT_TRUE(IsError(e));
  EXPECT_EQ(e.env, s.env);
  EXPECT_EQ(e.store.valuation, s.store.valuation);
  State twice = InsertError(e, MakeError("division-by-zero"));
  EXPECT_EQ(twice.store.error, MakeError("division-by-zero"));
}

TEST(StateTest, DeclareTwiceIsNotFree) {
  State s = DeclareVar(InitialState(), "x", NumberType());
  ASSERT_FALSE(IsError(s));
  const Value* x = LookupVar(s, "x");
  ASSERT_NE(x, nullptr);
  EXPECT_TRUE(x->is_pseudo());
  EXPECT_EQ(x->type, NumberType());
  State again = DeclareVar(s, "x", NumberType());
  EXPECT_EQ(again.store.error, MakeError(err::kIdentifierNotFree));
}

TEST(StateTest, ReservedWordsAreNeverBound) {
  EXPECT_EQ(DeclareVar(InitialState(), "while", NumberType()).store.error,
            MakeError(err::kIdentifierNotFree));
  EXPECT_EQ(BindType(InitialState(), "number", NumberType()).store.error,
            MakeError(err::kIdentifierNotFree));
}

TEST(StateTest, TypesBindOnce) {
  State s = BindType(InitialState(), "T", NumberType());
  ASSERT_NE(LookupType(s, "T"), nullptr);
  EXPECT_EQ(*LookupType(s, "T"), NumberType());
  EXPECT_EQ(BindType(s, "T", NumberType()).store.error,
            MakeError(err::kIdentifierNotFree));
}

TEST(StateTest, DumpFormat) {
  State s = DeclareVar(InitialState(), "x", NumberType());
  s = DeclareVar(s, "w", {Body::Word(), Transfer::True()});
  s.store.valuation.Set(
      "x", Value{Data::Number(Decimal(7)), NumberType()});
  EXPECT_EQ(DumpState(s),
            "x : number = 7\n"
            "w : word = Ω\n"
            "register: OK\n");
  EXPECT_EQ(DumpState(InsertError(s, MakeError("overflow"))),
            "x : number = 7\n"
            "w : word = Ω\n"
            "register: overflow\n");
}

TEST(StateTest, CopiesAreIndependent) {
  State a = DeclareVar(InitialState(), "x", NumberType());
  State b = a;
  b = DeclareVar(b, "y", NumberType());
  EXPECT_EQ(LookupVar(a, "y"), nullptr);
  EXPECT_NE(LookupVar(b, "y"), nullptr);
}

TEST(StateTest, SkipProgramLeavesStateAlone) {
  Program prog = ParseProgram("begin-program skip ; skip end-program",
                              SyntaxMode::kStrict);
  Fuel fuel(100);
  Outcome out = Interpreter().Run(prog, fuel);
  ASSERT_FALSE(IsOutOfFuel(out));
  EXPECT_EQ(std::get<State>(out), InitialState());
}

TEST(StateTest, AuditFlagsBrokenValues) {
  Limits limits;
  State s = DeclareVar(InitialState(), "x", NumberType());
  EXPECT_TRUE(AuditStoredValues(s, limits).empty());
  Type negative{Body::Number(),
                Transfer(ParseTraExp("it < 0", SyntaxMode::kColloquial))};
  s.store.valuation.Set("y", Value{Data::Number(Decimal(5)), negative});
  EXPECT_EQ(AuditStoredValues(s, limits).size(), 1u);
}

}  // namespace
}  // namespace lingua
