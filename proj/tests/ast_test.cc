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

#include "lingua/ast.h"

#include <gtest/gtest.h>

#include "generators.h"
#include "lingua/syntax.h"

namespace lingua {
namespace {

DatExp Id(const char* name) { return dat::Ident{name}; }

TEST(AstTest, PrettyIsFullyParenthesized) {
  DatExp e = dat::Arith{ArithOp::kAdd, Id("x"),
                        DatExp(dat::Arith{ArithOp::kAdd, Id("y"), Id("z")})};
  EXPECT_EQ(Pretty(e), "(x + (y + z))");
  DatExp f = dat::Arith{ArithOp::kAdd,
                        DatExp(dat::Arith{ArithOp::kAdd, Id("x"), Id("y")}),
                        Id("z")};
  EXPECT_EQ(Pretty(f), "((x + y) + z)");
  EXPECT_FALSE(AstEqual(e, f));
  EXPECT_TRUE(AstEqual(e, e));
}

TEST(AstTest, DumpForms) {
  Instruction assign = ins::Assign{
      "x", DatExp(dat::Arith{ArithOp::kAdd, Id("y"),
                             DatExp(dat::NumLit{Decimal(1)})})};
  EXPECT_EQ(DumpAst(assign), "(assign x (arith + (ide y) (num 1)))");
  EXPECT_EQ(DumpAst(ParseDatExp("r.a[2]", SyntaxMode::kColloquial)),
            "(index (select (ide r) a) (num 2))");
  EXPECT_EQ(DumpAst(ParseTraExp("all-list it < 3 ee", SyntaxMode::kColloquial)),
            "(all-list (compare < (current) (num 3)))");
  EXPECT_EQ(DumpAst(ParseInstruction("if 'overflow' then skip fi",
                                     SyntaxMode::kStrict)),
            "(error-handler (word 'overflow') (skip))");
}

TEST(AstTest, PrettyParsesBackForRandomTrees) {
  testing::AstGenerator gen(7);
  for (int i = 0; i < 200; ++i) {
    DatExp d = gen.Dat(4);
    EXPECT_EQ(ParseDatExp(Pretty(d), SyntaxMode::kStrict), d) << Pretty(d);
    TypExp t = gen.Typ(3);
    EXPECT_EQ(ParseTypExp(Pretty(t), SyntaxMode::kStrict), t) << Pretty(t);
    Instruction in = gen.Ins(3);
    EXPECT_EQ(ParseInstruction(Pretty(in), SyntaxMode::kStrict), in)
        << Pretty(in);
  }
}

TEST(AstTest, PrettyIsStableUnderReparse) {
  testing::AstGenerator gen(11);
  for (int i = 0; i < 100; ++i) {
    std::string text = Pretty(gen.Prog(3));
    EXPECT_EQ(Pretty(ParseProgram(text, SyntaxMode::kStrict)), text);
  }
}

}  // namespace
}  // namespace lingua
