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

#include "lingua/mccarthy.h"

#include <gtest/gtest.h>

namespace lingua {
namespace {

constexpr TriBool tt = TriBool::kTrue;
constexpr TriBool ff = TriBool::kFalse;
constexpr TriBool ee = TriBool::kError;

static_assert(AndM(ff, ee) == ff);
static_assert(OrM(tt, ee) == tt);

TEST(McCarthyTest, Examples) {
  EXPECT_EQ(AndM(ff, ee), ff);
  EXPECT_EQ(AndM(ee, ff), ee);
  EXPECT_EQ(AndM(tt, tt), tt);
  EXPECT_EQ(OrM(tt, ee), tt);
  EXPECT_EQ(OrM(ee, tt), ee);
  EXPECT_EQ(OrM(ff, ff), ff);
  EXPECT_EQ(NotM(tt), ff);
  EXPECT_EQ(NotM(ff), tt);
  EXPECT_EQ(NotM(ee), ee);
}

TEST(McCarthyTest, Implication) {
  EXPECT_EQ(ImpliesM(ff, ee), tt);
  EXPECT_EQ(ImpliesM(tt, ff), ff);
  EXPECT_EQ(ImpliesM(ee, tt), ee);
  for (TriBool p : kAllTriBools) {
    for (TriBool q : kAllTriBools) EXPECT_EQ(ImpliesM(p, q), OrM(NotM(p), q));
  }
}

TEST(McCarthyTest, ClassicalOnClassicalValues) {
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      EXPECT_EQ(AndM(FromBool(a), FromBool(b)), FromBool(a && b));
      EXPECT_EQ(OrM(FromBool(a), FromBool(b)), FromBool(a || b));
    }
  }
}

TEST(McCarthyTest, ExcludedMiddleNeverFalseContradictionNeverTrue) {
  for (TriBool p : kAllTriBools) {
    EXPECT_NE(OrM(p, NotM(p)), ff);
    EXPECT_NE(AndM(p, NotM(p)), tt);
  }
  EXPECT_EQ(OrM(ee, NotM(ee)), ee);
}

TEST(McCarthyTest, DecidedByLeftArgument) {
  for (TriBool p : kAllTriBools) {
    bool and_ignores_q = AndM(p, tt) == AndM(p, ff) && AndM(p, ff) == AndM(p, ee);
    bool or_ignores_q = OrM(p, tt) == OrM(p, ff) && OrM(p, ff) == OrM(p, ee);
    EXPECT_EQ(AndDecidedBy(p), and_ignores_q);
    EXPECT_EQ(OrDecidedBy(p), or_ignores_q);
  }
}

TEST(McCarthyTest, AssociativeAndDeMorgan) {
  for (TriBool p : kAllTriBools) {
    for (TriBool q : kAllTriBools) {
      EXPECT_EQ(NotM(AndM(p, q)), OrM(NotM(p), NotM(q)));
      EXPECT_EQ(NotM(OrM(p, q)), AndM(NotM(p), NotM(q)));
      for (TriBool s : kAllTriBools) {
        EXPECT_EQ(AndM(p, AndM(q, s)), AndM(AndM(p, q), s));
        EXPECT_EQ(OrM(p, OrM(q, s)), OrM(OrM(p, q), s));
        EXPECT_EQ(AndM(p, OrM(q, s)), OrM(AndM(p, q), AndM(p, s)));
      }
    }
  }
}

TEST(McCarthyTest, NotCommutativeNorLeftDistributive) {
  EXPECT_NE(AndM(ff, ee), AndM(ee, ff));
  EXPECT_NE(OrM(tt, ee), OrM(ee, tt));
  EXPECT_EQ(AndM(OrM(tt, ee), ff), ff);
  EXPECT_EQ(OrM(AndM(tt, ff), AndM(ee, ff)), ee);
}

TEST(McCarthyTest, Names) {
  EXPECT_EQ(ToString(tt), "tt");
  EXPECT_EQ(ToString(ff), "ff");
  EXPECT_EQ(ToString(ee), "ee");
}

}  // namespace
}  // namespace lingua
