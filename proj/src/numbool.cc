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

#include "lingua/algebra.h"

namespace lingua::algebra {
namespace {

// The unique homomorphism from NumBoolExp into NumBool, one function per
// carrier.
class NumBoolEvaluator {
 public:
  explicit NumBoolEvaluator(std::string_view term) : s_(term) {}

  NumBoolValue Run() {
    NumBoolValue v = Term();
    if (i_ != s_.size()) Fail();
    return v;
  }

 private:
  [[noreturn]] void Fail() const {
    throw AlgebraError(0, "malformed-term at offset " + std::to_string(i_));
  }

  bool Accept(std::string_view token) {
    if (s_.substr(i_, token.size()) != token) return false;
    i_ += token.size();
    return true;
  }
  void Expect(char c) {
    if (i_ >= s_.size() || s_[i_] != c) Fail();
    ++i_;
  }

  BigInt Num() {
    NumBoolValue v = Term();
    if (auto* n = std::get_if<BigInt>(&v)) return *n;
    Fail();
  }
  bool Bool() {
    NumBoolValue v = Term();
    if (auto* b = std::get_if<bool>(&v)) return *b;
    Fail();
  }

  NumBoolValue Term() {
    // Order matters only where one constructor name is a prefix of another.
    if (Accept("0")) return BigInt(0);
    if (Accept("1")) return BigInt(1);
    if (Accept("tt")) return true;
    if (Accept("ff")) return false;
    if (Accept("not(")) {
      bool b = Bool();
      Expect(')');
      return !b;
    }
    if (Accept("or(")) {
      bool a = Bool();
      Expect(',');
      bool b = Bool();
      Expect(')');
      return a || b;
    }
    for (char op : {'+', '=', '<'}) {
      if (i_ + 1 < s_.size() && s_[i_] == op && s_[i_ + 1] == '(') {
        i_ += 2;
        BigInt a = Num();
        Expect(',');
        BigInt b = Num();
        Expect(')');
        if (op == '+') return BigInt(a + b);
        if (op == '=') return a == b;
        return a < b;
      }
    }
    Fail();
  }

  std::string_view s_;
  size_t i_ = 0;
};

}  // namespace

NumBoolValue EvalNumBool(std::string_view term) {
  return NumBoolEvaluator(term).Run();
}

}  // namespace lingua::algebra
