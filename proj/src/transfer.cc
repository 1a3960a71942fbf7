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

#include <variant>

#include "lingua/domains.h"
#include "lingua/mccarthy.h"

namespace lingua {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Classifies a transfer result for the McCarthy connectives. Non-boolean
// composites count as errors ('boolean-expected').
struct Truth {
  TriBool value;
  std::optional<AbstractError> error;
};

Truth Classify(const CompositeOrError& r) {
  if (const auto* e = std::get_if<AbstractError>(&r)) {
    return {TriBool::kError, *e};
  }
  auto b = AsBoolean(std::get<Composite>(r));
  if (!b) return {TriBool::kError, MakeError(err::kBooleanExpected)};
  return {FromBool(*b), std::nullopt};
}

class Applier {
 public:
  Applier(const Composite& current, const Limits& limits)
      : current_(current), limits_(limits) {}

  CompositeOrError operator()(const TraExp& e) const {
    return std::visit(*this, e.node);
  }

  CompositeOrError operator()(const tra::BoolConst& n) const {
    return BooComposite(n.value);
  }
  CompositeOrError operator()(const tra::NumConst& n) const {
    return NumberLiteral(n.value, limits_);
  }
  CompositeOrError operator()(const tra::WordConst& n) const {
    return WordLiteral(n.value, limits_);
  }
  CompositeOrError operator()(const tra::Current&) const { return current_; }
  CompositeOrError operator()(const tra::Attr& n) const {
    return RecordSelect(current_, n.attribute);
  }
  CompositeOrError operator()(const tra::Arith& n) const {
    CompositeOrError lhs = (*this)(*n.lhs);
    CompositeOrError rhs = (*this)(*n.rhs);
    return CompArith(n.op, lhs, rhs, limits_);
  }
  CompositeOrError operator()(const tra::Compare& n) const {
    CompositeOrError lhs = (*this)(*n.lhs);
    CompositeOrError rhs = (*this)(*n.rhs);
    return CompCompare(n.op, lhs, rhs);
  }
  CompositeOrError operator()(const tra::Logical& n) const {
    Truth left = Classify((*this)(*n.lhs));
    bool decided = n.op == LogicalOp::kAnd ? AndDecidedBy(left.value)
                                           : OrDecidedBy(left.value);
    if (decided) {
      if (left.error) return *left.error;
      return BooComposite(left.value == TriBool::kTrue);
    }
    Truth right = Classify((*this)(*n.rhs));
    if (right.error) return *right.error;
    TriBool v = n.op == LogicalOp::kAnd ? AndM(left.value, right.value)
                                        : OrM(left.value, right.value);
    return BooComposite(v == TriBool::kTrue);
  }
  CompositeOrError operator()(const tra::Not& n) const {
    Truth t = Classify((*this)(*n.operand));
    if (t.error) return *t.error;
    return BooComposite(NotM(t.value) == TriBool::kTrue);
  }
  CompositeOrError operator()(const tra::BodyTest& n) const {
    return BooComposite(current_.body() == Body::Simple(n.kind));
  }
  CompositeOrError operator()(const tra::AllList& n) const {
    if (current_.body().kind() != Body::Kind::kList) {
      return MakeError(err::kListExpected);
    }
    const Body& element_body = current_.body().element();
    std::vector<CompositeOrError> results;
    results.reserve(current_.data().elements().size());
    for (const Data& d : current_.data().elements()) {
      Applier inner(Composite::Unchecked(d, element_body), limits_);
      results.push_back(inner(*n.inner));
    }
    for (const auto& r : results) {
      if (const auto* e = std::get_if<AbstractError>(&r)) return *e;
    }
    bool all_true = true;
    for (const auto& r : results) {
      auto b = AsBoolean(std::get<Composite>(r));
      if (!b) return MakeError(err::kAYokeExpected);
      all_true = all_true && *b;
    }
    return BooComposite(all_true);
  }
  CompositeOrError operator()(const tra::Truth&) const {
    return BooComposite(true);
  }

 private:
  const Composite& current_;
  const Limits& limits_;
};

}  // namespace

Transfer Transfer::True() { return Transfer(TraExp(tra::Truth{})); }

bool Transfer::is_true() const {
  return std::holds_alternative<tra::Truth>(expression_->node);
}

CompositeOrError Transfer::Apply(const CompositeOrError& input,
                                 const Limits& limits) const {
  if (const auto* e = std::get_if<AbstractError>(&input)) return *e;
  Applier applier(std::get<Composite>(input), limits);
  return applier(*expression_);
}

}  // namespace lingua
