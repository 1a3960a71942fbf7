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

#include "lingua/domains.h"

#include <algorithm>
#include <stdexcept>

namespace lingua {

// --- Body ------------------------------------------------------------------

struct Body::Rep {
  Kind kind;
  std::optional<Body> element;
  Fields fields;
};

namespace {

template <class Fields>
void SortAndCheckFields(Fields& fields) {
  std::sort(fields.begin(), fields.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < fields.size(); ++i) {
    if (fields[i - 1].first == fields[i].first) {
      throw std::invalid_argument("duplicate record attribute '" +
                                  fields[i].first + "'");
    }
  }
}

template <class Fields>
auto FindField(const Fields& fields, std::string_view attribute)
    -> decltype(&fields.front().second) {
  auto it = std::lower_bound(
      fields.begin(), fields.end(), attribute,
      [](const auto& f, std::string_view a) { return f.first < a; });
  if (it == fields.end() || it->first != attribute) return nullptr;
  return &it->second;
}

}  // namespace

Body Body::Boolean() {
  static const auto rep = std::make_shared<const Rep>(Rep{Kind::kBoolean, {}, {}});
  return Body(rep);
}

Body Body::Number() {
  static const auto rep = std::make_shared<const Rep>(Rep{Kind::kNumber, {}, {}});
  return Body(rep);
}

Body Body::Word() {
  static const auto rep = std::make_shared<const Rep>(Rep{Kind::kWord, {}, {}});
  return Body(rep);
}

Body Body::Simple(SimpleKind kind) {
  switch (kind) {
    case SimpleKind::kBoolean: return Boolean();
    case SimpleKind::kNumber: return Number();
    case SimpleKind::kWord: return Word();
  }
  return Number();
}

Body Body::List(Body element) {
  return Body(std::make_shared<const Rep>(Rep{Kind::kList, std::move(element), {}}));
}

Body Body::Array(Body element) {
  return Body(std::make_shared<const Rep>(Rep{Kind::kArray, std::move(element), {}}));
}

Body Body::Record(Fields fields) {
  SortAndCheckFields(fields);
  return Body(std::make_shared<const Rep>(Rep{Kind::kRecord, std::nullopt, std::move(fields)}));
}

Body::Kind Body::kind() const { return rep_->kind; }

bool Body::is_simple() const {
  return kind() == Kind::kBoolean || kind() == Kind::kNumber ||
         kind() == Kind::kWord;
}

const Body& Body::element() const {
  if (!rep_->element) throw std::logic_error("body has no element body");
  return *rep_->element;
}

const Body::Fields& Body::fields() const { return rep_->fields; }

const Body* Body::field(std::string_view attribute) const {
  return FindField(rep_->fields, attribute);
}

bool operator==(const Body& a, const Body& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Body::Kind::kList:
    case Body::Kind::kArray:
      return a.element() == b.element();
    case Body::Kind::kRecord:
      return a.fields() == b.fields();
    default:
      return true;
  }
}

// --- Data ------------------------------------------------------------------

struct Data::Rep {
  Kind kind;
  std::variant<bool, Decimal, std::string, std::vector<Data>, Fields> payload;
};

Data Data::Boolean(bool value) {
  static const auto t = std::make_shared<const Rep>(Rep{Kind::kBoolean, true});
  static const auto f = std::make_shared<const Rep>(Rep{Kind::kBoolean, false});
  return Data(value ? t : f);
}

Data Data::Number(Decimal value) {
  return Data(std::make_shared<const Rep>(Rep{Kind::kNumber, std::move(value)}));
}

Data Data::Word(std::string value) {
  if (value.find('\'') != std::string::npos) {
    throw std::invalid_argument("word contains an apostrophe");
  }
  return Data(std::make_shared<const Rep>(Rep{Kind::kWord, std::move(value)}));
}

Data Data::List(std::vector<Data> elements) {
  return Data(std::make_shared<const Rep>(Rep{Kind::kList, std::move(elements)}));
}

Data Data::Array(std::vector<Data> elements) {
  return Data(std::make_shared<const Rep>(Rep{Kind::kArray, std::move(elements)}));
}

Data Data::Record(Fields fields) {
  SortAndCheckFields(fields);
  return Data(std::make_shared<const Rep>(Rep{Kind::kRecord, std::move(fields)}));
}

Data::Kind Data::kind() const { return rep_->kind; }
bool Data::boolean() const { return std::get<bool>(rep_->payload); }
const Decimal& Data::number() const { return std::get<Decimal>(rep_->payload); }
const std::string& Data::word() const {
  return std::get<std::string>(rep_->payload);
}
const std::vector<Data>& Data::elements() const {
  return std::get<std::vector<Data>>(rep_->payload);
}
const Data::Fields& Data::fields() const {
  return std::get<Fields>(rep_->payload);
}
const Data* Data::field(std::string_view attribute) const {
  return FindField(fields(), attribute);
}

bool operator==(const Data& a, const Data& b) {
  if (a.rep_ == b.rep_) return true;
  return a.kind() == b.kind() && a.rep_->payload == b.rep_->payload;
}

// --- clans -------------------------------------------------------------------

bool ClanContainsBody(const Body& body, const Data& data) {
  switch (body.kind()) {
    case Body::Kind::kBoolean:
      return data.kind() == Data::Kind::kBoolean;
    case Body::Kind::kNumber:
      return data.kind() == Data::Kind::kNumber;
    case Body::Kind::kWord:
      return data.kind() == Data::Kind::kWord;
    case Body::Kind::kList:
    case Body::Kind::kArray: {
      auto wanted = body.kind() == Body::Kind::kList ? Data::Kind::kList
                                                     : Data::Kind::kArray;
      if (data.kind() != wanted) return false;
      return std::all_of(data.elements().begin(), data.elements().end(),
                         [&](const Data& d) {
                           return ClanContainsBody(body.element(), d);
                         });
    }
    case Body::Kind::kRecord: {
      if (data.kind() != Data::Kind::kRecord) return false;
      const auto& bf = body.fields();
      const auto& df = data.fields();
      if (bf.size() != df.size()) return false;
      for (size_t i = 0; i < bf.size(); ++i) {
        if (bf[i].first != df[i].first) return false;
        if (!ClanContainsBody(bf[i].second, df[i].second)) return false;
      }
      return true;
    }
  }
  return false;
}

Composite::Composite(Data data, Body body)
    : data_(std::move(data)), body_(std::move(body)) {
  if (!ClanContainsBody(body_, data_)) {
    throw std::invalid_argument("data " + ToString(data_) +
                                " is not in the clan of body " +
                                ToString(body_));
  }
}

Composite Composite::Unchecked(Data data, Body body) {
  return Composite(std::move(data), std::move(body), UncheckedTag{});
}

Composite BooComposite(bool value) {
  return Composite::Unchecked(Data::Boolean(value), Body::Boolean());
}

std::optional<bool> AsBoolean(const Composite& c) {
  if (c.body().kind() != Body::Kind::kBoolean) return std::nullopt;
  return c.data().boolean();
}

bool ClanContainsType(const Type& type, const Composite& com,
                      const Limits& limits) {
  if (!(com.body() == type.body)) return false;
  if (!ClanContainsBody(com.body(), com.data())) return false;
  CompositeOrError verdict = type.transfer.Apply(com, limits);
  const auto* c = std::get_if<Composite>(&verdict);
  return c != nullptr && AsBoolean(*c) == true;
}

// --- limits ----------------------------------------------------------------

bool Limits::Valid() const {
  return max_number_total_digits > 0 && max_number_fraction_digits > 0 &&
         max_word_length > 0 && max_collection_size > 0 &&
         (!max_magnitude || !max_magnitude->is_negative());
}

bool Oversized(const Data& data, const Limits& limits) {
  switch (data.kind()) {
    case Data::Kind::kBoolean:
      return false;
    case Data::Kind::kNumber: {
      const Decimal& n = data.number();
      if (n.fraction_digits() > limits.max_number_fraction_digits) return true;
      if (n.integer_digits() + n.fraction_digits() >
          limits.max_number_total_digits) {
        return true;
      }
      return limits.max_magnitude && n.abs() > *limits.max_magnitude;
    }
    case Data::Kind::kWord:
      return static_cast<long long>(data.word().size()) > limits.max_word_length;
    case Data::Kind::kList:
    case Data::Kind::kArray:
      if (static_cast<long long>(data.elements().size()) >
          limits.max_collection_size) {
        return true;
      }
      return std::any_of(data.elements().begin(), data.elements().end(),
                         [&](const Data& d) { return Oversized(d, limits); });
    case Data::Kind::kRecord:
      if (static_cast<long long>(data.fields().size()) >
          limits.max_collection_size) {
        return true;
      }
      return std::any_of(
          data.fields().begin(), data.fields().end(),
          [&](const auto& f) { return Oversized(f.second, limits); });
  }
  return false;
}

// --- coherence -------------------------------------------------------------

bool Coherent(const Body& a, const Body& b) {
  if (a == b) return true;
  if (a.kind() != Body::Kind::kRecord || b.kind() != Body::Kind::kRecord) {
    return false;
  }
  const Body& small = a.fields().size() < b.fields().size() ? a : b;
  const Body& large = &small == &a ? b : a;
  if (large.fields().size() != small.fields().size() + 1) return false;
  for (const auto& [attribute, body] : small.fields()) {
    const Body* other = large.field(attribute);
    if (other == nullptr || !(*other == body)) return false;
  }
  return true;
}

// --- composite operations --------------------------------------------------

namespace {

const AbstractError* FirstError(const CompositeOrError& a) {
  return std::get_if<AbstractError>(&a);
}

const AbstractError* FirstError(const CompositeOrError& a,
                                const CompositeOrError& b) {
  if (const auto* e = std::get_if<AbstractError>(&a)) return e;
  return std::get_if<AbstractError>(&b);
}

CompositeOrError Checked(Composite c, const Limits& limits) {
  if (Oversized(c.data(), limits)) return MakeError(err::kOverflow);
  return c;
}

bool IsNumber(const Composite& c) {
  return c.body().kind() == Body::Kind::kNumber;
}

}  // namespace

CompositeOrError CompArith(ArithOp op, const CompositeOrError& lhs,
                           const CompositeOrError& rhs, const Limits& limits) {
  if (const auto* e = FirstError(lhs, rhs)) return *e;
  const auto& a = std::get<Composite>(lhs);
  const auto& b = std::get<Composite>(rhs);
  if (!IsNumber(a) || !IsNumber(b)) return MakeError(err::kNumberExpected);
  const Decimal& x = a.data().number();
  const Decimal& y = b.data().number();
  Decimal result;
  switch (op) {
    case ArithOp::kAdd:
      result = x + y;
      break;
    case ArithOp::kSub:
      result = x - y;
      break;
    case ArithOp::kMul:
      result = x * y;
      break;
    case ArithOp::kDiv:
      if (y.is_zero()) return MakeError(err::kDivisionByZero);
      result = Decimal::Divide(x, y, limits.max_number_fraction_digits);
      break;
  }
  return Checked(Composite::Unchecked(Data::Number(std::move(result)),
                                      Body::Number()),
                 limits);
}

CompositeOrError CompCompare(CompareOp op, const CompositeOrError& lhs,
                             const CompositeOrError& rhs) {
  if (const auto* e = FirstError(lhs, rhs)) return *e;
  const auto& a = std::get<Composite>(lhs);
  const auto& b = std::get<Composite>(rhs);
  if (op == CompareOp::kEq || op == CompareOp::kNe) {
    if (!(a.body() == b.body())) return MakeError(err::kIncomparable);
    bool equal = a.data() == b.data();
    return BooComposite(op == CompareOp::kEq ? equal : !equal);
  }
  if (!IsNumber(a) || !IsNumber(b)) return MakeError(err::kNumberExpected);
  const Decimal& x = a.data().number();
  const Decimal& y = b.data().number();
  switch (op) {
    case CompareOp::kLt: return BooComposite(x < y);
    case CompareOp::kLe: return BooComposite(x <= y);
    case CompareOp::kGt: return BooComposite(x > y);
    case CompareOp::kGe: return BooComposite(x >= y);
    default: break;
  }
  return BooComposite(false);
}

CompositeOrError CompGlue(const CompositeOrError& lhs,
                          const CompositeOrError& rhs, const Limits& limits) {
  if (const auto* e = FirstError(lhs, rhs)) return *e;
  const auto& a = std::get<Composite>(lhs);
  const auto& b = std::get<Composite>(rhs);
  if (a.body().kind() != Body::Kind::kWord ||
      b.body().kind() != Body::Kind::kWord) {
    return MakeError(err::kWordExpected);
  }
  return Checked(Composite::Unchecked(
                     Data::Word(a.data().word() + b.data().word()),
                     Body::Word()),
                 limits);
}

CompositeOrError ListMake(const CompositeOrError& element,
                          const Limits& limits) {
  if (const auto* e = FirstError(element)) return *e;
  const auto& c = std::get<Composite>(element);
  return Checked(Composite::Unchecked(Data::List({c.data()}),
                                      Body::List(c.body())),
                 limits);
}

CompositeOrError ListPush(const CompositeOrError& element,
                          const CompositeOrError& list, const Limits& limits) {
  if (const auto* e = FirstError(element, list)) return *e;
  const auto& c = std::get<Composite>(element);
  const auto& l = std::get<Composite>(list);
  if (l.body().kind() != Body::Kind::kList) {
    return MakeError(err::kListExpected);
  }
  if (!(l.body().element() == c.body())) return MakeError(err::kBodyMismatch);
  std::vector<Data> items;
  items.reserve(l.data().elements().size() + 1);
  items.push_back(c.data());
  items.insert(items.end(), l.data().elements().begin(),
               l.data().elements().end());
  return Checked(Composite::Unchecked(Data::List(std::move(items)), l.body()),
                 limits);
}

CompositeOrError ListTop(const CompositeOrError& list) {
  if (const auto* e = FirstError(list)) return *e;
  const auto& l = std::get<Composite>(list);
  if (l.body().kind() != Body::Kind::kList) {
    return MakeError(err::kListExpected);
  }
  if (l.data().elements().empty()) return MakeError(err::kEmptyList);
  return Composite::Unchecked(l.data().elements().front(), l.body().element());
}

CompositeOrError ArrayMake(const CompositeOrError& element,
                           const Limits& limits) {
  if (const auto* e = FirstError(element)) return *e;
  const auto& c = std::get<Composite>(element);
  return Checked(Composite::Unchecked(Data::Array({c.data()}),
                                      Body::Array(c.body())),
                 limits);
}

CompositeOrError ArrayAppend(const CompositeOrError& array,
                             const CompositeOrError& element,
                             const Limits& limits) {
  if (const auto* e = FirstError(array, element)) return *e;
  const auto& a = std::get<Composite>(array);
  const auto& c = std::get<Composite>(element);
  if (a.body().kind() != Body::Kind::kArray) {
    return MakeError(err::kArrayExpected);
  }
  if (!(a.body().element() == c.body())) return MakeError(err::kBodyMismatch);
  std::vector<Data> items = a.data().elements();
  items.push_back(c.data());
  return Checked(Composite::Unchecked(Data::Array(std::move(items)), a.body()),
                 limits);
}

CompositeOrError ArrayIndex(const CompositeOrError& array,
                            const CompositeOrError& index) {
  if (const auto* e = FirstError(array, index)) return *e;
  const auto& a = std::get<Composite>(array);
  const auto& i = std::get<Composite>(index);
  if (a.body().kind() != Body::Kind::kArray) {
    return MakeError(err::kArrayExpected);
  }
  if (!IsNumber(i)) return MakeError(err::kNumberExpected);
  const Decimal& k = i.data().number();
  const auto& items = a.data().elements();
  if (!k.is_integer() || k < Decimal(1) ||
      k > Decimal(static_cast<long long>(items.size()))) {
    return MakeError(err::kIndexOutOfRange);
  }
  auto position = static_cast<size_t>(k.mantissa()) - 1;
  return Composite::Unchecked(items[position], a.body().element());
}

CompositeOrError RecordMake(const std::string& attribute,
                            const CompositeOrError& value,
                            const Limits& limits) {
  if (const auto* e = FirstError(value)) return *e;
  const auto& c = std::get<Composite>(value);
  return Checked(
      Composite::Unchecked(Data::Record({{attribute, c.data()}}),
                           Body::Record({{attribute, c.body()}})),
      limits);
}

CompositeOrError RecordExpand(const CompositeOrError& record,
                              const std::string& attribute,
                              const CompositeOrError& value,
                              const Limits& limits) {
  if (const auto* e = FirstError(record, value)) return *e;
  const auto& r = std::get<Composite>(record);
  const auto& c = std::get<Composite>(value);
  if (r.body().kind() != Body::Kind::kRecord) {
    return MakeError(err::kRecordExpected);
  }
  if (r.body().field(attribute) != nullptr) {
    return MakeError(err::kAttributeExists);
  }
  Data::Fields data_fields = r.data().fields();
  data_fields.emplace_back(attribute, c.data());
  Body::Fields body_fields = r.body().fields();
  body_fields.emplace_back(attribute, c.body());
  return Checked(Composite::Unchecked(Data::Record(std::move(data_fields)),
                                      Body::Record(std::move(body_fields))),
                 limits);
}

CompositeOrError RecordRemove(const CompositeOrError& record,
                              const std::string& attribute) {
  if (const auto* e = FirstError(record)) return *e;
  const auto& r = std::get<Composite>(record);
  if (r.body().kind() != Body::Kind::kRecord) {
    return MakeError(err::kRecordExpected);
  }
  if (r.body().field(attribute) == nullptr) {
    return MakeError(err::kAttributeMissing);
  }
  Data::Fields data_fields;
  for (const auto& f : r.data().fields()) {
    if (f.first != attribute) data_fields.push_back(f);
  }
  Body::Fields body_fields;
  for (const auto& f : r.body().fields()) {
    if (f.first != attribute) body_fields.push_back(f);
  }
  return Composite::Unchecked(Data::Record(std::move(data_fields)),
                              Body::Record(std::move(body_fields)));
}

CompositeOrError RecordSelect(const CompositeOrError& record,
                              const std::string& attribute) {
  if (const auto* e = FirstError(record)) return *e;
  const auto& r = std::get<Composite>(record);
  if (r.body().kind() != Body::Kind::kRecord) {
    return MakeError(err::kRecordExpected);
  }
  const Body* body = r.body().field(attribute);
  if (body == nullptr) return MakeError(err::kAttributeMissing);
  return Composite::Unchecked(*r.data().field(attribute), *body);
}

CompositeOrError NumberLiteral(const Decimal& value, const Limits& limits) {
  return Checked(Composite::Unchecked(Data::Number(value), Body::Number()),
                 limits);
}

CompositeOrError WordLiteral(const std::string& value, const Limits& limits) {
  return Checked(Composite::Unchecked(Data::Word(value), Body::Word()), limits);
}

// --- printing ----------------------------------------------------------------

std::string ToString(const Data& data) {
  switch (data.kind()) {
    case Data::Kind::kBoolean:
      return data.boolean() ? "true" : "false";
    case Data::Kind::kNumber:
      return data.number().ToString();
    case Data::Kind::kWord:
      return "'" + data.word() + "'";
    case Data::Kind::kList:
    case Data::Kind::kArray: {
      bool list = data.kind() == Data::Kind::kList;
      std::string out = list ? "list(" : "array[";
      for (size_t i = 0; i < data.elements().size(); ++i) {
        if (i > 0) out += ", ";
        out += ToString(data.elements()[i]);
      }
      return out + (list ? ")" : "]");
    }
    case Data::Kind::kRecord: {
      std::string out = "record{";
      for (size_t i = 0; i < data.fields().size(); ++i) {
        if (i > 0) out += ", ";
        out += data.fields()[i].first + ": " + ToString(data.fields()[i].second);
      }
      return out + "}";
    }
  }
  return "?";
}

std::string ToString(const Body& body) {
  switch (body.kind()) {
    case Body::Kind::kBoolean: return "boolean";
    case Body::Kind::kNumber: return "number";
    case Body::Kind::kWord: return "word";
    case Body::Kind::kList: return "list-type " + ToString(body.element()) + " ee";
    case Body::Kind::kArray:
      return "array-type " + ToString(body.element()) + " ee";
    case Body::Kind::kRecord: {
      const auto& fields = body.fields();
      if (fields.empty()) return "record-type ee";
      std::string out = "record-type " + fields[0].first + " as " +
                        ToString(fields[0].second) + " ee";
      for (size_t i = 1; i < fields.size(); ++i) {
        out = "expand-record-type " + out + " at " + fields[i].first + " by " +
              ToString(fields[i].second) + " ee";
      }
      return out;
    }
  }
  return "?";
}

std::string ToString(const Type& type) {
  if (type.transfer.is_true()) return ToString(type.body);
  return "replace-transfer-in " + ToString(type.body) + " by " +
         Pretty(type.transfer.expression()) + " ee";
}

std::string ToString(const Composite& com) {
  return "(" + ToString(com.data()) + ", " + ToString(com.body()) + ")";
}

std::string ToString(const CompositeOrError& result) {
  if (const auto* e = std::get_if<AbstractError>(&result)) {
    return "error: " + e->word;
  }
  return ToString(std::get<Composite>(result));
}

}  // namespace lingua
