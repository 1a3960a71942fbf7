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

#ifndef LINGUA_STATE_H_
#define LINGUA_STATE_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lingua/ast.h"
#include "lingua/domains.h"

namespace lingua {

// Finite mapping that iterates in insertion order. Copies share storage
// until one of them is modified.
template <class V>
class OrderedMap {
 public:
  using Entry = std::pair<std::string, V>;

  const V* Find(std::string_view key) const {
    if (!items_) return nullptr;
    for (const auto& [k, v] : *items_) {
      if (k == key) return &v;
    }
    return nullptr;
  }
  bool Contains(std::string_view key) const { return Find(key) != nullptr; }

  // Replaces an existing binding in place or appends a new one.
  void Set(std::string key, V value) {
    Detach();
    for (auto& [k, v] : *items_) {
      if (k == key) {
        v = std::move(value);
        return;
      }
    }
    items_->emplace_back(std::move(key), std::move(value));
  }

  size_t size() const { return items_ ? items_->size() : 0; }
  bool empty() const { return size() == 0; }

  const std::vector<Entry>& entries() const {
    static const std::vector<Entry> kEmpty;
    return items_ ? *items_ : kEmpty;
  }

  friend bool operator==(const OrderedMap& a, const OrderedMap& b) {
    return a.items_ == b.items_ || a.entries() == b.entries();
  }

 private:
  void Detach() {
    if (!items_) {
      items_ = std::make_shared<std::vector<Entry>>();
    } else if (items_.use_count() > 1) {
      items_ = std::make_shared<std::vector<Entry>>(*items_);
    }
  }

  std::shared_ptr<std::vector<Entry>> items_;
};

struct Env;

// An imperative procedure. `group` lists the declarations elaborated
// together with this one (a multiprocedure, or just the procedure itself);
// all of them are nested into the environment of every call.
struct ImperativeProcedure {
  ProcDecl decl;
  std::shared_ptr<const Env> declaration_env;
  std::shared_ptr<const std::vector<ProcDecl>> group;

  friend bool operator==(const ImperativeProcedure& a,
                         const ImperativeProcedure& b);
};

struct FunctionalProcedure {
  FunDecl decl;
  std::shared_ptr<const Env> declaration_env;

  friend bool operator==(const FunctionalProcedure& a,
                         const FunctionalProcedure& b);
};

using Procedure = std::variant<ImperativeProcedure, FunctionalProcedure>;

struct Env {
  OrderedMap<Type> types;
  OrderedMap<Procedure> procedures;
  bool operator==(const Env&) const = default;
};

struct Store {
  OrderedMap<Value> valuation;
  std::optional<AbstractError> error;  // nullopt is 'OK'
  bool operator==(const Store&) const = default;
};

struct State {
  Env env;
  Store store;
  bool operator==(const State&) const = default;
};

State InitialState();

bool IsError(const State& state);
// Overwrites the error register; env and valuation are untouched.
State InsertError(State state, AbstractError error);

// Binding operations load 'identifier-not-free' into the register when the
// identifier is already bound in the respective mapping or is reserved.
State DeclareVar(State state, const std::string& name, Type type);
State BindType(State state, const std::string& name, Type type);
State BindProc(State state, const std::string& name, Procedure proc);

const Value* LookupVar(const State& state, std::string_view name);
const Type* LookupType(const State& state, std::string_view name);
const Procedure* LookupProc(const State& state, std::string_view name);

// One line per variable, `ide : <type> = <data | Ω>`, then
// `register: <word | OK>`.
std::string DumpState(const State& state);

// Checks the stored-value invariant: every initialized value's data lies in
// the clan of its body and satisfies its transfer. Returns one message per
// violating variable.
std::vector<std::string> AuditStoredValues(const State& state,
                                           const Limits& limits);

}  // namespace lingua

#endif  // LINGUA_STATE_H_
