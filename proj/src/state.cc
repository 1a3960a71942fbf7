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

#include "lingua/keywords.h"

namespace lingua {
namespace {

bool SameEnv(const std::shared_ptr<const Env>& a,
             const std::shared_ptr<const Env>& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace

bool operator==(const ImperativeProcedure& a, const ImperativeProcedure& b) {
  if (!(a.decl == b.decl) || !SameEnv(a.declaration_env, b.declaration_env)) {
    return false;
  }
  if (a.group == b.group) return true;
  return a.group && b.group && *a.group == *b.group;
}

bool operator==(const FunctionalProcedure& a, const FunctionalProcedure& b) {
  return a.decl == b.decl && SameEnv(a.declaration_env, b.declaration_env);
}

State InitialState() { return State{}; }

bool IsError(const State& state) { return state.store.error.has_value(); }

State InsertError(State state, AbstractError error) {
  state.store.error = std::move(error);
  return state;
}

State DeclareVar(State state, const std::string& name, Type type) {
  if (IsReservedWord(name) || state.store.valuation.Contains(name)) {
    return InsertError(std::move(state), MakeError(err::kIdentifierNotFree));
  }
  state.store.valuation.Set(name, Value{std::nullopt, std::move(type)});
  return state;
}

State BindType(State state, const std::string& name, Type type) {
  if (IsReservedWord(name) || state.env.types.Contains(name)) {
    return InsertError(std::move(state), MakeError(err::kIdentifierNotFree));
  }
  state.env.types.Set(name, std::move(type));
  return state;
}

State BindProc(State state, const std::string& name, Procedure proc) {
  if (IsReservedWord(name) || state.env.procedures.Contains(name)) {
    return InsertError(std::move(state), MakeError(err::kIdentifierNotFree));
  }
  state.env.procedures.Set(name, std::move(proc));
  return state;
}

const Value* LookupVar(const State& state, std::string_view name) {
  return state.store.valuation.Find(name);
}

const Type* LookupType(const State& state, std::string_view name) {
  return state.env.types.Find(name);
}

const Procedure* LookupProc(const State& state, std::string_view name) {
  return state.env.procedures.Find(name);
}

std::string DumpState(const State& state) {
  std::string out;
  for (const auto& [name, value] : state.store.valuation.entries()) {
    out += name + " : " + ToString(value.type) + " = " +
           (value.content ? ToString(*value.content) : std::string("Ω")) +
           "\n";
  }
  out += "register: " + (state.store.error ? state.store.error->word
                                           : std::string("OK")) + "\n";
  return out;
}

std::vector<std::string> AuditStoredValues(const State& state,
                                           const Limits& limits) {
  std::vector<std::string> violations;
  for (const auto& [name, value] : state.store.valuation.entries()) {
    if (value.is_pseudo()) continue;
    if (!ClanContainsBody(value.type.body, *value.content)) {
      violations.push_back(name + ": data outside the clan of its body");
      continue;
    }
    if (!ClanContainsType(value.type, value.composite(), limits)) {
      violations.push_back(name + ": transfer not satisfied");
    }
  }
  return violations;
}

}  // namespace lingua
