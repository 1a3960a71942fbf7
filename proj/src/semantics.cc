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

#include <memory>
#include <utility>

#include "lingua/mccarthy.h"

namespace lingua {
namespace {

// Unwinds the evaluator when the step budget runs out.
struct FuelExhausted {};

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

AbstractError Err(std::string_view word) { return MakeError(word); }

const AbstractError* ErrorOf(const CompositeOrError& c) {
  return std::get_if<AbstractError>(&c);
}

// Truth value of an operand of a logical connective: an error is 'ee', a
// non-Boolean composite is reported separately.
TriBool Truth(const CompositeOrError& c) {
  if (IsError(c)) return TriBool::kError;
  auto b = AsBoolean(std::get<Composite>(c));
  return b ? FromBool(*b) : TriBool::kError;
}

CompositeOrError Logical(LogicalOp op, const CompositeOrError& lhs,
                         const std::function<CompositeOrError()>& rhs) {
  auto checked = [](const CompositeOrError& c) -> CompositeOrError {
    if (IsError(c) || AsBoolean(std::get<Composite>(c))) return c;
    return Err(err::kBooleanExpected);
  };
  CompositeOrError left = checked(lhs);
  TriBool p = Truth(left);
  bool decided = op == LogicalOp::kAnd ? AndDecidedBy(p) : OrDecidedBy(p);
  if (decided) return left;
  return checked(rhs());
}

}  // namespace

class Interpreter::Impl {
 public:
  Impl(const Limits& limits, const Observer& observer)
      : limits_(limits), observer_(observer) {}

  // --- data expressions ----------------------------------------------------

  CompositeOrError Eval(const DatExp& dae, const State& sta, Fuel& fuel) const {
    Spend(fuel);
    if (sta.store.error) return *sta.store.error;
    auto eval = [&](const Box<DatExp>& e) { return Eval(*e, sta, fuel); };
    return std::visit(
        Overloaded{
            [&](const dat::BoolLit& n) -> CompositeOrError {
              return BooComposite(n.value);
            },
            [&](const dat::NumLit& n) -> CompositeOrError {
              return NumberLiteral(n.value, limits_);
            },
            [&](const dat::WordLit& n) -> CompositeOrError {
              return WordLiteral(n.value, limits_);
            },
            [&](const dat::Ident& n) -> CompositeOrError {
              const Value* v = LookupVar(sta, n.name);
              if (v == nullptr) return Err(err::kIdentifierNotDeclared);
              if (v->is_pseudo()) return Err(err::kVariableNotInitialized);
              return v->composite();
            },
            [&](const dat::Logical& n) -> CompositeOrError {
              return Logical(n.op, eval(n.lhs), [&] { return eval(n.rhs); });
            },
            [&](const dat::Not& n) -> CompositeOrError {
              CompositeOrError c = eval(n.operand);
              if (IsError(c)) return c;
              auto b = AsBoolean(std::get<Composite>(c));
              if (!b) return Err(err::kBooleanExpected);
              return BooComposite(!*b);
            },
            [&](const dat::Arith& n) -> CompositeOrError {
              CompositeOrError l = eval(n.lhs);
              CompositeOrError r = eval(n.rhs);
              return CompArith(n.op, l, r, limits_);
            },
            [&](const dat::Compare& n) -> CompositeOrError {
              CompositeOrError l = eval(n.lhs);
              CompositeOrError r = eval(n.rhs);
              return CompCompare(n.op, l, r);
            },
            [&](const dat::Glue& n) -> CompositeOrError {
              CompositeOrError l = eval(n.lhs);
              CompositeOrError r = eval(n.rhs);
              return CompGlue(l, r, limits_);
            },
            [&](const dat::ListMake& n) -> CompositeOrError {
              return ListMake(eval(n.element), limits_);
            },
            [&](const dat::Push& n) -> CompositeOrError {
              CompositeOrError e = eval(n.element);
              CompositeOrError l = eval(n.list);
              return ListPush(e, l, limits_);
            },
            [&](const dat::Top& n) -> CompositeOrError {
              return ListTop(eval(n.list));
            },
            [&](const dat::ArrayMake& n) -> CompositeOrError {
              return ArrayMake(eval(n.element), limits_);
            },
            [&](const dat::AddToArr& n) -> CompositeOrError {
              CompositeOrError a = eval(n.array);
              CompositeOrError e = eval(n.element);
              return ArrayAppend(a, e, limits_);
            },
            [&](const dat::Index& n) -> CompositeOrError {
              CompositeOrError a = eval(n.array);
              CompositeOrError i = eval(n.index);
              return ArrayIndex(a, i);
            },
            [&](const dat::RecordMake& n) -> CompositeOrError {
              return RecordMake(n.attribute, eval(n.value), limits_);
            },
            [&](const dat::ExpandRecord& n) -> CompositeOrError {
              CompositeOrError r = eval(n.record);
              CompositeOrError v = eval(n.value);
              return RecordExpand(r, n.attribute, v, limits_);
            },
            [&](const dat::RemoveAttr& n) -> CompositeOrError {
              return RecordRemove(eval(n.record), n.attribute);
            },
            [&](const dat::Select& n) -> CompositeOrError {
              return RecordSelect(eval(n.record), n.attribute);
            },
            [&](const dat::IfThenElse& n) -> CompositeOrError {
              CompositeOrError c = eval(n.condition);
              if (IsError(c)) return c;
              auto b = AsBoolean(std::get<Composite>(c));
              if (!b) return Err(err::kBooleanExpected);
              return *b ? eval(n.then_branch) : eval(n.else_branch);
            },
            [&](const dat::FunCall& n) -> CompositeOrError {
              return CallFunctional(n.name, n.args, sta, fuel);
            },
        },
        dae.node);
  }

  // --- type expressions ----------------------------------------------------

  TypeOrError EvalType(const TypExp& tex, const State& sta) const {
    if (sta.store.error) return *sta.store.error;
    return std::visit(
        Overloaded{
            [&](const typ::Simple& n) -> TypeOrError {
              return Type{Body::Simple(n.kind), Transfer::True()};
            },
            [&](const typ::Constant& n) -> TypeOrError {
              const Type* t = LookupType(sta, n.name);
              if (t == nullptr) return Err(err::kTypeNotDefined);
              return *t;
            },
            [&](const typ::ListType& n) -> TypeOrError {
              TypeOrError e = EvalType(*n.element, sta);
              if (auto* err = std::get_if<AbstractError>(&e)) return *err;
              return Type{Body::List(std::get<Type>(e).body), Transfer::True()};
            },
            [&](const typ::ArrayType& n) -> TypeOrError {
              TypeOrError e = EvalType(*n.element, sta);
              if (auto* err = std::get_if<AbstractError>(&e)) return *err;
              return Type{Body::Array(std::get<Type>(e).body),
                          Transfer::True()};
            },
            [&](const typ::RecordType& n) -> TypeOrError {
              TypeOrError e = EvalType(*n.element, sta);
              if (auto* err = std::get_if<AbstractError>(&e)) return *err;
              return Type{Body::Record({{n.attribute, std::get<Type>(e).body}}),
                          Transfer::True()};
            },
            [&](const typ::ExpandRecordType& n) -> TypeOrError {
              TypeOrError b = EvalType(*n.base, sta);
              if (auto* err = std::get_if<AbstractError>(&b)) return *err;
              TypeOrError e = EvalType(*n.element, sta);
              if (auto* err = std::get_if<AbstractError>(&e)) return *err;
              const Type& base = std::get<Type>(b);
              if (base.body.kind() != Body::Kind::kRecord) {
                return Err(err::kRecordTypeExpected);
              }
              if (base.body.field(n.attribute) != nullptr) {
                return Err(err::kAttributeExists);
              }
              Body::Fields fields = base.body.fields();
              fields.emplace_back(n.attribute, std::get<Type>(e).body);
              return Type{Body::Record(std::move(fields)), base.transfer};
            },
            [&](const typ::ReplaceTransfer& n) -> TypeOrError {
              TypeOrError b = EvalType(*n.base, sta);
              if (auto* err = std::get_if<AbstractError>(&b)) return *err;
              return Type{std::get<Type>(b).body, Transfer(*n.transfer)};
            },
        },
        tex.node);
  }

  // --- instructions --------------------------------------------------------

  // Steps 5 to 9 of assignment: store `com` in `target` under the discipline
  // of its former type. Also used when returning reference parameters.
  State Store(State sta, const std::string& target,
              const CompositeOrError& com) const {
    if (sta.store.error) return sta;
    const Value* former = LookupVar(sta, target);
    if (former == nullptr) {
      return InsertError(std::move(sta), Err(err::kIdentifierNotDeclared));
    }
    if (const auto* e = ErrorOf(com)) return InsertError(std::move(sta), *e);
    const Composite& value = std::get<Composite>(com);
    CompositeOrError verdict = former->type.transfer.Apply(value, limits_);
    if (const auto* e = ErrorOf(verdict)) {
      return InsertError(std::move(sta), *e);
    }
    if (!Coherent(value.body(), former->type.body)) {
      return InsertError(std::move(sta), Err(err::kNoCoherence));
    }
    auto holds = AsBoolean(std::get<Composite>(verdict));
    if (!holds) return InsertError(std::move(sta), Err(err::kAYokeExpected));
    if (!*holds) {
      return InsertError(std::move(sta), Err(err::kYokeNotSatisfied));
    }
    Type type{value.body(), former->type.transfer};
    sta.store.valuation.Set(target, Value{value.data(), std::move(type)});
    return sta;
  }

  State Assign(const std::string& target, const DatExp& dae, const State& sta,
               Fuel& fuel) const {
    if (sta.store.error) return sta;
    if (LookupVar(sta, target) == nullptr) {
      return InsertError(sta, Err(err::kIdentifierNotDeclared));
    }
    return Store(sta, target, Eval(dae, sta, fuel));
  }

  State Exec(const Instruction& ins, const State& sta, Fuel& fuel) const {
    Spend(fuel);
    if (const auto* seq = std::get_if<ins::Seq>(&ins.node)) {
      State mid = Exec(*seq->first, sta, fuel);
      return Exec(*seq->second, mid, fuel);
    }
    State out = ExecAtom(ins, sta, fuel);
    if (observer_) observer_(ins, out);
    return out;
  }

  State ExecAtom(const Instruction& ins, const State& sta, Fuel& fuel) const {
    // The error handler is the only instruction that looks at an erroneous
    // state; every other one passes it through.
    if (const auto* h = std::get_if<ins::ErrorHandler>(&ins.node)) {
      if (!sta.store.error) return sta;
      State ok = sta;
      ok.store.error.reset();
      CompositeOrError c = Eval(*h->condition, ok, fuel);
      const auto* com = std::get_if<Composite>(&c);
      if (com != nullptr && com->data().kind() == Data::Kind::kWord &&
          com->data().word() == sta.store.error->word) {
        return Exec(*h->body, ok, fuel);
      }
      return sta;
    }
    if (sta.store.error) return sta;
    return std::visit(
        Overloaded{
            [&](const ins::Assign& n) -> State {
              return Assign(n.target, *n.value, sta, fuel);
            },
            [&](const ins::YokeReplace& n) -> State {
              const Value* v = LookupVar(sta, n.target);
              if (v == nullptr) {
                return InsertError(sta, Err(err::kIdentifierNotDeclared));
              }
              Transfer transfer(*n.transfer);
              if (!v->is_pseudo()) {
                CompositeOrError verdict = transfer.Apply(v->composite(), limits_);
                if (const auto* e = ErrorOf(verdict)) return InsertError(sta, *e);
                auto holds = AsBoolean(std::get<Composite>(verdict));
                if (!holds) return InsertError(sta, Err(err::kAYokeExpected));
                if (!*holds) {
                  return InsertError(sta, Err(err::kYokeNotSatisfied));
                }
              }
              Value updated = *v;
              updated.type.transfer = std::move(transfer);
              State out = sta;
              out.store.valuation.Set(n.target, std::move(updated));
              return out;
            },
            [&](const ins::Skip&) -> State { return sta; },
            [&](const ins::Call& n) -> State {
              return Call(n.procedure, n.ref_args, n.val_args, sta, fuel);
            },
            [&](const ins::ErrorHandler&) -> State { return sta; },
            [&](const ins::If& n) -> State {
              auto branch = Condition(*n.condition, sta, fuel);
              if (auto* e = std::get_if<AbstractError>(&branch)) {
                return InsertError(sta, *e);
              }
              return Exec(std::get<bool>(branch) ? *n.then_branch
                                                 : *n.else_branch,
                          sta, fuel);
            },
            [&](const ins::While& n) -> State {
              State cur = sta;
              while (true) {
                auto go = Condition(*n.condition, cur, fuel);
                if (auto* e = std::get_if<AbstractError>(&go)) {
                  return InsertError(std::move(cur), *e);
                }
                if (!std::get<bool>(go)) return cur;
                cur = Exec(*n.body, cur, fuel);
                if (cur.store.error) return cur;
                Spend(fuel);
              }
            },
            [&](const ins::Seq&) -> State { return sta; },
        },
        ins.node);
  }

  std::variant<bool, AbstractError> Condition(const DatExp& dae,
                                              const State& sta,
                                              Fuel& fuel) const {
    CompositeOrError c = Eval(dae, sta, fuel);
    if (const auto* e = ErrorOf(c)) return *e;
    auto b = AsBoolean(std::get<Composite>(c));
    if (!b) return Err(err::kBooleanExpected);
    return *b;
  }

  // --- declarations --------------------------------------------------------

  State Declare(const Preamble& pam, const State& sta, Fuel& fuel) const {
    if (const auto* seq = std::get_if<pre::Seq>(&pam.node)) {
      State mid = Declare(*seq->first, sta, fuel);
      return Declare(*seq->second, mid, fuel);
    }
    if (sta.store.error) return sta;
    auto env = [&] { return std::make_shared<const Env>(sta.env); };
    return std::visit(
        Overloaded{
            [&](const pre::VarDecl& n) -> State {
              TypeOrError t = EvalType(*n.type, sta);
              if (auto* e = std::get_if<AbstractError>(&t)) {
                return InsertError(sta, *e);
              }
              return DeclareVar(sta, n.name, std::get<Type>(t));
            },
            [&](const pre::TypeDef& n) -> State {
              TypeOrError t = EvalType(*n.type, sta);
              if (auto* e = std::get_if<AbstractError>(&t)) {
                return InsertError(sta, *e);
              }
              return BindType(sta, n.name, std::get<Type>(t));
            },
            [&](const pre::Proc& n) -> State {
              auto group = std::make_shared<const std::vector<ProcDecl>>(
                  std::vector<ProcDecl>{n.decl});
              return BindProc(sta, n.decl.name,
                              ImperativeProcedure{n.decl, env(), group});
            },
            [&](const pre::MultiProc& n) -> State {
              auto captured = env();
              auto group =
                  std::make_shared<const std::vector<ProcDecl>>(n.members);
              State out = sta;
              for (const ProcDecl& member : n.members) {
                out = BindProc(std::move(out), member.name,
                               ImperativeProcedure{member, captured, group});
                if (out.store.error) break;
              }
              return out;
            },
            [&](const pre::Fun& n) -> State {
              return BindProc(sta, n.decl.name,
                              FunctionalProcedure{n.decl, env()});
            },
            [&](const pre::Skip&) -> State { return sta; },
            [&](const pre::Seq&) -> State { return sta; },
        },
        pam.node);
  }

  State RunProgram(const Program& prog, const State& sta, Fuel& fuel) const {
    return Exec(*prog.body, Declare(*prog.preamble, sta, fuel), fuel);
  }

  // --- procedure calls -----------------------------------------------------

  // Binds one formal parameter in the local state from an actual parameter
  // of the caller. `pseudo_ok` admits an uninitialized actual.
  State BindFormal(State local, const FormalParam& formal, const State& caller,
                   const std::string& actual, bool pseudo_ok) const {
    if (local.store.error) return local;
    TypeOrError t = EvalType(*formal.type, local);
    if (auto* e = std::get_if<AbstractError>(&t)) {
      return InsertError(std::move(local), *e);
    }
    const Type& type = std::get<Type>(t);
    const Value* v = LookupVar(caller, actual);
    if (v == nullptr) {
      return InsertError(std::move(local), Err(err::kIdentifierNotDeclared));
    }
    if (v->is_pseudo()) {
      if (!pseudo_ok) {
        return InsertError(std::move(local),
                           Err(err::kVariableNotInitialized));
      }
      if (!(v->type.body == type.body)) {
        return InsertError(std::move(local), Err(err::kParameterTypeMismatch));
      }
      return DeclareVar(std::move(local), formal.name, type);
    }
    if (!ClanContainsType(type, v->composite(), limits_)) {
      return InsertError(std::move(local), Err(err::kParameterTypeMismatch));
    }
    State out = DeclareVar(std::move(local), formal.name, type);
    if (out.store.error) return out;
    out.store.valuation.Set(formal.name, Value{v->content, type});
    return out;
  }

  State Call(const std::string& name, const std::vector<std::string>& refs,
             const std::vector<std::string>& vals, const State& sta,
             Fuel& fuel) const {
    // Stage 1: inspect the initial global state.
    if (sta.store.error) return sta;
    const Procedure* found = LookupProc(sta, name);
    const auto* proc =
        found ? std::get_if<ImperativeProcedure>(found) : nullptr;
    if (proc == nullptr) {
      return InsertError(sta, Err(err::kProcedureNotDeclared));
    }
    const ProcDecl& decl = proc->decl;
    if (refs.size() != decl.ref_params.size() ||
        vals.size() != decl.val_params.size()) {
      return InsertError(sta, Err(err::kParameterListMismatch));
    }

    // Stage 2: the initial local state. The procedure and its multiproc
    // siblings are nested in the declaration-time environment.
    State local;
    local.env = *proc->declaration_env;
    for (const ProcDecl& member : *proc->group) {
      local.env.procedures.Set(
          member.name,
          ImperativeProcedure{member, proc->declaration_env, proc->group});
    }
    for (size_t i = 0; i < refs.size(); ++i) {
      local = BindFormal(std::move(local), decl.ref_params[i], sta, refs[i],
                         /*pseudo_ok=*/true);
    }
    for (size_t i = 0; i < vals.size(); ++i) {
      local = BindFormal(std::move(local), decl.val_params[i], sta, vals[i],
                         /*pseudo_ok=*/false);
    }
    if (local.store.error) return InsertError(sta, *local.store.error);

    // Stage 3: run the body.
    State terminal = RunProgram(*decl.body, local, fuel);
    if (terminal.store.error) return InsertError(sta, *terminal.store.error);

    // Stage 4: return the reference parameters into the global store.
    State out = sta;
    for (size_t i = 0; i < refs.size(); ++i) {
      const Value* v = LookupVar(terminal, decl.ref_params[i].name);
      if (v == nullptr || v->is_pseudo()) continue;
      out = Store(std::move(out), refs[i], v->composite());
    }
    return out;
  }

  CompositeOrError CallFunctional(const std::string& name,
                                  const std::vector<std::string>& args,
                                  const State& sta, Fuel& fuel) const {
    if (sta.store.error) return *sta.store.error;
    const Procedure* found = LookupProc(sta, name);
    const auto* fun =
        found ? std::get_if<FunctionalProcedure>(found) : nullptr;
    if (fun == nullptr) return Err(err::kProcedureNotDeclared);
    const FunDecl& decl = fun->decl;
    if (args.size() != decl.params.size()) {
      return Err(err::kParameterListMismatch);
    }
    State local;
    local.env = *fun->declaration_env;
    local.env.procedures.Set(decl.name, *fun);
    for (size_t i = 0; i < args.size(); ++i) {
      local = BindFormal(std::move(local), decl.params[i], sta, args[i],
                         /*pseudo_ok=*/false);
    }
    if (local.store.error) return *local.store.error;
    State terminal = RunProgram(*decl.body, local, fuel);
    if (terminal.store.error) return *terminal.store.error;
    CompositeOrError result = Eval(*decl.result, terminal, fuel);
    if (IsError(result)) return result;
    TypeOrError t = EvalType(*decl.result_type, terminal);
    if (auto* e = std::get_if<AbstractError>(&t)) return *e;
    if (!ClanContainsType(std::get<Type>(t), std::get<Composite>(result),
                          limits_)) {
      return Err(err::kResultTypeMismatch);
    }
    return result;
  }

 private:
  static void Spend(Fuel& fuel) {
    if (!fuel.TryConsume()) throw FuelExhausted{};
  }

  const Limits& limits_;
  const Observer& observer_;
};

namespace {

template <class F>
auto Guard(Fuel& fuel, F body) -> std::variant<decltype(body()), OutOfFuel> {
  try {
    return body();
  } catch (const FuelExhausted&) {
    return OutOfFuel{fuel.used()};
  }
}

}  // namespace

ExpOutcome Interpreter::EvalDataExp(const DatExp& dae, const State& sta,
                                    Fuel& fuel) const {
  Impl impl(limits_, observer_);
  return Guard(fuel, [&] { return impl.Eval(dae, sta, fuel); });
}

TypeOrError Interpreter::EvalTypeExp(const TypExp& tex,
                                     const State& sta) const {
  return Impl(limits_, observer_).EvalType(tex, sta);
}

Outcome Interpreter::ExecAssign(const std::string& target, const DatExp& dae,
                                const State& sta, Fuel& fuel) const {
  Impl impl(limits_, observer_);
  return Guard(fuel, [&] { return impl.Assign(target, dae, sta, fuel); });
}

Outcome Interpreter::ExecInstruction(const Instruction& ins, const State& sta,
                                     Fuel& fuel) const {
  Impl impl(limits_, observer_);
  return Guard(fuel, [&] { return impl.Exec(ins, sta, fuel); });
}

Outcome Interpreter::ExecPreamble(const Preamble& pam, const State& sta,
                                  Fuel& fuel) const {
  Impl impl(limits_, observer_);
  return Guard(fuel, [&] { return impl.Declare(pam, sta, fuel); });
}

Outcome Interpreter::CallImperative(const std::string& name,
                                    const std::vector<std::string>& ref_args,
                                    const std::vector<std::string>& val_args,
                                    const State& sta, Fuel& fuel) const {
  Impl impl(limits_, observer_);
  return Guard(fuel,
               [&] { return impl.Call(name, ref_args, val_args, sta, fuel); });
}

ExpOutcome Interpreter::CallFunctional(const std::string& name,
                                       const std::vector<std::string>& args,
                                       const State& sta, Fuel& fuel) const {
  Impl impl(limits_, observer_);
  return Guard(fuel, [&] { return impl.CallFunctional(name, args, sta, fuel); });
}

Outcome Interpreter::ExecProgram(const Program& prog, const State& sta,
                                 Fuel& fuel) const {
  Impl impl(limits_, observer_);
  return Guard(fuel, [&] { return impl.RunProgram(prog, sta, fuel); });
}

}  // namespace lingua
