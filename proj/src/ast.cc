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

#include <string>

namespace lingua {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string Join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string Quote(const std::string& word) { return "'" + word + "'"; }

std::string PrettyFormals(const std::vector<FormalParam>& params) {
  std::vector<std::string> parts;
  for (const auto& p : params) parts.push_back(p.name + " as " + Pretty(*p.type));
  return Join(parts, ", ");
}

std::string PrettyProcHead(const std::string& name,
                           const std::vector<std::string>& ref_part,
                           const std::vector<std::string>& val_part) {
  std::string out = name + " (";
  bool space = false;
  if (!ref_part.empty()) {
    out += "ref " + Join(ref_part, ", ");
    space = true;
  }
  if (!val_part.empty()) {
    if (space) out += " ";
    out += "val " + Join(val_part, ", ");
  }
  return out + ")";
}

std::string PrettyProc(const ProcDecl& d) {
  std::vector<std::string> refs, vals;
  for (const auto& p : d.ref_params) refs.push_back(p.name + " as " + Pretty(*p.type));
  for (const auto& p : d.val_params) vals.push_back(p.name + " as " + Pretty(*p.type));
  return "proc " + PrettyProcHead(d.name, refs, vals) + " " + Pretty(*d.body) +
         " end proc";
}

std::string DumpNames(const std::vector<std::string>& names) {
  std::string out = "(";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += " ";
    out += names[i];
  }
  return out + ")";
}

std::string DumpFormals(const std::vector<FormalParam>& params) {
  std::string out = "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += " ";
    out += "(" + params[i].name + " " + DumpAst(*params[i].type) + ")";
  }
  return out + ")";
}

std::string DumpProc(const ProcDecl& d) {
  return "(proc " + d.name + " " + DumpFormals(d.ref_params) + " " +
         DumpFormals(d.val_params) + " " + DumpAst(*d.body) + ")";
}

}  // namespace

std::string_view ToString(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return "+";
    case ArithOp::kSub: return "-";
    case ArithOp::kMul: return "*";
    case ArithOp::kDiv: return "/";
  }
  return "?";
}

std::string_view ToString(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "=";
    case CompareOp::kNe: return "<>";
    case CompareOp::kLt: return "<";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGt: return ">";
    case CompareOp::kGe: return ">=";
  }
  return "?";
}

std::string_view ToString(LogicalOp op) {
  return op == LogicalOp::kAnd ? "and" : "or";
}

std::string_view ToString(SimpleKind kind) {
  switch (kind) {
    case SimpleKind::kBoolean: return "boolean";
    case SimpleKind::kNumber: return "number";
    case SimpleKind::kWord: return "word";
  }
  return "?";
}

// --- pretty ----------------------------------------------------------------

std::string Pretty(const DatExp& e) {
  return std::visit(
      Overloaded{
          [](const dat::BoolLit& n) -> std::string {
            return n.value ? "true" : "false";
          },
          [](const dat::NumLit& n) { return n.value.ToString(); },
          [](const dat::WordLit& n) { return Quote(n.value); },
          [](const dat::Ident& n) { return n.name; },
          [](const dat::Logical& n) {
            return "(" + Pretty(*n.lhs) + " " + std::string(ToString(n.op)) +
                   " " + Pretty(*n.rhs) + ")";
          },
          [](const dat::Not& n) { return "not (" + Pretty(*n.operand) + ")"; },
          [](const dat::Arith& n) {
            return "(" + Pretty(*n.lhs) + " " + std::string(ToString(n.op)) +
                   " " + Pretty(*n.rhs) + ")";
          },
          [](const dat::Compare& n) {
            return "(" + Pretty(*n.lhs) + " " + std::string(ToString(n.op)) +
                   " " + Pretty(*n.rhs) + ")";
          },
          [](const dat::Glue& n) {
            return "(" + Pretty(*n.lhs) + " glue " + Pretty(*n.rhs) + ")";
          },
          [](const dat::ListMake& n) {
            return "list " + Pretty(*n.element) + " ee";
          },
          [](const dat::Push& n) {
            return "push " + Pretty(*n.element) + " on " + Pretty(*n.list) +
                   " ee";
          },
          [](const dat::Top& n) { return "top (" + Pretty(*n.list) + ")"; },
          [](const dat::ArrayMake& n) {
            return "array " + Pretty(*n.element) + " ee";
          },
          [](const dat::AddToArr& n) {
            return "add-to-arr " + Pretty(*n.array) + " new " +
                   Pretty(*n.element) + " ee";
          },
          [](const dat::Index& n) {
            return Pretty(*n.array) + "[" + Pretty(*n.index) + "]";
          },
          [](const dat::RecordMake& n) {
            return "record " + n.attribute + " as " + Pretty(*n.value) + " ee";
          },
          [](const dat::ExpandRecord& n) {
            return "expand-record " + Pretty(*n.record) + " at " +
                   n.attribute + " by " + Pretty(*n.value) + " ee";
          },
          [](const dat::RemoveAttr& n) {
            return "remove-attr " + Pretty(*n.record) + " at " + n.attribute +
                   " ee";
          },
          [](const dat::Select& n) {
            return Pretty(*n.record) + "." + n.attribute;
          },
          [](const dat::IfThenElse& n) {
            return "if " + Pretty(*n.condition) + " then " +
                   Pretty(*n.then_branch) + " else " + Pretty(*n.else_branch) +
                   " fi";
          },
          [](const dat::FunCall& n) {
            return n.name + "(" + Join(n.args, ", ") + ")";
          },
      },
      e.node);
}

std::string Pretty(const TraExp& e) {
  return std::visit(
      Overloaded{
          [](const tra::BoolConst& n) -> std::string {
            return n.value ? "true" : "false";
          },
          [](const tra::NumConst& n) { return n.value.ToString(); },
          [](const tra::WordConst& n) { return Quote(n.value); },
          [](const tra::Current&) -> std::string { return "it"; },
          [](const tra::Attr& n) { return "record." + n.attribute; },
          [](const tra::Arith& n) {
            return "(" + Pretty(*n.lhs) + " " + std::string(ToString(n.op)) +
                   " " + Pretty(*n.rhs) + ")";
          },
          [](const tra::Compare& n) {
            return "(" + Pretty(*n.lhs) + " " + std::string(ToString(n.op)) +
                   " " + Pretty(*n.rhs) + ")";
          },
          [](const tra::Logical& n) {
            return "(" + Pretty(*n.lhs) + " " + std::string(ToString(n.op)) +
                   " " + Pretty(*n.rhs) + ")";
          },
          [](const tra::Not& n) { return "not (" + Pretty(*n.operand) + ")"; },
          [](const tra::BodyTest& n) { return std::string(ToString(n.kind)); },
          [](const tra::AllList& n) {
            return "all-list " + Pretty(*n.inner) + " ee";
          },
          [](const tra::Truth&) -> std::string { return "TT"; },
      },
      e.node);
}

std::string Pretty(const TypExp& e) {
  return std::visit(
      Overloaded{
          [](const typ::Simple& n) { return std::string(ToString(n.kind)); },
          [](const typ::Constant& n) { return n.name; },
          [](const typ::ListType& n) {
            return "list-type " + Pretty(*n.element) + " ee";
          },
          [](const typ::ArrayType& n) {
            return "array-type " + Pretty(*n.element) + " ee";
          },
          [](const typ::RecordType& n) {
            return "record-type " + n.attribute + " as " + Pretty(*n.element) +
                   " ee";
          },
          [](const typ::ExpandRecordType& n) {
            return "expand-record-type " + Pretty(*n.base) + " at " +
                   n.attribute + " by " + Pretty(*n.element) + " ee";
          },
          [](const typ::ReplaceTransfer& n) {
            return "replace-transfer-in " + Pretty(*n.base) + " by " +
                   Pretty(*n.transfer) + " ee";
          },
      },
      e.node);
}

std::string Pretty(const Instruction& i) {
  return std::visit(
      Overloaded{
          [](const ins::Assign& n) {
            return n.target + " := " + Pretty(*n.value);
          },
          [](const ins::YokeReplace& n) {
            return "yoke " + n.target + " := " + Pretty(*n.transfer);
          },
          [](const ins::Skip&) -> std::string { return "skip"; },
          [](const ins::Call& n) {
            return "call " + PrettyProcHead(n.procedure, n.ref_args, n.val_args);
          },
          [](const ins::ErrorHandler& n) {
            return "if " + Pretty(*n.condition) + " then " + Pretty(*n.body) +
                   " fi";
          },
          [](const ins::If& n) {
            return "if " + Pretty(*n.condition) + " then " +
                   Pretty(*n.then_branch) + " else " + Pretty(*n.else_branch) +
                   " fi";
          },
          [](const ins::While& n) {
            return "while " + Pretty(*n.condition) + " do " + Pretty(*n.body) +
                   " od";
          },
          [](const ins::Seq& n) {
            return Pretty(*n.first) + " ; " + Pretty(*n.second);
          },
      },
      i.node);
}

std::string Pretty(const Preamble& p) {
  return std::visit(
      Overloaded{
          [](const pre::VarDecl& n) {
            return "let " + n.name + " be " + Pretty(*n.type) + " tel";
          },
          [](const pre::TypeDef& n) {
            return "set " + n.name + " as " + Pretty(*n.type) + " tes";
          },
          [](const pre::Proc& n) { return PrettyProc(n.decl); },
          [](const pre::MultiProc& n) {
            std::vector<std::string> members;
            for (const auto& m : n.members) members.push_back(PrettyProc(m));
            return "begin multiproc " + Join(members, " ; ") +
                   " end multiproc";
          },
          [](const pre::Fun& n) {
            const FunDecl& d = n.decl;
            std::string head = d.name + " (";
            if (!d.params.empty()) head += "val " + PrettyFormals(d.params);
            head += ")";
            return "fun " + head + " " + Pretty(*d.body) + " return " +
                   Pretty(*d.result) + " as " + Pretty(*d.result_type);
          },
          [](const pre::Skip&) -> std::string { return "skip"; },
          [](const pre::Seq& n) {
            return Pretty(*n.first) + " ; " + Pretty(*n.second);
          },
      },
      p.node);
}

std::string Pretty(const Program& p) {
  return "begin-program " + Pretty(*p.preamble) + " ; " + Pretty(*p.body) +
         " end-program";
}

// --- dump ------------------------------------------------------------------

std::string DumpAst(const DatExp& e) {
  return std::visit(
      Overloaded{
          [](const dat::BoolLit& n) -> std::string {
            return n.value ? "(true)" : "(false)";
          },
          [](const dat::NumLit& n) { return "(num " + n.value.ToString() + ")"; },
          [](const dat::WordLit& n) { return "(word " + Quote(n.value) + ")"; },
          [](const dat::Ident& n) { return "(ide " + n.name + ")"; },
          [](const dat::Logical& n) {
            return "(" + std::string(ToString(n.op)) + " " + DumpAst(*n.lhs) +
                   " " + DumpAst(*n.rhs) + ")";
          },
          [](const dat::Not& n) { return "(not " + DumpAst(*n.operand) + ")"; },
          [](const dat::Arith& n) {
            return "(arith " + std::string(ToString(n.op)) + " " +
                   DumpAst(*n.lhs) + " " + DumpAst(*n.rhs) + ")";
          },
          [](const dat::Compare& n) {
            return "(compare " + std::string(ToString(n.op)) + " " +
                   DumpAst(*n.lhs) + " " + DumpAst(*n.rhs) + ")";
          },
          [](const dat::Glue& n) {
            return "(glue " + DumpAst(*n.lhs) + " " + DumpAst(*n.rhs) + ")";
          },
          [](const dat::ListMake& n) {
            return "(list-make " + DumpAst(*n.element) + ")";
          },
          [](const dat::Push& n) {
            return "(push " + DumpAst(*n.element) + " " + DumpAst(*n.list) +
                   ")";
          },
          [](const dat::Top& n) { return "(top " + DumpAst(*n.list) + ")"; },
          [](const dat::ArrayMake& n) {
            return "(array-make " + DumpAst(*n.element) + ")";
          },
          [](const dat::AddToArr& n) {
            return "(add-to-arr " + DumpAst(*n.array) + " " +
                   DumpAst(*n.element) + ")";
          },
          [](const dat::Index& n) {
            return "(index " + DumpAst(*n.array) + " " + DumpAst(*n.index) +
                   ")";
          },
          [](const dat::RecordMake& n) {
            return "(record-make " + n.attribute + " " + DumpAst(*n.value) +
                   ")";
          },
          [](const dat::ExpandRecord& n) {
            return "(expand-record " + DumpAst(*n.record) + " " + n.attribute +
                   " " + DumpAst(*n.value) + ")";
          },
          [](const dat::RemoveAttr& n) {
            return "(remove-attr " + DumpAst(*n.record) + " " + n.attribute +
                   ")";
          },
          [](const dat::Select& n) {
            return "(select " + DumpAst(*n.record) + " " + n.attribute + ")";
          },
          [](const dat::IfThenElse& n) {
            return "(if " + DumpAst(*n.condition) + " " +
                   DumpAst(*n.then_branch) + " " + DumpAst(*n.else_branch) +
                   ")";
          },
          [](const dat::FunCall& n) {
            return "(fun-call " + n.name + " " + DumpNames(n.args) + ")";
          },
      },
      e.node);
}

std::string DumpAst(const TraExp& e) {
  return std::visit(
      Overloaded{
          [](const tra::BoolConst& n) -> std::string {
            return n.value ? "(true)" : "(false)";
          },
          [](const tra::NumConst& n) {
            return "(num " + n.value.ToString() + ")";
          },
          [](const tra::WordConst& n) { return "(word " + Quote(n.value) + ")"; },
          [](const tra::Current&) -> std::string { return "(current)"; },
          [](const tra::Attr& n) { return "(attr " + n.attribute + ")"; },
          [](const tra::Arith& n) {
            return "(arith " + std::string(ToString(n.op)) + " " +
                   DumpAst(*n.lhs) + " " + DumpAst(*n.rhs) + ")";
          },
          [](const tra::Compare& n) {
            return "(compare " + std::string(ToString(n.op)) + " " +
                   DumpAst(*n.lhs) + " " + DumpAst(*n.rhs) + ")";
          },
          [](const tra::Logical& n) {
            return "(" + std::string(ToString(n.op)) + " " + DumpAst(*n.lhs) +
                   " " + DumpAst(*n.rhs) + ")";
          },
          [](const tra::Not& n) { return "(not " + DumpAst(*n.operand) + ")"; },
          [](const tra::BodyTest& n) {
            return "(body-test " + std::string(ToString(n.kind)) + ")";
          },
          [](const tra::AllList& n) {
            return "(all-list " + DumpAst(*n.inner) + ")";
          },
          [](const tra::Truth&) -> std::string { return "(TT)"; },
      },
      e.node);
}

std::string DumpAst(const TypExp& e) {
  return std::visit(
      Overloaded{
          [](const typ::Simple& n) {
            return "(" + std::string(ToString(n.kind)) + ")";
          },
          [](const typ::Constant& n) { return "(type-constant " + n.name + ")"; },
          [](const typ::ListType& n) {
            return "(list-type " + DumpAst(*n.element) + ")";
          },
          [](const typ::ArrayType& n) {
            return "(array-type " + DumpAst(*n.element) + ")";
          },
          [](const typ::RecordType& n) {
            return "(record-type " + n.attribute + " " + DumpAst(*n.element) +
                   ")";
          },
          [](const typ::ExpandRecordType& n) {
            return "(expand-record-type " + DumpAst(*n.base) + " " +
                   n.attribute + " " + DumpAst(*n.element) + ")";
          },
          [](const typ::ReplaceTransfer& n) {
            return "(replace-transfer-in " + DumpAst(*n.base) + " " +
                   DumpAst(*n.transfer) + ")";
          },
      },
      e.node);
}

std::string DumpAst(const Instruction& i) {
  return std::visit(
      Overloaded{
          [](const ins::Assign& n) {
            return "(assign " + n.target + " " + DumpAst(*n.value) + ")";
          },
          [](const ins::YokeReplace& n) {
            return "(yoke-replace " + n.target + " " + DumpAst(*n.transfer) +
                   ")";
          },
          [](const ins::Skip&) -> std::string { return "(skip)"; },
          [](const ins::Call& n) {
            return "(call " + n.procedure + " " + DumpNames(n.ref_args) + " " +
                   DumpNames(n.val_args) + ")";
          },
          [](const ins::ErrorHandler& n) {
            return "(error-handler " + DumpAst(*n.condition) + " " +
                   DumpAst(*n.body) + ")";
          },
          [](const ins::If& n) {
            return "(if " + DumpAst(*n.condition) + " " +
                   DumpAst(*n.then_branch) + " " + DumpAst(*n.else_branch) +
                   ")";
          },
          [](const ins::While& n) {
            return "(while " + DumpAst(*n.condition) + " " + DumpAst(*n.body) +
                   ")";
          },
          [](const ins::Seq& n) {
            return "(seq " + DumpAst(*n.first) + " " + DumpAst(*n.second) + ")";
          },
      },
      i.node);
}

std::string DumpAst(const Preamble& p) {
  return std::visit(
      Overloaded{
          [](const pre::VarDecl& n) {
            return "(var-decl " + n.name + " " + DumpAst(*n.type) + ")";
          },
          [](const pre::TypeDef& n) {
            return "(type-def " + n.name + " " + DumpAst(*n.type) + ")";
          },
          [](const pre::Proc& n) { return DumpProc(n.decl); },
          [](const pre::MultiProc& n) {
            std::string out = "(multiproc";
            for (const auto& m : n.members) out += " " + DumpProc(m);
            return out + ")";
          },
          [](const pre::Fun& n) {
            const FunDecl& d = n.decl;
            return "(fun " + d.name + " " + DumpFormals(d.params) + " " +
                   DumpAst(*d.body) + " " + DumpAst(*d.result) + " " +
                   DumpAst(*d.result_type) + ")";
          },
          [](const pre::Skip&) -> std::string { return "(skip)"; },
          [](const pre::Seq& n) {
            return "(seq " + DumpAst(*n.first) + " " + DumpAst(*n.second) + ")";
          },
      },
      p.node);
}

std::string DumpAst(const Program& p) {
  return "(program " + DumpAst(*p.preamble) + " " + DumpAst(*p.body) + ")";
}

}  // namespace lingua
