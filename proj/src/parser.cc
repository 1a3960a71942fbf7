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

#include <optional>
#include <set>

#include "lingua/syntax.h"

namespace lingua {
namespace {

std::string Describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::kEnd: return "end of input";
    case TokenKind::kWord: return "'" + t.text + "'";
    case TokenKind::kNumber: return "number " + t.text;
    case TokenKind::kIdentifier: return "identifier " + t.text;
    default: return "'" + t.text + "'";
  }
}

std::optional<ArithOp> AsArith(const Token& t) {
  if (t.kind != TokenKind::kPunct) return std::nullopt;
  if (t.text == "+") return ArithOp::kAdd;
  if (t.text == "-") return ArithOp::kSub;
  if (t.text == "*") return ArithOp::kMul;
  if (t.text == "/") return ArithOp::kDiv;
  return std::nullopt;
}

std::optional<CompareOp> AsCompare(const Token& t) {
  if (t.kind != TokenKind::kPunct) return std::nullopt;
  if (t.text == "=") return CompareOp::kEq;
  if (t.text == "<>") return CompareOp::kNe;
  if (t.text == "<") return CompareOp::kLt;
  if (t.text == "<=") return CompareOp::kLe;
  if (t.text == ">") return CompareOp::kGt;
  if (t.text == ">=") return CompareOp::kGe;
  return std::nullopt;
}

bool IsAdditive(ArithOp op) { return op == ArithOp::kAdd || op == ArithOp::kSub; }

// Binary operator forms shared by data and transfer expressions.
struct BinaryOp {
  enum class Kind { kLogical, kArith, kCompare, kGlue } kind;
  LogicalOp logical = LogicalOp::kAnd;
  ArithOp arith = ArithOp::kAdd;
  CompareOp compare = CompareOp::kEq;
};

class Parser {
 public:
  Parser(std::string_view source, SyntaxMode mode)
      : tokens_(Tokenize(source)), mode_(mode) {}

  template <class F>
  auto Whole(F parse) {
    auto result = parse();
    if (Peek().kind != TokenKind::kEnd) {
      throw SyntaxError(Peek().pos, "unexpected " + Describe(Peek()),
                        {"end of input"});
    }
    return result;
  }

  // --- programs ------------------------------------------------------------

  Program ParseProgram() {
    ExpectKeyword("begin-program");
    Program program = ParseProgramTail();
    ExpectKeyword("end-program");
    return program;
  }

  // --- instructions --------------------------------------------------------

  Instruction ParseInstructionSeq() {
    Instruction first = ParseInstructionAtom();
    if (AcceptPunct(";")) {
      return ins::Seq{first, ParseInstructionSeq()};
    }
    return first;
  }

  // --- data expressions ----------------------------------------------------

  DatExp ParseDat() {
    return colloquial() ? ParseDatOr() : ParseDatPostfix();
  }

  // --- transfer expressions ------------------------------------------------

  TraExp ParseTra() {
    return colloquial() ? ParseTraOr() : ParseTraPrimary();
  }

  // --- type expressions ----------------------------------------------------

  TypExp ParseTyp() {
    const Token& t = Peek();
    if (IsKeyword("boolean")) return Simple(SimpleKind::kBoolean);
    if (IsKeyword("number")) return Simple(SimpleKind::kNumber);
    if (IsKeyword("word")) return Simple(SimpleKind::kWord);
    if (t.kind == TokenKind::kIdentifier) {
      Advance();
      return typ::Constant{t.text};
    }
    if (AcceptKeyword("list-type")) {
      TypExp element = ParseTyp();
      ExpectKeyword("ee");
      return typ::ListType{element};
    }
    if (AcceptKeyword("array-type")) {
      TypExp element = ParseTyp();
      ExpectKeyword("ee");
      return typ::ArrayType{element};
    }
    if (AcceptKeyword("record-type")) {
      std::string attribute = ExpectIdentifier();
      ExpectKeyword("as");
      TypExp result = typ::RecordType{attribute, ParseTyp()};
      // Colloquial: record-type a as t1, b as t2, ... ee
      while (colloquial() && AcceptPunct(",")) {
        std::string next = ExpectIdentifier();
        ExpectKeyword("as");
        result = typ::ExpandRecordType{result, next, ParseTyp()};
      }
      ExpectKeyword("ee");
      return result;
    }
    if (AcceptKeyword("expand-record-type")) {
      TypExp base = ParseTyp();
      ExpectKeyword("at");
      std::string attribute = ExpectIdentifier();
      ExpectKeyword("by");
      TypExp element = ParseTyp();
      ExpectKeyword("ee");
      return typ::ExpandRecordType{base, attribute, element};
    }
    if (AcceptKeyword("replace-transfer-in")) {
      TypExp base = ParseTyp();
      ExpectKeyword("by");
      TraExp transfer = ParseTra();
      ExpectKeyword("ee");
      return typ::ReplaceTransfer{base, transfer};
    }
    throw Unexpected({"type expression"});
  }

 private:
  bool colloquial() const { return mode_ == SyntaxMode::kColloquial; }

  // --- token helpers -------------------------------------------------------

  const Token& Peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& Advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool IsKeyword(std::string_view kw, size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == TokenKind::kKeyword && t.text == kw;
  }
  bool IsPunct(std::string_view p, size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == TokenKind::kPunct && t.text == p;
  }
  bool AcceptKeyword(std::string_view kw) {
    if (!IsKeyword(kw)) return false;
    Advance();
    return true;
  }
  bool AcceptPunct(std::string_view p) {
    if (!IsPunct(p)) return false;
    Advance();
    return true;
  }
  void ExpectKeyword(std::string_view kw) {
    if (!AcceptKeyword(kw)) throw Unexpected({"'" + std::string(kw) + "'"});
  }
  void ExpectPunct(std::string_view p) {
    if (!AcceptPunct(p)) throw Unexpected({"'" + std::string(p) + "'"});
  }
  std::string ExpectIdentifier() {
    if (Peek().kind != TokenKind::kIdentifier) throw Unexpected({"identifier"});
    return Advance().text;
  }
  SyntaxError Unexpected(std::vector<std::string> expected) const {
    return SyntaxError(Peek().pos, "unexpected " + Describe(Peek()),
                       std::move(expected));
  }

  TypExp Simple(SimpleKind kind) {
    Advance();
    return typ::Simple{kind};
  }

  // --- programs and preambles ----------------------------------------------

  bool StartsDeclaration(size_t ahead) const {
    return IsKeyword("let", ahead) || IsKeyword("set", ahead) ||
           IsKeyword("proc", ahead) || IsKeyword("fun", ahead) ||
           (IsKeyword("begin", ahead) && IsKeyword("multiproc", ahead + 1));
  }

  // `pam ; ins` (the part between begin-program and end-program).
  Program ParseProgramTail() {
    if (colloquial() && !StartsDeclaration(0) && !IsKeyword("skip")) {
      // Colloquial: a program without declarations may omit the preamble.
      return Program{Preamble(pre::Skip{}), ParseInstructionSeq()};
    }
    Preamble preamble = ParsePreamble();
    ExpectPunct(";");
    return Program{preamble, ParseInstructionSeq()};
  }

  Preamble ParsePreamble() {
    Preamble first = ParsePreambleItem();
    if (IsPunct(";") && StartsDeclaration(1)) {
      Advance();
      return pre::Seq{first, ParsePreamble()};
    }
    return first;
  }

  Preamble ParsePreambleItem() {
    if (AcceptKeyword("skip")) return pre::Skip{};
    if (AcceptKeyword("let")) {
      std::string name = ExpectIdentifier();
      ExpectKeyword("be");
      TypExp type = ParseTyp();
      ExpectKeyword("tel");
      return pre::VarDecl{name, type};
    }
    if (AcceptKeyword("set")) {
      std::string name = ExpectIdentifier();
      ExpectKeyword("as");
      TypExp type = ParseTyp();
      ExpectKeyword("tes");
      return pre::TypeDef{name, type};
    }
    if (IsKeyword("proc")) return pre::Proc{ParseProcDecl()};
    if (AcceptKeyword("begin")) {
      ExpectKeyword("multiproc");
      std::vector<ProcDecl> members;
      members.push_back(ParseProcDecl());
      while (AcceptPunct(";")) members.push_back(ParseProcDecl());
      ExpectKeyword("end");
      ExpectKeyword("multiproc");
      return pre::MultiProc{std::move(members)};
    }
    if (AcceptKeyword("fun")) {
      std::string name = ExpectIdentifier();
      ExpectPunct("(");
      std::vector<FormalParam> params;
      if (!IsPunct(")")) {
        bool explicit_val = AcceptKeyword("val");
        if (!explicit_val && !colloquial()) throw Unexpected({"'val'", "')'"});
        if (!IsPunct(")")) params = ParseFormalList();
      }
      ExpectPunct(")");
      CheckDistinct(params, {});
      Program body = ParseBody();
      ExpectKeyword("return");
      DatExp result = ParseDat();
      ExpectKeyword("as");
      TypExp result_type = ParseTyp();
      return pre::Fun{FunDecl{name, std::move(params), body, result, result_type}};
    }
    throw Unexpected({"declaration", "'skip'"});
  }

  ProcDecl ParseProcDecl() {
    ExpectKeyword("proc");
    std::string name = ExpectIdentifier();
    ExpectPunct("(");
    std::optional<std::vector<FormalParam>> refs, vals;
    while (!IsPunct(")")) {
      if (!refs && AcceptKeyword("ref")) {
        refs = IsPunct(")") || IsKeyword("val") ? std::vector<FormalParam>{}
                                                : ParseFormalList();
      } else if (!vals && AcceptKeyword("val")) {
        vals = IsPunct(")") || IsKeyword("ref") ? std::vector<FormalParam>{}
                                                : ParseFormalList();
      } else {
        throw Unexpected({"'ref'", "'val'", "')'"});
      }
    }
    ExpectPunct(")");
    ProcDecl decl{name, refs.value_or(std::vector<FormalParam>{}),
                  vals.value_or(std::vector<FormalParam>{}), ParseBody()};
    CheckDistinct(decl.ref_params, decl.val_params);
    ExpectKeyword("end");
    ExpectKeyword("proc");
    return decl;
  }

  Program ParseBody() {
    if (IsKeyword("begin-program")) return ParseProgram();
    if (!colloquial()) throw Unexpected({"'begin-program'"});
    return Program{Preamble(pre::Skip{}), ParseInstructionSeq()};
  }

  // `a, b as t1, c as t2`: identifiers before each `as` share its type.
  std::vector<FormalParam> ParseFormalList() {
    std::vector<FormalParam> params;
    do {
      std::vector<std::string> names{ExpectIdentifier()};
      while (AcceptPunct(",")) names.push_back(ExpectIdentifier());
      ExpectKeyword("as");
      TypExp type = ParseTyp();
      for (auto& n : names) params.push_back(FormalParam{std::move(n), type});
    } while (AcceptPunct(","));
    return params;
  }

  void CheckDistinct(const std::vector<FormalParam>& a,
                     const std::vector<FormalParam>& b) const {
    std::set<std::string> seen;
    for (const auto* list : {&a, &b}) {
      for (const auto& p : *list) {
        if (!seen.insert(p.name).second) {
          throw SyntaxError(Peek().pos,
                            "duplicate formal parameter '" + p.name + "'");
        }
      }
    }
  }

  std::vector<std::string> ParseIdentifierList() {
    std::vector<std::string> names{ExpectIdentifier()};
    while (AcceptPunct(",")) names.push_back(ExpectIdentifier());
    return names;
  }

  // --- instructions --------------------------------------------------------

  Instruction ParseInstructionAtom() {
    const Token& t = Peek();
    if (t.kind == TokenKind::kIdentifier) {
      Advance();
      ExpectPunct(":=");
      return ins::Assign{t.text, ParseDat()};
    }
    if (AcceptKeyword("yoke")) {
      std::string target = ExpectIdentifier();
      ExpectPunct(":=");
      return ins::YokeReplace{target, ParseTra()};
    }
    if (AcceptKeyword("skip")) return ins::Skip{};
    if (AcceptKeyword("call")) {
      std::string name = ExpectIdentifier();
      ExpectPunct("(");
      std::optional<std::vector<std::string>> refs, vals;
      while (!IsPunct(")")) {
        if (!refs && AcceptKeyword("ref")) {
          refs = IsPunct(")") || IsKeyword("val") ? std::vector<std::string>{}
                                                  : ParseIdentifierList();
        } else if (!vals && AcceptKeyword("val")) {
          vals = IsPunct(")") || IsKeyword("ref") ? std::vector<std::string>{}
                                                  : ParseIdentifierList();
        } else {
          throw Unexpected({"'ref'", "'val'", "')'"});
        }
      }
      ExpectPunct(")");
      return ins::Call{name, refs.value_or(std::vector<std::string>{}),
                       vals.value_or(std::vector<std::string>{})};
    }
    if (AcceptKeyword("if")) {
      DatExp condition = ParseDat();
      ExpectKeyword("then");
      Instruction then_branch = ParseInstructionSeq();
      if (AcceptKeyword("else")) {
        Instruction else_branch = ParseInstructionSeq();
        ExpectKeyword("fi");
        return ins::If{condition, then_branch, else_branch};
      }
      ExpectKeyword("fi");
      return ins::ErrorHandler{condition, then_branch};
    }
    if (AcceptKeyword("while")) {
      DatExp condition = ParseDat();
      ExpectKeyword("do");
      Instruction body = ParseInstructionSeq();
      ExpectKeyword("od");
      return ins::While{condition, body};
    }
    throw Unexpected({"instruction"});
  }

  // --- binary operators ----------------------------------------------------

  std::optional<BinaryOp> PeekBinaryOp() const {
    const Token& t = Peek();
    if (t.kind == TokenKind::kKeyword) {
      if (t.text == "and") return BinaryOp{BinaryOp::Kind::kLogical, LogicalOp::kAnd};
      if (t.text == "or") return BinaryOp{BinaryOp::Kind::kLogical, LogicalOp::kOr};
      if (t.text == "glue") return BinaryOp{BinaryOp::Kind::kGlue};
      return std::nullopt;
    }
    if (auto a = AsArith(t)) {
      BinaryOp op{BinaryOp::Kind::kArith};
      op.arith = *a;
      return op;
    }
    if (auto c = AsCompare(t)) {
      BinaryOp op{BinaryOp::Kind::kCompare};
      op.compare = *c;
      return op;
    }
    return std::nullopt;
  }

  static DatExp MakeDat(const BinaryOp& op, DatExp lhs, DatExp rhs) {
    switch (op.kind) {
      case BinaryOp::Kind::kLogical: return dat::Logical{op.logical, lhs, rhs};
      case BinaryOp::Kind::kArith: return dat::Arith{op.arith, lhs, rhs};
      case BinaryOp::Kind::kCompare: return dat::Compare{op.compare, lhs, rhs};
      case BinaryOp::Kind::kGlue: return dat::Glue{lhs, rhs};
    }
    return lhs;
  }

  SyntaxError NoChaining() const {
    return SyntaxError(Peek().pos, "comparison operators do not chain");
  }

  // --- data expressions: colloquial precedence levels ----------------------

  DatExp ParseDatOr() {
    DatExp lhs = ParseDatAnd();
    if (AcceptKeyword("or")) return dat::Logical{LogicalOp::kOr, lhs, ParseDatOr()};
    return lhs;
  }

  DatExp ParseDatAnd() {
    DatExp lhs = ParseDatNot();
    if (AcceptKeyword("and")) {
      return dat::Logical{LogicalOp::kAnd, lhs, ParseDatAnd()};
    }
    return lhs;
  }

  DatExp ParseDatNot() {
    // `not (e)` is a primary; a bare `not` applies to a whole comparison.
    if (IsKeyword("not") && !IsPunct("(", 1)) {
      Advance();
      return dat::Not{ParseDatNot()};
    }
    return ParseDatCompare();
  }

  DatExp ParseDatCompare() {
    DatExp lhs = ParseDatGlue();
    if (auto op = AsCompare(Peek())) {
      Advance();
      DatExp rhs = ParseDatGlue();
      if (AsCompare(Peek())) throw NoChaining();
      return dat::Compare{*op, lhs, rhs};
    }
    return lhs;
  }

  DatExp ParseDatGlue() {
    DatExp lhs = ParseDatAdditive();
    while (AcceptKeyword("glue")) lhs = dat::Glue{lhs, ParseDatAdditive()};
    return lhs;
  }

  DatExp ParseDatAdditive() {
    DatExp lhs = ParseDatMultiplicative();
    while (auto op = AsArith(Peek())) {
      if (!IsAdditive(*op)) break;
      Advance();
      lhs = dat::Arith{*op, lhs, ParseDatMultiplicative()};
    }
    return lhs;
  }

  DatExp ParseDatMultiplicative() {
    DatExp lhs = ParseDatPostfix();
    while (auto op = AsArith(Peek())) {
      if (IsAdditive(*op)) break;
      Advance();
      lhs = dat::Arith{*op, lhs, ParseDatPostfix()};
    }
    return lhs;
  }

  DatExp ParseDatPostfix() {
    DatExp e = ParseDatPrimary();
    while (true) {
      if (AcceptPunct("[")) {
        DatExp index = ParseDat();
        ExpectPunct("]");
        e = dat::Index{e, index};
      } else if (AcceptPunct(".")) {
        e = dat::Select{e, ExpectIdentifier()};
      } else {
        return e;
      }
    }
  }

  std::optional<Decimal> AcceptNumber() {
    bool negative = IsPunct("-") && Peek(1).kind == TokenKind::kNumber;
    if (!negative && Peek().kind != TokenKind::kNumber) return std::nullopt;
    if (negative) Advance();
    std::string text = Advance().text;
    auto value = Decimal::Parse(negative ? "-" + text : text);
    return value;
  }

  DatExp ParseDatPrimary() {
    if (auto n = AcceptNumber()) return dat::NumLit{*n};
    const Token& t = Peek();
    if (t.kind == TokenKind::kWord) {
      Advance();
      return dat::WordLit{t.text};
    }
    if (t.kind == TokenKind::kIdentifier) {
      Advance();
      if (AcceptPunct("(")) {
        std::vector<std::string> args;
        if (!IsPunct(")")) args = ParseIdentifierList();
        ExpectPunct(")");
        return dat::FunCall{t.text, std::move(args)};
      }
      return dat::Ident{t.text};
    }
    if (AcceptKeyword("true")) return dat::BoolLit{true};
    if (AcceptKeyword("false")) return dat::BoolLit{false};
    if (AcceptPunct("(")) {
      if (colloquial()) {
        DatExp inner = ParseDat();
        ExpectPunct(")");
        return inner;
      }
      DatExp lhs = ParseDat();
      auto op = PeekBinaryOp();
      if (!op) throw Unexpected({"binary operator"});
      Advance();
      DatExp rhs = ParseDat();
      ExpectPunct(")");
      return MakeDat(*op, lhs, rhs);
    }
    if (AcceptKeyword("not")) {
      ExpectPunct("(");
      DatExp operand = ParseDat();
      ExpectPunct(")");
      return dat::Not{operand};
    }
    if (AcceptKeyword("list")) {
      DatExp element = ParseDat();
      ExpectKeyword("ee");
      return dat::ListMake{element};
    }
    if (AcceptKeyword("push")) {
      DatExp element = ParseDat();
      ExpectKeyword("on");
      DatExp list = ParseDat();
      ExpectKeyword("ee");
      return dat::Push{element, list};
    }
    if (AcceptKeyword("top")) {
      ExpectPunct("(");
      DatExp list = ParseDat();
      ExpectPunct(")");
      return dat::Top{list};
    }
    if (AcceptKeyword("array")) {
      if (colloquial() && AcceptPunct("[")) {
        // array [e1, ..., en] == add-to-arr ... add-to-arr array e1 ee
        //                        new e2 ee ... new en ee
        DatExp result = dat::ArrayMake{ParseDat()};
        while (AcceptPunct(",")) result = dat::AddToArr{result, ParseDat()};
        ExpectPunct("]");
        return result;
      }
      DatExp element = ParseDat();
      ExpectKeyword("ee");
      return dat::ArrayMake{element};
    }
    if (AcceptKeyword("add-to-arr")) {
      DatExp array = ParseDat();
      ExpectKeyword("new");
      DatExp element = ParseDat();
      ExpectKeyword("ee");
      return dat::AddToArr{array, element};
    }
    if (AcceptKeyword("record")) {
      std::string attribute = ExpectIdentifier();
      ExpectKeyword("as");
      DatExp value = ParseDat();
      ExpectKeyword("ee");
      return dat::RecordMake{attribute, value};
    }
    if (AcceptKeyword("expand-record")) {
      DatExp record = ParseDat();
      ExpectKeyword("at");
      std::string attribute = ExpectIdentifier();
      ExpectKeyword("by");
      DatExp value = ParseDat();
      ExpectKeyword("ee");
      return dat::ExpandRecord{record, attribute, value};
    }
    if (AcceptKeyword("remove-attr")) {
      DatExp record = ParseDat();
      ExpectKeyword("at");
      std::string attribute = ExpectIdentifier();
      ExpectKeyword("ee");
      return dat::RemoveAttr{record, attribute};
    }
    if (AcceptKeyword("if")) {
      DatExp condition = ParseDat();
      ExpectKeyword("then");
      DatExp then_branch = ParseDat();
      ExpectKeyword("else");
      DatExp else_branch = ParseDat();
      ExpectKeyword("fi");
      return dat::IfThenElse{condition, then_branch, else_branch};
    }
    throw Unexpected({"data expression"});
  }

  // --- transfer expressions ------------------------------------------------

  static TraExp MakeTra(const BinaryOp& op, TraExp lhs, TraExp rhs) {
    switch (op.kind) {
      case BinaryOp::Kind::kLogical: return tra::Logical{op.logical, lhs, rhs};
      case BinaryOp::Kind::kArith: return tra::Arith{op.arith, lhs, rhs};
      case BinaryOp::Kind::kCompare: return tra::Compare{op.compare, lhs, rhs};
      case BinaryOp::Kind::kGlue: break;
    }
    return lhs;
  }

  TraExp ParseTraOr() {
    TraExp lhs = ParseTraAnd();
    if (AcceptKeyword("or")) return tra::Logical{LogicalOp::kOr, lhs, ParseTraOr()};
    return lhs;
  }

  TraExp ParseTraAnd() {
    TraExp lhs = ParseTraNot();
    if (AcceptKeyword("and")) {
      return tra::Logical{LogicalOp::kAnd, lhs, ParseTraAnd()};
    }
    return lhs;
  }

  TraExp ParseTraNot() {
    if (IsKeyword("not") && !IsPunct("(", 1)) {
      Advance();
      return tra::Not{ParseTraNot()};
    }
    return ParseTraCompare();
  }

  TraExp ParseTraCompare() {
    TraExp lhs = ParseTraAdditive();
    if (auto op = AsCompare(Peek())) {
      Advance();
      TraExp rhs = ParseTraAdditive();
      if (AsCompare(Peek())) throw NoChaining();
      return tra::Compare{*op, lhs, rhs};
    }
    return lhs;
  }

  TraExp ParseTraAdditive() {
    TraExp lhs = ParseTraMultiplicative();
    while (auto op = AsArith(Peek())) {
      if (!IsAdditive(*op)) break;
      Advance();
      lhs = tra::Arith{*op, lhs, ParseTraMultiplicative()};
    }
    return lhs;
  }

  TraExp ParseTraMultiplicative() {
    TraExp lhs = ParseTraPrimary();
    while (auto op = AsArith(Peek())) {
      if (IsAdditive(*op)) break;
      Advance();
      lhs = tra::Arith{*op, lhs, ParseTraPrimary()};
    }
    return lhs;
  }

  TraExp ParseTraPrimary() {
    if (auto n = AcceptNumber()) return tra::NumConst{*n};
    const Token& t = Peek();
    if (t.kind == TokenKind::kWord) {
      Advance();
      return tra::WordConst{t.text};
    }
    if (AcceptKeyword("true")) return tra::BoolConst{true};
    if (AcceptKeyword("false")) return tra::BoolConst{false};
    if (AcceptKeyword("it")) return tra::Current{};
    if (AcceptKeyword("TT")) return tra::Truth{};
    if (AcceptKeyword("boolean")) return tra::BodyTest{SimpleKind::kBoolean};
    if (AcceptKeyword("number")) return tra::BodyTest{SimpleKind::kNumber};
    if (AcceptKeyword("word")) return tra::BodyTest{SimpleKind::kWord};
    if (AcceptKeyword("record")) {
      ExpectPunct(".");
      return tra::Attr{ExpectIdentifier()};
    }
    if (AcceptKeyword("all-list")) {
      TraExp inner = ParseTra();
      ExpectKeyword("ee");
      return tra::AllList{inner};
    }
    if (AcceptKeyword("not")) {
      ExpectPunct("(");
      TraExp operand = ParseTra();
      ExpectPunct(")");
      return tra::Not{operand};
    }
    if (AcceptPunct("(")) {
      if (colloquial()) {
        TraExp inner = ParseTra();
        ExpectPunct(")");
        return inner;
      }
      TraExp lhs = ParseTra();
      auto op = PeekBinaryOp();
      if (!op || op->kind == BinaryOp::Kind::kGlue) {
        throw Unexpected({"binary operator"});
      }
      Advance();
      TraExp rhs = ParseTra();
      ExpectPunct(")");
      return MakeTra(*op, lhs, rhs);
    }
    throw Unexpected({"transfer expression"});
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  SyntaxMode mode_;
};

}  // namespace

Program ParseProgram(std::string_view source, SyntaxMode mode) {
  Parser p(source, mode);
  return p.Whole([&] { return p.ParseProgram(); });
}

Instruction ParseInstruction(std::string_view source, SyntaxMode mode) {
  Parser p(source, mode);
  return p.Whole([&] { return p.ParseInstructionSeq(); });
}

DatExp ParseDatExp(std::string_view source, SyntaxMode mode) {
  Parser p(source, mode);
  return p.Whole([&] { return p.ParseDat(); });
}

TraExp ParseTraExp(std::string_view source, SyntaxMode mode) {
  Parser p(source, mode);
  return p.Whole([&] { return p.ParseTra(); });
}

TypExp ParseTypExp(std::string_view source, SyntaxMode mode) {
  Parser p(source, mode);
  return p.Whole([&] { return p.ParseTyp(); });
}

}  // namespace lingua
