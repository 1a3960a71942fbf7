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

#include <cctype>
#include <set>
#include <sstream>

#include "lingua/algebra.h"

namespace lingua::algebra {

LangExp LangExp::Terminal(std::string word) {
  LangExp e;
  e.kind = Kind::kTerminal;
  e.text = std::move(word);
  return e;
}

LangExp LangExp::Nonterminal(std::string name) {
  LangExp e;
  e.kind = Kind::kNonterminal;
  e.text = std::move(name);
  return e;
}

LangExp LangExp::Union(std::vector<LangExp> alternatives) {
  LangExp e;
  e.kind = Kind::kUnion;
  e.parts = std::move(alternatives);
  return e;
}

LangExp LangExp::Concat(std::vector<LangExp> items) {
  LangExp e;
  e.kind = Kind::kConcat;
  e.parts = std::move(items);
  return e;
}

LangExp LangExp::Power(LangExp base, int n) {
  LangExp e;
  e.kind = Kind::kPower;
  e.parts.push_back(std::move(base));
  e.exponent = n;
  return e;
}

LangExp LangExp::Star(LangExp base) {
  LangExp e;
  e.kind = Kind::kStar;
  e.parts.push_back(std::move(base));
  return e;
}

LangExp LangExp::Plus(LangExp base) {
  LangExp e;
  e.kind = Kind::kPlus;
  e.parts.push_back(std::move(base));
  return e;
}

const LangExp* Grammar::Find(std::string_view nonterminal) const {
  for (const auto& eq : equations) {
    if (eq.nonterminal == nonterminal) return &eq.rhs;
  }
  return nullptr;
}

// --- parsing -------------------------------------------------------------------

namespace {

bool IsNameStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class LineParser {
 public:
  LineParser(std::string_view line, int line_no)
      : s_(line), line_no_(line_no) {}

  Equation ParseEquation() {
    Skip();
    std::string nt = Name();
    Skip();
    if (!Accept('=')) Fail("expected '='");
    LangExp rhs = ParseUnion();
    Skip();
    if (i_ != s_.size()) Fail("unexpected character");
    if (rhs.kind != LangExp::Kind::kUnion) rhs = LangExp::Union({rhs});
    return {nt, std::move(rhs)};
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw AlgebraError(line_no_, message + " at column " +
                                     std::to_string(i_ + 1));
  }
  void Skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      ++i_;
    }
  }
  bool Accept(char c) {
    Skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool AtItemStart() {
    Skip();
    return i_ < s_.size() &&
           (s_[i_] == '"' || s_[i_] == '(' || IsNameStart(s_[i_]));
  }
  std::string Name() {
    if (i_ >= s_.size() || !IsNameStart(s_[i_])) Fail("expected a name");
    size_t start = i_;
    while (i_ < s_.size() && IsNameChar(s_[i_])) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  // Empty alternatives list only where a ')' or the end of line follows.
  LangExp ParseUnion() {
    std::vector<LangExp> alternatives;
    Skip();
    if (i_ == s_.size() || s_[i_] == ')') return LangExp::Empty();
    alternatives.push_back(ParseConcat());
    while (Accept('|')) alternatives.push_back(ParseConcat());
    return LangExp::Union(std::move(alternatives));
  }

  LangExp ParseConcat() {
    std::vector<LangExp> items;
    while (AtItemStart()) items.push_back(ParsePostfix());
    if (items.empty()) Fail("expected a terminal, nonterminal or '('");
    if (items.size() == 1) return std::move(items[0]);
    return LangExp::Concat(std::move(items));
  }

  LangExp ParsePostfix() {
    LangExp e = ParseAtom();
    while (true) {
      if (Accept('*')) {
        e = LangExp::Star(std::move(e));
      } else if (Accept('+')) {
        e = LangExp::Plus(std::move(e));
      } else if (Accept('^')) {
        Skip();
        size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
          ++i_;
        }
        if (start == i_ || i_ - start > 6) Fail("expected an exponent");
        e = LangExp::Power(std::move(e),
                           std::stoi(std::string(s_.substr(start, i_ - start))));
      } else {
        return e;
      }
    }
  }

  LangExp ParseAtom() {
    Skip();
    if (Accept('(')) {
      LangExp inner = ParseUnion();
      if (!Accept(')')) Fail("expected ')'");
      if (inner.kind == LangExp::Kind::kUnion && inner.parts.size() == 1) {
        return std::move(inner.parts[0]);
      }
      return inner;
    }
    if (i_ < s_.size() && s_[i_] == '"') {
      ++i_;
      std::string word;
      while (true) {
        if (i_ >= s_.size()) Fail("unterminated terminal");
        char c = s_[i_++];
        if (c == '"') break;
        if (c == '\\') {
          if (i_ >= s_.size()) Fail("unterminated terminal");
          c = s_[i_++];
        }
        word += c;
      }
      return LangExp::Terminal(std::move(word));
    }
    return LangExp::Nonterminal(Name());
  }

  std::string_view s_;
  size_t i_ = 0;
  int line_no_;
};

void CollectNonterminals(const LangExp& e, std::set<std::string>& out) {
  if (e.kind == LangExp::Kind::kNonterminal) out.insert(e.text);
  for (const auto& p : e.parts) CollectNonterminals(p, out);
}

void Validate(const Grammar& g) {
  std::set<std::string> defined;
  for (const auto& eq : g.equations) {
    if (!defined.insert(eq.nonterminal).second) {
      throw AlgebraError(0, "duplicate equation for " + eq.nonterminal);
    }
  }
  for (const auto& eq : g.equations) {
    std::set<std::string> used;
    CollectNonterminals(eq.rhs, used);
    for (const auto& nt : used) {
      if (!defined.count(nt)) {
        throw AlgebraError(0, "nonterminal " + nt + " has no equation");
      }
    }
  }
}

// --- formatting ------------------------------------------------------------------

std::string Quote(const std::string& word) {
  std::string out = "\"";
  for (char c : word) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string FormatExp(const LangExp& e, bool atomic);

std::string FormatAlternatives(const LangExp& e) {
  std::string out;
  for (size_t i = 0; i < e.parts.size(); ++i) {
    if (i > 0) out += " | ";
    out += FormatExp(e.parts[i], false);
  }
  return out;
}

// `atomic` asks for a form that can carry a postfix operator or sit inside a
// juxtaposition.
std::string FormatExp(const LangExp& e, bool atomic) {
  switch (e.kind) {
    case LangExp::Kind::kTerminal: return Quote(e.text);
    case LangExp::Kind::kNonterminal: return e.text;
    case LangExp::Kind::kUnion:
      return "(" + FormatAlternatives(e) + ")";
    case LangExp::Kind::kConcat: {
      std::string out;
      for (size_t i = 0; i < e.parts.size(); ++i) {
        if (i > 0) out += " ";
        out += FormatExp(e.parts[i], true);
      }
      return atomic ? "(" + out + ")" : out;
    }
    case LangExp::Kind::kPower:
      return FormatExp(e.parts[0], true) + "^" + std::to_string(e.exponent);
    case LangExp::Kind::kStar: return FormatExp(e.parts[0], true) + "*";
    case LangExp::Kind::kPlus: return FormatExp(e.parts[0], true) + "+";
  }
  return "";
}

}  // namespace

Grammar ParseGrammar(std::string_view text) {
  Grammar g;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    g.equations.push_back(LineParser(line, line_no).ParseEquation());
  }
  Validate(g);
  return g;
}

std::string FormatGrammar(const Grammar& g) {
  std::string out;
  for (const auto& eq : g.equations) {
    out += eq.nonterminal + " =";
    const LangExp& rhs = eq.rhs;
    if (rhs.kind == LangExp::Kind::kUnion) {
      if (!rhs.parts.empty()) out += " " + FormatAlternatives(rhs);
    } else {
      out += " " + FormatExp(rhs, false);
    }
    out += "\n";
  }
  return out;
}

// --- bounded least solutions ---------------------------------------------------

namespace {

class Slicer {
 public:
  explicit Slicer(const EnumerateOptions& options) : options_(options) {}

  bool Admit(const std::string& w) const {
    return w.size() <= options_.max_length &&
           (!options_.factor_filter || options_.factor_filter(w));
  }

  Language Concat(const Language& a, const Language& b) const {
    Language out;
    for (const auto& x : a) {
      for (const auto& y : b) {
        if (x.size() + y.size() > options_.max_length) break;  // shortlex
        std::string w = x + y;
        if (Admit(w)) out.insert(std::move(w));
      }
    }
    return out;
  }

  // P^0 | P^1 | ..., or from P^1 when `plus`.
  Language Closure(const Language& p, bool plus) const {
    Language all;
    Language frontier;
    if (plus) {
      frontier = p;
    } else if (Admit("")) {
      frontier.insert("");
    }
    all = frontier;
    while (!frontier.empty()) {
      Language next;
      for (const auto& w : Concat(frontier, p)) {
        if (all.insert(w).second) next.insert(w);
      }
      frontier = std::move(next);
    }
    return all;
  }

  Language Eval(const LangExp& e, const Solution& current) const {
    switch (e.kind) {
      case LangExp::Kind::kTerminal: {
        Language out;
        if (Admit(e.text)) out.insert(e.text);
        return out;
      }
      case LangExp::Kind::kNonterminal:
        return current.at(e.text);
      case LangExp::Kind::kUnion: {
        Language out;
        for (const auto& p : e.parts) {
          Language l = Eval(p, current);
          out.insert(l.begin(), l.end());
        }
        return out;
      }
      case LangExp::Kind::kConcat: {
        Language out;
        if (Admit("")) out.insert("");
        for (const auto& p : e.parts) {
          out = Concat(out, Eval(p, current));
          if (out.empty()) break;
        }
        return out;
      }
      case LangExp::Kind::kPower: {
        Language base = Eval(e.parts[0], current);
        Language out;
        if (Admit("")) out.insert("");
        for (int i = 0; i < e.exponent && !out.empty(); ++i) {
          out = Concat(out, base);
        }
        return out;
      }
      case LangExp::Kind::kStar:
        return Closure(Eval(e.parts[0], current), false);
      case LangExp::Kind::kPlus:
        return Closure(Eval(e.parts[0], current), true);
    }
    return {};
  }

 private:
  const EnumerateOptions& options_;
};

}  // namespace

Solution SolveBounded(const Grammar& g, const EnumerateOptions& options) {
  Validate(g);
  Slicer slicer(options);
  const auto& eqs = g.equations;
  const int n = static_cast<int>(eqs.size());

  Solution current;
  for (const auto& eq : eqs) current[eq.nonterminal];
  if (options.on_iterate) options.on_iterate(current);

  std::vector<Language> next(eqs.size());
  while (true) {
    // Jacobi step: every equation reads only the previous iterate, so the
    // equations are independent and the result does not depend on the order
    // in which they are evaluated.
    if (options.execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < n; ++i) next[i] = slicer.Eval(eqs[i].rhs, current);
    } else {
      for (int i = 0; i < n; ++i) next[i] = slicer.Eval(eqs[i].rhs, current);
    }
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      Language& slot = current[eqs[i].nonterminal];
      if (slot != next[i]) {
        slot = std::move(next[i]);
        changed = true;
      }
    }
    if (!changed) return current;
    if (options.on_iterate) options.on_iterate(current);
  }
}

Language Enumerate(const Grammar& g, const std::string& nonterminal,
                   size_t max_length, Execution execution) {
  if (g.Find(nonterminal) == nullptr) {
    throw AlgebraError(0, "unknown nonterminal " + nonterminal);
  }
  EnumerateOptions options;
  options.max_length = max_length;
  options.execution = execution;
  return SolveBounded(g, options).at(nonterminal);
}

bool Member(const Grammar& g, const std::string& nonterminal,
            const std::string& word) {
  if (g.Find(nonterminal) == nullptr) {
    throw AlgebraError(0, "unknown nonterminal " + nonterminal);
  }
  // Every word taking part in a derivation of `word` is one of its factors.
  EnumerateOptions options;
  options.max_length = word.size();
  options.factor_filter = [&word](const std::string& w) {
    return word.find(w) != std::string::npos;
  };
  return SolveBounded(g, options).at(nonterminal).count(word) > 0;
}

}  // namespace lingua::algebra
