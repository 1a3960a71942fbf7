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

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lingua/algebra.h"

namespace lingua::algebra {
namespace {

std::vector<std::string> SplitWords(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

bool IsSortName(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

}  // namespace

Signature ParseSignature(std::string_view text) {
  Signature sig;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::vector<std::string> w = SplitWords(line);
    if (w.empty() || w[0][0] == '#') continue;
    if (w[0] == "sort") {
      if (w.size() != 2 || !IsSortName(w[1])) {
        throw AlgebraError(line_no, "expected 'sort <Name>'");
      }
      if (std::find(sig.sorts.begin(), sig.sorts.end(), w[1]) !=
          sig.sorts.end()) {
        throw AlgebraError(line_no, "duplicate sort " + w[1]);
      }
      sig.sorts.push_back(w[1]);
      continue;
    }
    if (w[0] != "ctor") {
      throw AlgebraError(line_no, "expected 'sort' or 'ctor'");
    }
    // ctor <name> : S1 x ... x Sn -> S
    if (w.size() < 5 || w[2] != ":" || w[w.size() - 2] != "->") {
      throw AlgebraError(line_no, "expected 'ctor <name> : <args> -> <Sort>'");
    }
    Constructor c{w[1], {}, w.back()};
    if (c.name.find_first_of("\"\\") != std::string::npos) {
      throw AlgebraError(line_no, "constructor names may not contain quotes");
    }
    for (size_t i = 3; i + 2 < w.size(); ++i) {
      bool separator_slot = (i - 3) % 2 == 1;
      if (separator_slot != (w[i] == "x")) {
        throw AlgebraError(line_no, "malformed argument list");
      }
      if (!separator_slot) c.args.push_back(w[i]);
    }
    if (w.size() > 5 && (w.size() - 4) % 2 != 0) {
      throw AlgebraError(line_no, "malformed argument list");
    }
    for (const auto& s : c.args) {
      if (std::find(sig.sorts.begin(), sig.sorts.end(), s) == sig.sorts.end()) {
        throw AlgebraError(line_no, "undeclared sort " + s);
      }
    }
    if (std::find(sig.sorts.begin(), sig.sorts.end(), c.result) ==
        sig.sorts.end()) {
      throw AlgebraError(line_no, "undeclared sort " + c.result);
    }
    sig.constructors.push_back(std::move(c));
  }
  return sig;
}

std::string FormatSignature(const Signature& sig) {
  std::string out;
  for (const auto& s : sig.sorts) out += "sort " + s + "\n";
  for (const auto& c : sig.constructors) {
    out += "ctor " + c.name + " :";
    for (size_t i = 0; i < c.args.size(); ++i) {
      out += (i == 0 ? " " : " x ") + c.args[i];
    }
    out += " -> " + c.result + "\n";
  }
  return out;
}

std::map<std::string, bool> ReachableSorts(const Signature& sig) {
  std::map<std::string, bool> reachable;
  for (const auto& s : sig.sorts) reachable[s] = false;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& c : sig.constructors) {
      if (reachable[c.result]) continue;
      bool all = std::all_of(c.args.begin(), c.args.end(),
                             [&](const std::string& s) { return reachable[s]; });
      if (all) reachable[c.result] = changed = true;
    }
  }
  return reachable;
}

Grammar DeriveAbstractSyntax(const Signature& sig) {
  Grammar g;
  for (const auto& sort : sig.sorts) {
    std::vector<LangExp> alternatives;
    for (const auto& c : sig.constructors) {
      if (c.result != sort) continue;
      if (c.args.empty()) {
        alternatives.push_back(LangExp::Terminal(c.name));
        continue;
      }
      std::vector<LangExp> items{LangExp::Terminal(c.name),
                                 LangExp::Terminal("(")};
      for (size_t i = 0; i < c.args.size(); ++i) {
        if (i > 0) items.push_back(LangExp::Terminal(","));
        items.push_back(LangExp::Nonterminal(c.args[i]));
      }
      items.push_back(LangExp::Terminal(")"));
      alternatives.push_back(LangExp::Concat(std::move(items)));
    }
    g.equations.push_back({sort, LangExp::Union(std::move(alternatives))});
  }
  return g;
}

}  // namespace lingua::algebra
