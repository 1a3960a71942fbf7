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

#ifndef LINGUA_MCCARTHY_H_
#define LINGUA_MCCARTHY_H_

#include <array>
#include <string_view>

namespace lingua {

// Three-valued truth: ee stands for an error or a non-terminating
// computation. The operators below evaluate their arguments left to right
// and never look at the right argument once the left one decides the result.
enum class TriBool { kTrue, kFalse, kError };

inline constexpr std::array<TriBool, 3> kAllTriBools = {
    TriBool::kTrue, TriBool::kFalse, TriBool::kError};

constexpr TriBool NotM(TriBool p) {
  switch (p) {
    case TriBool::kTrue:
      return TriBool::kFalse;
    case TriBool::kFalse:
      return TriBool::kTrue;
    case TriBool::kError:
      return TriBool::kError;
  }
  return TriBool::kError;
}

constexpr TriBool AndM(TriBool p, TriBool q) {
  switch (p) {
    case TriBool::kTrue:
      return q;
    case TriBool::kFalse:
      return TriBool::kFalse;
    case TriBool::kError:
      return TriBool::kError;
  }
  return TriBool::kError;
}

constexpr TriBool OrM(TriBool p, TriBool q) {
  switch (p) {
    case TriBool::kTrue:
      return TriBool::kTrue;
    case TriBool::kFalse:
      return q;
    case TriBool::kError:
      return TriBool::kError;
  }
  return TriBool::kError;
}

constexpr TriBool ImpliesM(TriBool p, TriBool q) { return OrM(NotM(p), q); }

// True when `p` alone fixes the value of `p and-m q` / `p or-m q`.
constexpr bool AndDecidedBy(TriBool p) { return p != TriBool::kTrue; }
constexpr bool OrDecidedBy(TriBool p) { return p != TriBool::kFalse; }

constexpr TriBool FromBool(bool b) {
  return b ? TriBool::kTrue : TriBool::kFalse;
}

constexpr std::string_view ToString(TriBool p) {
  switch (p) {
    case TriBool::kTrue:
      return "tt";
    case TriBool::kFalse:
      return "ff";
    case TriBool::kError:
      return "ee";
  }
  return "ee";
}

}  // namespace lingua

#endif  // LINGUA_MCCARTHY_H_
