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

#ifndef LINGUA_SEMANTICS_H_
#define LINGUA_SEMANTICS_H_

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "lingua/ast.h"
#include "lingua/domains.h"
#include "lingua/state.h"

namespace lingua {

// Step budget. One unit is spent per data expression and instruction node
// visited, so every run terminates.
class Fuel {
 public:
  explicit Fuel(uint64_t budget) : remaining_(budget) {}

  uint64_t remaining() const { return remaining_; }
  uint64_t used() const { return used_; }

  // Spends one unit. Returns false once the budget is gone.
  bool TryConsume() {
    if (remaining_ == 0) return false;
    --remaining_;
    ++used_;
    return true;
  }

 private:
  uint64_t remaining_;
  uint64_t used_ = 0;
};

// Divergence made observable. Never confused with an abstract error.
struct OutOfFuel {
  uint64_t steps = 0;
  bool operator==(const OutOfFuel&) const = default;
};

using Outcome = std::variant<State, OutOfFuel>;
using ExpOutcome = std::variant<CompositeOrError, OutOfFuel>;
using TypeOrError = std::variant<Type, AbstractError>;

inline bool IsOutOfFuel(const Outcome& o) {
  return std::holds_alternative<OutOfFuel>(o);
}
inline bool IsOutOfFuel(const ExpOutcome& o) {
  return std::holds_alternative<OutOfFuel>(o);
}

// Called after every instruction other than a sequence, with the state the
// instruction produced.
using Observer = std::function<void(const Instruction&, const State&)>;

class Interpreter {
 public:
  explicit Interpreter(Limits limits = {}, Observer observer = {})
      : limits_(std::move(limits)), observer_(std::move(observer)) {}

  const Limits& limits() const { return limits_; }

  ExpOutcome EvalDataExp(const DatExp& dae, const State& sta, Fuel& fuel) const;
  // Transfers do not depend on the state.
  Transfer EvalTransferExp(const TraExp& tre) const { return Transfer(tre); }
  TypeOrError EvalTypeExp(const TypExp& tex, const State& sta) const;

  Outcome ExecAssign(const std::string& target, const DatExp& dae,
                     const State& sta, Fuel& fuel) const;
  Outcome ExecInstruction(const Instruction& ins, const State& sta,
                          Fuel& fuel) const;
  Outcome ExecPreamble(const Preamble& pam, const State& sta, Fuel& fuel) const;
  Outcome CallImperative(const std::string& name,
                         const std::vector<std::string>& ref_args,
                         const std::vector<std::string>& val_args,
                         const State& sta, Fuel& fuel) const;
  ExpOutcome CallFunctional(const std::string& name,
                            const std::vector<std::string>& args,
                            const State& sta, Fuel& fuel) const;
  Outcome ExecProgram(const Program& prog, const State& sta, Fuel& fuel) const;

  // Runs a program from the initial state.
  Outcome Run(const Program& prog, Fuel& fuel) const {
    return ExecProgram(prog, InitialState(), fuel);
  }

 private:
  class Impl;

  Limits limits_;
  Observer observer_;
};

}  // namespace lingua

#endif  // LINGUA_SEMANTICS_H_
