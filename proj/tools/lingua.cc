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

// Command-line driver: run, parse, restore, eval and grammar tools.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "lingua/algebra.h"
#include "lingua/semantics.h"
#include "lingua/syntax.h"

namespace {

using namespace lingua;  // NOLINT(build/namespaces)

constexpr int kExitOk = 0;
constexpr int kExitRegisterError = 1;
constexpr int kExitParseError = 2;
constexpr int kExitOutOfFuel = 3;

struct RunConfig {
  uint64_t max_steps = 1'000'000;
  Limits limits;
  std::string max_magnitude;
  bool dump_ast = false;
  bool trace = false;
  bool strict_concrete = false;

  SyntaxMode mode() const {
    return strict_concrete ? SyntaxMode::kStrict : SyntaxMode::kColloquial;
  }
};

void AddRunFlags(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--max-steps", config.max_steps, "Step budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-number-digits", config.limits.max_number_total_digits,
                  "Total significant digits of a number")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-fraction-digits",
                  config.limits.max_number_fraction_digits,
                  "Fraction digits of a number")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-word-length", config.limits.max_word_length,
                  "Longest word")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-collection-size", config.limits.max_collection_size,
                  "Largest list, array or record")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-magnitude", config.max_magnitude,
                  "Largest absolute value of a number");
  cmd->add_flag("--dump-ast", config.dump_ast, "Print the syntax tree first");
  cmd->add_flag("--trace", config.trace,
                "Print each executed instruction to stderr");
  cmd->add_flag("--strict-concrete", config.strict_concrete,
                "Accept fully parenthesized concrete syntax only");
}

// Reads a file or, for "-", standard input.
bool ReadSource(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int ReportSyntaxError(const std::string& file, const SyntaxError& e) {
  std::cerr << file << ":" << e.what() << "\n";
  return kExitParseError;
}

// A parsed program or fragment, for the parse and restore subcommands.
using Fragment = std::variant<Program, Instruction, DatExp, TraExp, TypExp>;

Fragment ParseFragment(const std::string& source, const std::string& kind,
                       SyntaxMode mode) {
  if (kind == "program") return ParseProgram(source, mode);
  if (kind == "instruction") return ParseInstruction(source, mode);
  if (kind == "data") return ParseDatExp(source, mode);
  if (kind == "transfer") return ParseTraExp(source, mode);
  if (kind == "type") return ParseTypExp(source, mode);
  // auto: a program if it starts like one, otherwise an instruction, otherwise
  // a data expression.
  std::vector<Token> tokens = Tokenize(source);
  if (!tokens.empty() && tokens[0].text == "begin-program") {
    return ParseProgram(source, mode);
  }
  try {
    return ParseInstruction(source, mode);
  } catch (const SyntaxError& as_instruction) {
    try {
      return ParseDatExp(source, mode);
    } catch (const SyntaxError& as_data) {
      auto key = [](const SyntaxError& e) {
        return std::pair(e.pos().line, e.pos().column);
      };
      if (key(as_instruction) > key(as_data)) throw as_instruction;
      throw;
    }
  }
}

bool BuildLimits(RunConfig& config) {
  if (!config.max_magnitude.empty()) {
    auto m = Decimal::Parse(config.max_magnitude);
    if (!m || m->is_negative()) {
      std::cerr << "invalid --max-magnitude: " << config.max_magnitude << "\n";
      return false;
    }
    config.limits.max_magnitude = *m;
  }
  return true;
}

int CmdRun(const std::string& file, RunConfig config) {
  if (!BuildLimits(config)) return kExitParseError;
  std::string source;
  if (!ReadSource(file, source)) {
    std::cerr << file << ": cannot read file\n";
    return kExitParseError;
  }
  Program program = [&] {
    return ParseProgram(source, config.mode());
  }();
  if (config.dump_ast) std::cout << DumpAst(program) << "\n";

  uint64_t step = 0;
  Observer observer;
  if (config.trace) {
    observer = [&step](const Instruction& ins, const State& state) {
      std::cerr << "[" << ++step << "] " << Pretty(ins) << "  => register "
                << (state.store.error ? state.store.error->word : "OK")
                << "\n";
    };
  }
  Interpreter interpreter(config.limits, observer);
  Fuel fuel(config.max_steps);
  Outcome outcome = interpreter.Run(program, fuel);
  if (const auto* oof = std::get_if<OutOfFuel>(&outcome)) {
    std::cout << "out of fuel after " << oof->steps << " steps\n";
    return kExitOutOfFuel;
  }
  const State& state = std::get<State>(outcome);
  std::cout << DumpState(state);
  if (state.store.error) {
    std::cout << "error: " << state.store.error->word << "\n";
    return kExitRegisterError;
  }
  return kExitOk;
}

int CmdShow(const std::string& file, const std::string& kind, bool restore,
            const RunConfig& config) {
  std::string source;
  if (!ReadSource(file, source)) {
    std::cerr << file << ": cannot read file\n";
    return kExitParseError;
  }
  SyntaxMode mode = restore ? SyntaxMode::kColloquial : config.mode();
  Fragment fragment = ParseFragment(source, kind, mode);
  std::visit(
      [&](const auto& node) {
        std::cout << (restore ? Pretty(node) : DumpAst(node)) << "\n";
      },
      fragment);
  return kExitOk;
}

int CmdEval(const std::string& expression, RunConfig config) {
  if (!BuildLimits(config)) return kExitParseError;
  DatExp dae = ParseDatExp(expression, config.mode());
  if (config.dump_ast) std::cout << DumpAst(dae) << "\n";
  Interpreter interpreter(config.limits);
  Fuel fuel(config.max_steps);
  ExpOutcome outcome = interpreter.EvalDataExp(dae, InitialState(), fuel);
  if (const auto* oof = std::get_if<OutOfFuel>(&outcome)) {
    std::cout << "out of fuel after " << oof->steps << " steps\n";
    return kExitOutOfFuel;
  }
  const auto& result = std::get<CompositeOrError>(outcome);
  std::cout << ToString(result) << "\n";
  return IsError(result) ? kExitRegisterError : kExitOk;
}

std::string ReadOrThrow(const std::string& path) {
  std::string text;
  if (!ReadSource(path, text)) {
    throw algebra::AlgebraError(0, path + ": cannot read file");
  }
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpreter and algebra toolkit for the Lingua language"};
  app.require_subcommand(1);

  RunConfig config;
  std::string file = "-";
  std::string kind = "auto";
  const std::vector<std::string> kKinds = {"auto", "program", "instruction",
                                           "data", "transfer", "type"};

  auto* run = app.add_subcommand("run", "Execute a program");
  run->add_option("file", file, "Source file, - for stdin")->required();
  AddRunFlags(run, config);

  auto* parse = app.add_subcommand("parse", "Print the syntax tree");
  parse->add_option("file", file, "Source file, - for stdin")->required();
  parse->add_option("--fragment", kind, "What the input is")
      ->check(CLI::IsMember(kKinds));
  AddRunFlags(parse, config);

  auto* restore = app.add_subcommand(
      "restore", "Print colloquial input in fully parenthesized form");
  restore->add_option("file", file, "Source file, - for stdin")->required();
  restore->add_option("--fragment", kind, "What the input is")
      ->check(CLI::IsMember(kKinds));

  std::string expression;
  auto* eval = app.add_subcommand(
      "eval", "Evaluate a data expression in the empty state");
  eval->add_option("expression", expression)->required();
  AddRunFlags(eval, config);

  auto* grammar = app.add_subcommand("grammar", "Equational grammar tools");
  grammar->require_subcommand(1);
  std::string input, nonterminal, word, output;
  size_t max_length = 0;
  bool parallel = false;
  auto* derive = grammar->add_subcommand(
      "derive", "Derive the abstract-syntax grammar of a signature");
  derive->add_option("signature", input, "Signature file")->required();
  derive->add_option("-o,--output", output, "Write the grammar here");
  auto* enumerate = grammar->add_subcommand(
      "enumerate", "List the words of a nonterminal up to a length");
  enumerate->add_option("grammar", input, "Grammar file")->required();
  enumerate->add_option("nonterminal", nonterminal)->required();
  enumerate->add_option("max-length", max_length)->required();
  enumerate->add_flag("--parallel", parallel,
                      "Solve the equations in parallel");
  auto* member = grammar->add_subcommand(
      "member", "Exit 0 if the word belongs to the nonterminal, 1 if not");
  member->add_option("grammar", input, "Grammar file")->required();
  member->add_option("nonterminal", nonterminal)->required();
  member->add_option("word", word)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return CmdRun(file, config);
    if (parse->parsed()) return CmdShow(file, kind, false, config);
    if (restore->parsed()) return CmdShow(file, kind, true, config);
    if (eval->parsed()) return CmdEval(expression, config);
  } catch (const SyntaxError& e) {
    return ReportSyntaxError(eval->parsed() ? "<expression>" : file, e);
  }

  try {
    if (derive->parsed()) {
      std::string text = algebra::FormatGrammar(
          algebra::DeriveAbstractSyntax(algebra::ParseSignature(ReadOrThrow(input))));
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream(output, std::ios::binary) << text;
      }
      return kExitOk;
    }
    algebra::Grammar g = algebra::ParseGrammar(ReadOrThrow(input));
    if (enumerate->parsed()) {
      auto execution = parallel ? algebra::Execution::kParallel
                                : algebra::Execution::kSerial;
      for (const auto& w :
           algebra::Enumerate(g, nonterminal, max_length, execution)) {
        std::cout << w << "\n";
      }
      return kExitOk;
    }
    return algebra::Member(g, nonterminal, word) ? 0 : 1;
  } catch (const algebra::AlgebraError& e) {
    std::cerr << input << ":" << e.what() << "\n";
    return kExitParseError;
  }
}
