// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file
/// Tokenizer and recursive-descent parser for the parenthesised program
/// syntax, plus static validation against a machine size.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgame/program.hpp"

namespace qgame {

enum class TokenKind { OpenParen, CloseParen, Symbol, Number };

struct Token {
  TokenKind kind;
  std::string text;  ///< Symbols and PI forms are stored upper-cased.
  int line = 0;      ///< 1-based.
  int column = 0;    ///< 1-based.
};

/// Splits source text into tokens. Comments run from ';' to end of line.
/// Atoms that look numeric but fail the number grammar (e.g. "1.2.3",
/// "PI/x") raise ParseError.
std::vector<Token> tokenize(std::string_view text);

/// Numeric value of a Number token. Accepts decimal literals and the
/// angle shorthands PI, -PI, PI/k and -PI/k for integer k >= 1.
double parse_angle(const Token& token);

/// Parses a whole token stream into a program. Raises ParseError on
/// malformed forms, bad arities, or unbalanced parentheses.
Program parse_program(const std::vector<Token>& tokens, std::string source_name);

/// Convenience wrapper: tokenize + parse.
Program parse_program_text(std::string_view text, std::string source_name = "<input>");

/// Checks a parsed program against a machine of `n_qubits` qubits:
/// qubit indices in range, gate operands pairwise distinct, oracle calls
/// arity-consistent with `oracle_tt_size` when given. Raises
/// ValidationError on the first violation found.
void validate_program(const Program& program, int n_qubits,
                      std::optional<std::size_t> oracle_tt_size = std::nullopt);

}  // namespace qgame
