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

#include "qgame/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <utility>

#include "qgame/errors.hpp"

namespace qgame {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// -?digits(.digits)?([eE][+-]?digits)?
bool is_decimal_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t int_digits = 0;
  while (i < s.size() && is_digit(s[i])) ++i, ++int_digits;
  if (int_digits == 0) return false;
  if (i < s.size() && s[i] == '.') {
    ++i;
    std::size_t frac_digits = 0;
    while (i < s.size() && is_digit(s[i])) ++i, ++frac_digits;
    if (frac_digits == 0) return false;
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < s.size() && is_digit(s[i])) ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == s.size();
}

// -?PI(/k)? with integer k >= 1, checked against the upper-cased atom.
bool is_pi_form(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  if (s.size() < i + 2 || s[i] != 'P' || s[i + 1] != 'I') return false;
  i += 2;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  if (i == s.size()) return false;
  bool nonzero = false;
  for (; i < s.size(); ++i) {
    if (!is_digit(s[i])) return false;
    if (s[i] != '0') nonzero = true;
  }
  return nonzero;
}

std::string to_upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

Token classify_atom(std::string_view atom, int line, int column) {
  if (is_decimal_literal(atom)) {
    return {TokenKind::Number, std::string(atom), line, column};
  }
  std::string upper = to_upper(atom);
  std::string_view body = upper;
  if (!body.empty() && body[0] == '-') body.remove_prefix(1);
  if (body.rfind("PI", 0) == 0) {
    if (!is_pi_form(upper)) {
      throw ParseError(line, column, "malformed angle '" + std::string(atom) + "'");
    }
    return {TokenKind::Number, std::move(upper), line, column};
  }
  const char first = atom.empty() ? '\0' : atom[0];
  if (is_digit(first) || first == '-' || first == '+' || first == '.') {
    throw ParseError(line, column, "malformed number '" + std::string(atom) + "'");
  }
  return {TokenKind::Symbol, std::move(upper), line, column};
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  InstructionList parse_all() {
    InstructionList top = parse_list(/*inside_branch=*/false);
    return top;
  }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  ParseError eof_error(const std::string& expected) const {
    int line = 1;
    int column = 1;
    if (!tokens_.empty()) {
      const Token& last = tokens_.back();
      line = last.line;
      column = last.column + static_cast<int>(last.text.size());
    }
    return ParseError(line, column, "unexpected end of input: expected " + expected);
  }

  bool next_form_is_end() const {
    return pos_ + 1 < tokens_.size() && tokens_[pos_].kind == TokenKind::OpenParen &&
           tokens_[pos_ + 1].kind == TokenKind::Symbol && tokens_[pos_ + 1].text == "END";
  }

  void consume_end_form() {
    next();  // '('
    next();  // END
    expect_close("END");
  }

  void expect_close(const std::string& form) {
    if (at_end()) throw eof_error("')' to close " + form);
    const Token& tok = next();
    if (tok.kind != TokenKind::CloseParen) {
      throw ParseError(tok.line, tok.column,
                       "expected ')' to close " + form + ", got '" + tok.text + "'");
    }
  }

  int expect_qubit(const std::string& form) {
    if (at_end()) throw eof_error("qubit index in " + form);
    const Token& tok = next();
    if (tok.kind != TokenKind::Number) {
      throw ParseError(tok.line, tok.column,
                       form + ": expected qubit index, got '" + tok.text + "'");
    }
    const double value = parse_angle(tok);
    if (value != std::floor(value) || std::abs(value) > 1e9) {
      throw ParseError(tok.line, tok.column,
                       form + ": expected integer qubit index, got '" + tok.text + "'");
    }
    return static_cast<int>(value);
  }

  double expect_angle(const std::string& form) {
    if (at_end()) throw eof_error("angle in " + form);
    const Token& tok = next();
    if (tok.kind != TokenKind::Number) {
      throw ParseError(tok.line, tok.column,
                       form + ": expected angle, got '" + tok.text + "'");
    }
    return parse_angle(tok);
  }

  InstructionList parse_list(bool inside_branch) {
    InstructionList list;
    for (;;) {
      if (at_end()) {
        if (inside_branch) throw eof_error("(END)");
        return list;
      }
      const Token& tok = peek();
      if (tok.kind == TokenKind::CloseParen) {
        throw ParseError(tok.line, tok.column, "unexpected ')'");
      }
      if (tok.kind != TokenKind::OpenParen) {
        throw ParseError(tok.line, tok.column, "expected '(' before '" + tok.text + "'");
      }
      if (next_form_is_end()) {
        if (!inside_branch) {
          throw ParseError(tok.line, tok.column, "(END) without a matching (MEASURE)");
        }
        consume_end_form();
        return list;
      }
      list.push_back(parse_instruction());
    }
  }

  Instruction parse_instruction() {
    const Token& open = next();  // '(' guaranteed by parse_list
    if (at_end()) throw eof_error("instruction name");
    const Token& head = next();
    if (head.kind != TokenKind::Symbol) {
      throw ParseError(head.line, head.column,
                       "expected instruction name, got '" + head.text + "'");
    }
    const std::string& name = head.text;
    Instruction instr;
    instr.pos = SourcePos{open.line, open.column};

    if (name == "QNOT") {
      instr.op = QnotGate{expect_qubit(name)};
    } else if (name == "CNOT") {
      const int control = expect_qubit(name);
      const int target = expect_qubit(name);
      instr.op = CnotGate{control, target};
    } else if (name == "SRN") {
      instr.op = SrnGate{expect_qubit(name)};
    } else if (name == "HADAMARD") {
      instr.op = HadamardGate{expect_qubit(name)};
    } else if (name == "U-THETA") {
      const int qubit = expect_qubit(name);
      const double theta = expect_angle(name);
      instr.op = UThetaGate{qubit, theta};
    } else if (name == "U2") {
      const int qubit = expect_qubit(name);
      const double phi = expect_angle(name);
      const double theta = expect_angle(name);
      const double psi = expect_angle(name);
      const double alpha = expect_angle(name);
      instr.op = U2Gate{qubit, phi, theta, psi, alpha};
    } else if (name == "CPHASE") {
      const int control = expect_qubit(name);
      const int target = expect_qubit(name);
      const double alpha = expect_angle(name);
      instr.op = CphaseGate{control, target, alpha};
    } else if (name == "SWAP") {
      const int first = expect_qubit(name);
      const int second = expect_qubit(name);
      instr.op = SwapGate{first, second};
    } else if (name == "ORACLE") {
      std::vector<int> qubits;
      while (!at_end() && peek().kind == TokenKind::Number) {
        qubits.push_back(expect_qubit(name));
      }
      if (qubits.size() < 2) {
        throw ParseError(head.line, head.column,
                         "ORACLE needs at least one input qubit and one output qubit");
      }
      OracleCall call;
      call.output = qubits.back();
      qubits.pop_back();
      call.inputs = std::move(qubits);
      instr.op = std::move(call);
    } else if (name == "MEASURE") {
      Measurement m;
      m.qubit = expect_qubit(name);
      expect_close(name);
      m.branch_one = parse_list(/*inside_branch=*/true);
      m.branch_zero = parse_list(/*inside_branch=*/true);
      instr.op = std::move(m);
      return instr;  // branch terminators already consumed
    } else if (name == "HALT") {
      instr.op = HaltInstr{};
    } else if (name == "PRINTAMPS") {
      instr.op = PrintAmpsInstr{};
    } else {
      throw ParseError(head.line, head.column, "unknown instruction '" + name + "'");
    }
    expect_close(name);
    return instr;
  }
};

void check_qubit(int qubit, int n_qubits, const Instruction& instr) {
  if (qubit < 0 || qubit >= n_qubits) {
    std::ostringstream msg;
    if (instr.pos.line > 0) msg << "line " << instr.pos.line << ": ";
    msg << instruction_name(instr.op) << ": qubit index " << qubit
        << " out of range for a " << n_qubits << "-qubit machine";
    throw ValidationError(msg.str());
  }
}

void check_distinct(int a, int b, const Instruction& instr) {
  if (a == b) {
    std::ostringstream msg;
    if (instr.pos.line > 0) msg << "line " << instr.pos.line << ": ";
    msg << instruction_name(instr.op) << ": qubit operands must be distinct (got "
        << a << " twice)";
    throw ValidationError(msg.str());
  }
}

void validate_list(const InstructionList& list, int n_qubits,
                   const std::optional<std::size_t>& oracle_tt_size) {
  for (const Instruction& instr : list) {
    std::visit(
        [&](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, QnotGate> || std::is_same_v<T, SrnGate> ||
                        std::is_same_v<T, HadamardGate> ||
                        std::is_same_v<T, UThetaGate> || std::is_same_v<T, U2Gate>) {
            check_qubit(op.qubit, n_qubits, instr);
          } else if constexpr (std::is_same_v<T, CnotGate>) {
            check_qubit(op.control, n_qubits, instr);
            check_qubit(op.target, n_qubits, instr);
            check_distinct(op.control, op.target, instr);
          } else if constexpr (std::is_same_v<T, CphaseGate>) {
            check_qubit(op.control, n_qubits, instr);
            check_qubit(op.target, n_qubits, instr);
            check_distinct(op.control, op.target, instr);
          } else if constexpr (std::is_same_v<T, SwapGate>) {
            check_qubit(op.first, n_qubits, instr);
            check_qubit(op.second, n_qubits, instr);
            check_distinct(op.first, op.second, instr);
          } else if constexpr (std::is_same_v<T, OracleCall>) {
            for (int q : op.inputs) check_qubit(q, n_qubits, instr);
            check_qubit(op.output, n_qubits, instr);
            std::vector<int> all = op.inputs;
            all.push_back(op.output);
            std::sort(all.begin(), all.end());
            if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
              std::ostringstream msg;
              if (instr.pos.line > 0) msg << "line " << instr.pos.line << ": ";
              msg << "ORACLE qubits must be pairwise distinct";
              throw ValidationError(msg.str());
            }
            if (!oracle_tt_size.has_value()) {
              std::ostringstream msg;
              if (instr.pos.line > 0) msg << "line " << instr.pos.line << ": ";
              msg << "ORACLE call but no truth table is configured";
              throw ValidationError(msg.str());
            }
            const std::size_t want = std::size_t{1} << op.inputs.size();
            if (*oracle_tt_size != want) {
              std::ostringstream msg;
              if (instr.pos.line > 0) msg << "line " << instr.pos.line << ": ";
              msg << "ORACLE lists " << op.inputs.size()
                  << " input qubit(s) but the truth table has " << *oracle_tt_size
                  << " row(s); expected " << want;
              throw ValidationError(msg.str());
            }
          } else if constexpr (std::is_same_v<T, Measurement>) {
            check_qubit(op.qubit, n_qubits, instr);
            validate_list(op.branch_one, n_qubits, oracle_tt_size);
            validate_list(op.branch_zero, n_qubits, oracle_tt_size);
          }
          // HALT and PRINTAMPS carry no operands.
        },
        instr.op);
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ';') {
      while (i < text.size() && text[i] != '\n') ++i, ++column;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (c == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
      continue;
    }
    if (c == '(' || c == ')') {
      tokens.push_back({c == '(' ? TokenKind::OpenParen : TokenKind::CloseParen,
                        std::string(1, c), line, column});
      ++column;
      ++i;
      continue;
    }
    const int start_column = column;
    const std::size_t start = i;
    while (i < text.size()) {
      const char a = text[i];
      if (std::isspace(static_cast<unsigned char>(a)) || a == '(' || a == ')' || a == ';') {
        break;
      }
      ++i;
      ++column;
    }
    tokens.push_back(classify_atom(text.substr(start, i - start), line, start_column));
  }
  return tokens;
}

double parse_angle(const Token& token) {
  if (token.kind != TokenKind::Number) {
    throw ParseError(token.line, token.column,
                     "expected a number, got '" + token.text + "'");
  }
  std::string_view s = token.text;
  const bool negative = !s.empty() && s[0] == '-';
  std::string_view body = negative ? s.substr(1) : s;
  if (body.rfind("PI", 0) == 0) {
    long divisor = 1;
    if (body.size() > 2) {
      divisor = std::strtol(std::string(body.substr(3)).c_str(), nullptr, 10);
    }
    const double value = std::numbers::pi / static_cast<double>(divisor);
    return negative ? -value : value;
  }
  return std::strtod(std::string(s).c_str(), nullptr);
}

Program parse_program(const std::vector<Token>& tokens, std::string source_name) {
  Parser parser(tokens);
  Program program;
  program.source_name = std::move(source_name);
  program.instructions = parser.parse_all();
  return program;
}

Program parse_program_text(std::string_view text, std::string source_name) {
  return parse_program(tokenize(text), std::move(source_name));
}

void validate_program(const Program& program, int n_qubits,
                      std::optional<std::size_t> oracle_tt_size) {
  if (n_qubits < 1) {
    throw ValidationError("machine must have at least one qubit");
  }
  validate_list(program.instructions, n_qubits, oracle_tt_size);
}

}  // namespace qgame
