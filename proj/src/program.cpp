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

#include "qgame/program.hpp"

#include <cstdio>
#include <numbers>
#include <sstream>
#include <variant>

namespace qgame {
namespace {

// Angles that arrived as PI shorthands should round-trip as such.
std::string format_angle(double value) {
  constexpr double kPi = std::numbers::pi;
  for (int k = 1; k <= 16; ++k) {
    if (value == kPi / k) {
      return k == 1 ? "PI" : "PI/" + std::to_string(k);
    }
    if (value == -kPi / k) {
      return k == 1 ? "-PI" : "-PI/" + std::to_string(k);
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void append_instruction(std::ostringstream& out, const Instruction& instr,
                        int indent);

void append_list(std::ostringstream& out, const InstructionList& list,
                 int indent) {
  for (const Instruction& instr : list) {
    append_instruction(out, instr, indent);
  }
}

void append_instruction(std::ostringstream& out, const Instruction& instr,
                        int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::visit(
      [&](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        out << pad << '(' << instruction_name(instr.op);
        if constexpr (std::is_same_v<T, QnotGate> ||
                      std::is_same_v<T, SrnGate> ||
                      std::is_same_v<T, HadamardGate>) {
          out << ' ' << op.qubit << ")\n";
        } else if constexpr (std::is_same_v<T, CnotGate>) {
          out << ' ' << op.control << ' ' << op.target << ")\n";
        } else if constexpr (std::is_same_v<T, UThetaGate>) {
          out << ' ' << op.qubit << ' ' << format_angle(op.theta) << ")\n";
        } else if constexpr (std::is_same_v<T, U2Gate>) {
          out << ' ' << op.qubit << ' ' << format_angle(op.phi) << ' '
              << format_angle(op.theta) << ' ' << format_angle(op.psi) << ' '
              << format_angle(op.alpha) << ")\n";
        } else if constexpr (std::is_same_v<T, CphaseGate>) {
          out << ' ' << op.control << ' ' << op.target << ' '
              << format_angle(op.alpha) << ")\n";
        } else if constexpr (std::is_same_v<T, SwapGate>) {
          out << ' ' << op.first << ' ' << op.second << ")\n";
        } else if constexpr (std::is_same_v<T, OracleCall>) {
          for (int q : op.inputs) {
            out << ' ' << q;
          }
          out << ' ' << op.output << ")\n";
        } else if constexpr (std::is_same_v<T, Measurement>) {
          out << ' ' << op.qubit << ")\n";
          append_list(out, op.branch_one, indent + 1);
          out << pad << "(END)\n";
          append_list(out, op.branch_zero, indent + 1);
          out << pad << "(END)\n";
        } else {
          out << ")\n";  // HALT, PRINTAMPS
        }
      },
      instr.op);
}

}  // namespace

bool Measurement::operator==(const Measurement& other) const {
  if (qubit != other.qubit) return false;
  if (branch_one.size() != other.branch_one.size()) return false;
  if (branch_zero.size() != other.branch_zero.size()) return false;
  for (std::size_t i = 0; i < branch_one.size(); ++i) {
    if (!(branch_one[i] == other.branch_one[i])) return false;
  }
  for (std::size_t i = 0; i < branch_zero.size(); ++i) {
    if (!(branch_zero[i] == other.branch_zero[i])) return false;
  }
  return true;
}

bool operator==(const Instruction& a, const Instruction& b) {
  return a.op == b.op;
}

bool operator==(const Program& a, const Program& b) {
  if (a.instructions.size() != b.instructions.size()) return false;
  for (std::size_t i = 0; i < a.instructions.size(); ++i) {
    if (!(a.instructions[i] == b.instructions[i])) return false;
  }
  return true;
}

const char* instruction_name(const InstructionOp& op) {
  return std::visit(
      [](const auto& alt) -> const char* {
        using T = std::decay_t<decltype(alt)>;
        if constexpr (std::is_same_v<T, QnotGate>) return "QNOT";
        if constexpr (std::is_same_v<T, CnotGate>) return "CNOT";
        if constexpr (std::is_same_v<T, SrnGate>) return "SRN";
        if constexpr (std::is_same_v<T, HadamardGate>) return "HADAMARD";
        if constexpr (std::is_same_v<T, UThetaGate>) return "U-THETA";
        if constexpr (std::is_same_v<T, U2Gate>) return "U2";
        if constexpr (std::is_same_v<T, CphaseGate>) return "CPHASE";
        if constexpr (std::is_same_v<T, SwapGate>) return "SWAP";
        if constexpr (std::is_same_v<T, OracleCall>) return "ORACLE";
        if constexpr (std::is_same_v<T, Measurement>) return "MEASURE";
        if constexpr (std::is_same_v<T, HaltInstr>) return "HALT";
        if constexpr (std::is_same_v<T, PrintAmpsInstr>) return "PRINTAMPS";
      },
      op);
}

std::string to_text(const Program& program) {
  std::ostringstream out;
  append_list(out, program.instructions, 0);
  return out.str();
}

std::string to_text(const Instruction& instruction) {
  std::ostringstream out;
  append_instruction(out, instruction, 0);
  return out.str();
}

}  // namespace qgame
