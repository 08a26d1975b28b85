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
/// Instruction tree for QGAME programs. One alternative per instruction form;
/// measurement branches nest full instruction lists.

#pragma once

#include <string>
#include <variant>
#include <vector>

namespace qgame {

/// 1-based position in program source; (0,0) means "unknown".
struct SourcePos {
  int line = 0;
  int column = 0;
};

struct Instruction;
using InstructionList = std::vector<Instruction>;

struct QnotGate {
  int qubit;
  bool operator==(const QnotGate&) const = default;
};

struct CnotGate {
  int control;
  int target;
  bool operator==(const CnotGate&) const = default;
};

struct SrnGate {
  int qubit;
  bool operator==(const SrnGate&) const = default;
};

struct HadamardGate {
  int qubit;
  bool operator==(const HadamardGate&) const = default;
};

struct UThetaGate {
  int qubit;
  double theta;
  bool operator==(const UThetaGate&) const = default;
};

struct U2Gate {
  int qubit;
  double phi;
  double theta;
  double psi;
  double alpha;
  bool operator==(const U2Gate&) const = default;
};

struct CphaseGate {
  int control;
  int target;
  double alpha;
  bool operator==(const CphaseGate&) const = default;
};

struct SwapGate {
  int first;
  int second;
  bool operator==(const SwapGate&) const = default;
};

/// Black-box call: last operand is the output qubit, the rest are inputs.
struct OracleCall {
  std::vector<int> inputs;
  int output;
  bool operator==(const OracleCall&) const = default;
};

/// (MEASURE q) ...branch taken on outcome 1... (END) ...outcome 0... (END)
struct Measurement {
  int qubit;
  InstructionList branch_one;
  InstructionList branch_zero;
  bool operator==(const Measurement&) const;
};

struct HaltInstr {
  bool operator==(const HaltInstr&) const = default;
};

struct PrintAmpsInstr {
  bool operator==(const PrintAmpsInstr&) const = default;
};

using InstructionOp =
    std::variant<QnotGate, CnotGate, SrnGate, HadamardGate, UThetaGate, U2Gate,
                 CphaseGate, SwapGate, OracleCall, Measurement, HaltInstr,
                 PrintAmpsInstr>;

struct Instruction {
  InstructionOp op;
  SourcePos pos;
};

/// Structural equality; source positions are ignored.
bool operator==(const Instruction& a, const Instruction& b);
inline bool operator!=(const Instruction& a, const Instruction& b) { return !(a == b); }

struct Program {
  InstructionList instructions;
  std::string source_name;
};

/// Structural equality on the instruction trees; source names are ignored.
bool operator==(const Program& a, const Program& b);
inline bool operator!=(const Program& a, const Program& b) { return !(a == b); }

/// Upper-case instruction mnemonic ("QNOT", "MEASURE", ...).
const char* instruction_name(const InstructionOp& op);

/// Serialises back to program text. Reparsing the result yields a
/// structurally equal program.
std::string to_text(const Program& program);
std::string to_text(const Instruction& instruction);

}  // namespace qgame
