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

#include "qgame/simulator.hpp"

#include <array>
#include <string>
#include <utility>
#include <variant>

#include "qgame/errors.hpp"
#include "qgame/gates.hpp"

namespace qgame {
namespace {

/// Position of one in-flight branch: instruction list plus next index, one
/// entry per enclosing measurement body.
struct Cursor {
  const InstructionList* list;
  std::size_t next;
};

struct Pending {
  ExecutionBranch branch;
  std::vector<Cursor> stack;
};

void bump_oracle_count(ExecutionBranch& branch, const SimulationConfig& config) {
  ++branch.oracle_calls;
  if (config.oracle_call_limit && branch.oracle_calls > *config.oracle_call_limit) {
    throw SimulationError("oracle call limit of " +
                          std::to_string(*config.oracle_call_limit) + " exceeded");
  }
}

// Non-measurement instructions mutate the branch in place.
void apply_op(ExecutionBranch& branch, const Instruction& instr,
              const SimulationConfig& config) {
  std::visit(
      [&](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, QnotGate>) {
          const std::array<int, 1> targets{op.qubit};
          apply_gate_in_place(branch.state, qnot(), targets);
        } else if constexpr (std::is_same_v<T, SrnGate>) {
          const std::array<int, 1> targets{op.qubit};
          apply_gate_in_place(branch.state, srn(), targets);
        } else if constexpr (std::is_same_v<T, HadamardGate>) {
          const std::array<int, 1> targets{op.qubit};
          apply_gate_in_place(branch.state, hadamard(), targets);
        } else if constexpr (std::is_same_v<T, UThetaGate>) {
          const std::array<int, 1> targets{op.qubit};
          apply_gate_in_place(branch.state, u_theta(op.theta), targets);
        } else if constexpr (std::is_same_v<T, U2Gate>) {
          const std::array<int, 1> targets{op.qubit};
          apply_gate_in_place(branch.state, u2(op.phi, op.theta, op.psi, op.alpha),
                              targets);
        } else if constexpr (std::is_same_v<T, CnotGate>) {
          const std::array<int, 2> targets{op.control, op.target};
          apply_gate_in_place(branch.state, cnot(), targets);
        } else if constexpr (std::is_same_v<T, CphaseGate>) {
          const std::array<int, 2> targets{op.control, op.target};
          apply_gate_in_place(branch.state, cphase(op.alpha), targets);
        } else if constexpr (std::is_same_v<T, SwapGate>) {
          const std::array<int, 2> targets{op.first, op.second};
          apply_gate_in_place(branch.state, swap_gate(), targets);
        } else if constexpr (std::is_same_v<T, OracleCall>) {
          if (!config.oracle_truth_table) {
            throw SimulationError("ORACLE call but no truth table is configured");
          }
          bump_oracle_count(branch, config);
          apply_oracle_in_place(branch.state, *config.oracle_truth_table,
                                op.inputs, op.output);
        } else if constexpr (std::is_same_v<T, HaltInstr>) {
          branch.halted = true;
        } else if constexpr (std::is_same_v<T, PrintAmpsInstr>) {
          branch.snapshots.push_back(branch.state);
        } else {
          static_assert(std::is_same_v<T, Measurement>);
          throw SimulationError("measurement reached non-forking dispatch");
        }
      },
      instr.op);
}

struct ForkChild {
  ExecutionBranch branch;
  int outcome;
};

// Outcome-1 child first. The outcome-1 fork probability is the measured
// p(1); the outcome-0 fork probability is its complement 1 - p(1). Children
// whose fork probability is zero or below the prune threshold, or whose
// outcome carries no amplitude mass, are not created.
std::vector<ForkChild> fork_on(const ExecutionBranch& parent, int qubit,
                               const SimulationConfig& config,
                               const RunHooks& hooks) {
  const double p_one = probability_of(parent.state, qubit, 1);
  const double p_zero = probability_of(parent.state, qubit, 0);
  if (hooks.at_fork) hooks.at_fork(p_one, p_zero);
  std::vector<ForkChild> children;
  const auto make_child = [&](int outcome, double fork_p, double measured_p) {
    if (!(fork_p > 0.0) || fork_p < config.prune_epsilon) return;
    if (!(measured_p > 0.0)) return;
    ForkChild child{parent, outcome};
    collapse_in_place(child.branch.state, qubit, outcome);
    child.branch.probability = parent.probability * fork_p;
    child.branch.history.push_back(MeasurementEvent{qubit, outcome, fork_p});
    children.push_back(std::move(child));
  };
  make_child(1, p_one, p_one);
  make_child(0, 1.0 - p_one, p_zero);
  return children;
}

double mass_of(const std::vector<ExecutionBranch>& done,
               const std::vector<Pending>& work) {
  double total = 0.0;
  for (const ExecutionBranch& b : done) total += b.probability;
  for (const Pending& p : work) total += p.branch.probability;
  return total;
}

}  // namespace

void validate_simulation_config(const SimulationConfig& config) {
  if (config.max_qubits < 1) {
    throw ValidationError("max_qubits must be positive");
  }
  if (config.n_qubits < 1 || config.n_qubits > config.max_qubits) {
    throw ValidationError("qubit count " + std::to_string(config.n_qubits) +
                          " outside the supported range [1, " +
                          std::to_string(config.max_qubits) + "]");
  }
  if (!(config.prune_epsilon >= 0.0) || config.prune_epsilon >= 0.5) {
    throw ValidationError("prune epsilon must lie in [0, 0.5)");
  }
  if (config.oracle_call_limit && *config.oracle_call_limit < 0) {
    throw ValidationError("oracle call limit must be non-negative");
  }
  if (config.oracle_truth_table) {
    const auto& tt = *config.oracle_truth_table;
    if (tt.size() < 2 || (tt.size() & (tt.size() - 1)) != 0) {
      throw ValidationError("oracle truth table length must be a power of two >= 2, got " +
                            std::to_string(tt.size()));
    }
    for (std::uint8_t bit : tt) {
      if (bit != 0 && bit != 1) {
        throw ValidationError("oracle truth table entries must be 0 or 1");
      }
    }
  }
}

std::vector<ExecutionBranch> run_program(const Program& program,
                                         const SimulationConfig& config,
                                         const RunHooks& hooks) {
  validate_simulation_config(config);
  std::vector<ExecutionBranch> done;
  std::vector<Pending> work;
  {
    Pending root;
    root.branch.state = zero_state(config.n_qubits, config.max_qubits);
    if (!program.instructions.empty()) {
      root.stack.push_back(Cursor{&program.instructions, 0});
    }
    work.push_back(std::move(root));
  }
  while (!work.empty()) {
    Pending cur = std::move(work.back());
    work.pop_back();
    bool forked = false;
    while (!cur.stack.empty()) {
      Cursor& top = cur.stack.back();
      if (top.next >= top.list->size()) {
        cur.stack.pop_back();
        continue;
      }
      const Instruction& instr = (*top.list)[top.next];
      ++top.next;
      if (const auto* measure = std::get_if<Measurement>(&instr.op)) {
        std::vector<ForkChild> children = fork_on(cur.branch, measure->qubit, config, hooks);
        if (hooks.after_instruction) {
          double total = mass_of(done, work);
          for (const ForkChild& child : children) total += child.branch.probability;
          for (const ForkChild& child : children) {
            hooks.after_instruction(child.branch, total);
          }
        }
        // Children share the parent's continuation; LIFO order makes the
        // outcome-1 child run first.
        for (auto it = children.rbegin(); it != children.rend(); ++it) {
          Pending child;
          child.branch = std::move(it->branch);
          child.stack = cur.stack;
          const InstructionList& body =
              it->outcome == 1 ? measure->branch_one : measure->branch_zero;
          if (!body.empty()) {
            child.stack.push_back(Cursor{&body, 0});
          }
          work.push_back(std::move(child));
        }
        forked = true;
        break;
      }
      apply_op(cur.branch, instr, config);
      if (hooks.after_instruction) {
        hooks.after_instruction(cur.branch, mass_of(done, work) + cur.branch.probability);
      }
      if (cur.branch.halted) break;
    }
    if (!forked) {
      done.push_back(std::move(cur.branch));
    }
  }
  return done;
}

std::vector<ExecutionBranch> step(ExecutionBranch branch,
                                  const Instruction& instruction,
                                  const SimulationConfig& config) {
  validate_simulation_config(config);
  if (branch.halted) {
    throw SimulationError("cannot step a halted branch");
  }
  std::vector<ExecutionBranch> out;
  if (const auto* measure = std::get_if<Measurement>(&instruction.op)) {
    for (ForkChild& child : fork_on(branch, measure->qubit, config, RunHooks{})) {
      out.push_back(std::move(child.branch));
    }
    return out;
  }
  apply_op(branch, instruction, config);
  out.push_back(std::move(branch));
  return out;
}

double expected_oracle_calls(std::span<const ExecutionBranch> branches) {
  double total = 0.0;
  for (const ExecutionBranch& branch : branches) {
    total += branch.probability * static_cast<double>(branch.oracle_calls);
  }
  return total;
}

}  // namespace qgame
