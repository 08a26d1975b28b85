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
/// Branching execution of programs over the state-vector kernels. Each
/// measurement forks the current branch into the conditional post-measurement
/// states; the run returns every surviving end-of-program branch.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qgame/program.hpp"
#include "qgame/statevector.hpp"

namespace qgame {

/// Forks whose conditional probability falls below this are discarded.
inline constexpr double kDefaultPruneEpsilon = 1e-10;

struct SimulationConfig {
  int n_qubits = 1;
  /// Truth table backing ORACLE calls; row x gives the output bit for
  /// input basis state x (first listed input qubit most significant).
  std::optional<std::vector<std::uint8_t>> oracle_truth_table;
  /// Hard per-branch ceiling on ORACLE calls; exceeding it aborts the run.
  std::optional<long> oracle_call_limit;
  double prune_epsilon = kDefaultPruneEpsilon;
  int max_qubits = kDefaultMaxQubits;
};

/// Raises ValidationError if the configuration is unusable.
void validate_simulation_config(const SimulationConfig& config);

/// One fork taken by a branch: measured qubit, outcome, and the conditional
/// probability of that outcome at the moment of measurement.
struct MeasurementEvent {
  int qubit;
  int outcome;
  double probability_at_fork;
};

struct ExecutionBranch {
  StateVector state;
  /// Product of the fork probabilities along this branch's history.
  double probability = 1.0;
  long oracle_calls = 0;
  std::vector<MeasurementEvent> history;
  /// One state copy per PRINTAMPS executed on this branch, in order.
  std::vector<StateVector> snapshots;
  bool halted = false;
};

/// Optional instrumentation. `after_instruction` fires once per executed
/// non-measurement instruction with the updated branch and the probability
/// mass summed over all live and finished branches; after a fork it fires
/// once per surviving child. `at_fork` fires with both conditional outcome
/// probabilities before any pruning.
struct RunHooks {
  std::function<void(const ExecutionBranch&, double total_probability)> after_instruction;
  std::function<void(double p_one, double p_zero)> at_fork;
};

/// Runs the program from |00...0>. Returns the surviving branches in
/// depth-first order, outcome-1 child explored before outcome-0. A branch
/// ends at HALT or at the end of the instruction list; instructions after a
/// measurement's two terminators continue in every surviving child.
std::vector<ExecutionBranch> run_program(const Program& program,
                                         const SimulationConfig& config,
                                         const RunHooks& hooks = {});

/// Applies a single instruction to a copy of `branch`. Non-measurement
/// instructions return one updated branch. MEASURE returns the surviving
/// collapsed children, outcome 1 first, without executing the branch bodies.
/// Raises SimulationError if `branch` is already halted.
std::vector<ExecutionBranch> step(ExecutionBranch branch,
                                  const Instruction& instruction,
                                  const SimulationConfig& config);

/// Expected number of ORACLE calls: sum over branches of probability * calls.
double expected_oracle_calls(std::span<const ExecutionBranch> branches);

}  // namespace qgame
