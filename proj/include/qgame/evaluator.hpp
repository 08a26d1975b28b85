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
/// Test harness: run a program across oracle test cases and aggregate the
/// miss/error/oracle statistics, or execute once for a full branch report.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qgame/program.hpp"
#include "qgame/simulator.hpp"

namespace qgame {

/// One oracle scenario: the truth table to install and the integer the final
/// measurement qubits should spell out.
struct TestCase {
  std::vector<std::uint8_t> truth_table;
  long desired_output = 0;
};

struct CaseOutcome {
  double error_probability = 0.0;
  double expected_oracles = 0.0;
  bool is_miss = false;
};

struct TestResult {
  int misses = 0;
  double max_error = 0.0;
  double avg_error = 0.0;
  double max_expected_oracles = 0.0;
  double avg_expected_oracles = 0.0;
  std::vector<CaseOutcome> cases;
};

struct ExecutionReport {
  std::vector<ExecutionBranch> branches;
  double expected_oracles = 0.0;
};

/// Parses a BITS-OUTPUT token such as "0000-0": truth table bits, a dash,
/// then the desired output as a decimal integer. Raises UsageError.
TestCase parse_test_case(std::string_view token);

/// Parses a bit-string truth table such as "1000"; the length must be a
/// power of two >= 2. Raises UsageError.
std::vector<std::uint8_t> parse_truth_table(std::string_view token);

/// Runs the program with the case's truth table installed. The error
/// probability is 1 minus the branch-weighted probability that the final
/// qubits (first listed most significant) read the desired output; the case
/// is a miss when that error exceeds `threshold`.
CaseOutcome evaluate_case(const Program& program, const TestCase& test_case,
                          std::span<const int> final_qubits, double threshold,
                          const SimulationConfig& base_config);

/// Evaluates every case and aggregates: miss count, max/mean error, max/mean
/// expected oracle calls. Needs >= 1 case; all truth tables must have the
/// same length.
TestResult run_test_suite(const Program& program, std::span<const TestCase> cases,
                          std::span<const int> final_qubits, double threshold,
                          const SimulationConfig& base_config);

/// Single run. `final_qubits` is accepted for interface parity with test
/// mode and only range-checked; the report covers all end branches.
ExecutionReport execute_program(const Program& program,
                                const SimulationConfig& config,
                                std::span<const int> final_qubits = {});

}  // namespace qgame
