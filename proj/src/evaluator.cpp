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

#include "qgame/evaluator.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "qgame/errors.hpp"

namespace qgame {
namespace {

bool is_power_of_two(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

std::vector<std::uint8_t> parse_bits(std::string_view bits, std::string_view token) {
  if (bits.size() < 2 || !is_power_of_two(bits.size())) {
    throw UsageError("truth table in '" + std::string(token) +
                     "' must be a bit string whose length is a power of two >= 2");
  }
  std::vector<std::uint8_t> table;
  table.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw UsageError("truth table in '" + std::string(token) +
                       "' may only contain 0 and 1");
    }
    table.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return table;
}

}  // namespace

TestCase parse_test_case(std::string_view token) {
  const std::size_t dash = token.rfind('-');
  if (dash == std::string_view::npos || dash == 0 || dash + 1 == token.size()) {
    throw UsageError("malformed test case '" + std::string(token) +
                     "': expected BITS-OUTPUT, e.g. 0000-0");
  }
  TestCase test_case;
  test_case.truth_table = parse_bits(token.substr(0, dash), token);
  const std::string_view digits = token.substr(dash + 1);
  long value = 0;
  for (char c : digits) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
      throw UsageError("desired output in '" + std::string(token) +
                       "' must be a non-negative integer");
    }
    if (value > (1L << 40)) {
      throw UsageError("desired output in '" + std::string(token) + "' is too large");
    }
    value = value * 10 + (c - '0');
  }
  test_case.desired_output = value;
  return test_case;
}

std::vector<std::uint8_t> parse_truth_table(std::string_view token) {
  return parse_bits(token, token);
}

CaseOutcome evaluate_case(const Program& program, const TestCase& test_case,
                          std::span<const int> final_qubits, double threshold,
                          const SimulationConfig& base_config) {
  if (final_qubits.empty()) {
    throw ValidationError("at least one final measurement qubit is required");
  }
  if (final_qubits.size() > 30) {
    throw ValidationError("too many final measurement qubits");
  }
  const long n_values = 1L << final_qubits.size();
  if (test_case.desired_output < 0 || test_case.desired_output >= n_values) {
    throw ValidationError("desired output " + std::to_string(test_case.desired_output) +
                          " out of range for " + std::to_string(final_qubits.size()) +
                          " final measurement qubit(s)");
  }
  SimulationConfig config = base_config;
  config.oracle_truth_table = test_case.truth_table;

  const std::vector<ExecutionBranch> branches = run_program(program, config);
  double success = 0.0;
  for (const ExecutionBranch& branch : branches) {
    const auto dist = read_distribution(branch.state, final_qubits);
    success += branch.probability * dist[test_case.desired_output];
  }
  CaseOutcome outcome;
  outcome.error_probability = std::clamp(1.0 - success, 0.0, 1.0);
  outcome.expected_oracles = expected_oracle_calls(branches);
  outcome.is_miss = outcome.error_probability > threshold;
  return outcome;
}

TestResult run_test_suite(const Program& program, std::span<const TestCase> cases,
                          std::span<const int> final_qubits, double threshold,
                          const SimulationConfig& base_config) {
  if (cases.empty()) {
    throw ValidationError("a test suite needs at least one case");
  }
  for (const TestCase& test_case : cases) {
    if (test_case.truth_table.size() != cases.front().truth_table.size()) {
      throw ValidationError("all test case truth tables must have the same length");
    }
  }
  TestResult result;
  result.cases.reserve(cases.size());
  double error_sum = 0.0;
  double oracle_sum = 0.0;
  for (const TestCase& test_case : cases) {
    const CaseOutcome outcome =
        evaluate_case(program, test_case, final_qubits, threshold, base_config);
    if (outcome.is_miss) ++result.misses;
    result.max_error = std::max(result.max_error, outcome.error_probability);
    result.max_expected_oracles =
        std::max(result.max_expected_oracles, outcome.expected_oracles);
    error_sum += outcome.error_probability;
    oracle_sum += outcome.expected_oracles;
    result.cases.push_back(outcome);
  }
  const double count = static_cast<double>(cases.size());
  result.avg_error = error_sum / count;
  result.avg_expected_oracles = oracle_sum / count;
  return result;
}

ExecutionReport execute_program(const Program& program,
                                const SimulationConfig& config,
                                std::span<const int> final_qubits) {
  for (int q : final_qubits) {
    if (q < 0 || q >= config.n_qubits) {
      throw ValidationError("final measurement qubit " + std::to_string(q) +
                            " out of range for a " + std::to_string(config.n_qubits) +
                            "-qubit machine");
    }
  }
  ExecutionReport report;
  report.branches = run_program(program, config);
  report.expected_oracles = expected_oracle_calls(report.branches);
  return report;
}

}  // namespace qgame
