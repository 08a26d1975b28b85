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

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "doctest.h"
#include "qgame/evaluator.hpp"
#include "qgame/parser.hpp"
#include "test_util.hpp"

using namespace qgame;

namespace {

SimulationConfig config_for(int n) {
  SimulationConfig cfg;
  cfg.n_qubits = n;
  return cfg;
}

}  // namespace

TEST_CASE("parse_test_case splits bits and desired output") {
  const TestCase tc = parse_test_case("0110-2");
  CHECK(tc.truth_table == std::vector<std::uint8_t>{0, 1, 1, 0});
  CHECK(tc.desired_output == 2);
  CHECK(parse_test_case("01-0").truth_table.size() == 2);
  CHECK(parse_test_case("10011010-13").desired_output == 13);
}

TEST_CASE("parse_test_case rejects malformed tokens") {
  for (const char* bad : {"0000", "-1", "0000-", "01x0-1", "000-0", "0000-x",
                          "0-0", "", "-", "0000--1", "0000-1x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_test_case(bad), UsageError);
  }
}

TEST_CASE("parse_test_case rejects absurdly large outputs") {
  CHECK_THROWS_AS(parse_test_case("0000-99999999999999999999"), UsageError);
}

TEST_CASE("parse_truth_table accepts power-of-two bit strings") {
  CHECK(parse_truth_table("1000") == std::vector<std::uint8_t>{1, 0, 0, 0});
  CHECK(parse_truth_table("01") == std::vector<std::uint8_t>{0, 1});
  for (const char* bad : {"", "1", "101", "10x0", "abcd"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_truth_table(bad), UsageError);
  }
}

TEST_CASE("evaluate_case scores a perfect program with zero error") {
  const Program p = parse_program_text("");
  const TestCase tc = parse_test_case("00-0");
  const std::array<int, 1> finals{0};
  const CaseOutcome out = evaluate_case(p, tc, finals, 0.5, config_for(1));
  CHECK(out.error_probability == doctest::Approx(0.0));
  CHECK(out.expected_oracles == 0.0);
  CHECK_FALSE(out.is_miss);
}

TEST_CASE("evaluate_case flags a miss when the error exceeds the threshold") {
  const Program p = parse_program_text("(HADAMARD 0)");
  const TestCase tc = parse_test_case("00-0");
  const std::array<int, 1> finals{0};
  const CaseOutcome strict = evaluate_case(p, tc, finals, 0.48, config_for(1));
  CHECK(strict.error_probability == doctest::Approx(0.5));
  CHECK(strict.is_miss);
  const CaseOutcome lax = evaluate_case(p, tc, finals, 0.51, config_for(1));
  CHECK_FALSE(lax.is_miss);
}

TEST_CASE("a case exactly at the threshold is not a miss") {
  // The empty program has an exactly representable error of 0.
  const Program p = parse_program_text("");
  const TestCase tc = parse_test_case("00-0");
  const std::array<int, 1> finals{0};
  const CaseOutcome out = evaluate_case(p, tc, finals, 0.0, config_for(1));
  CHECK(out.error_probability == 0.0);
  CHECK_FALSE(out.is_miss);
}

TEST_CASE("evaluate_case error stays within [0, 1]") {
  const Program p = parse_program_text("(HADAMARD 0) (HADAMARD 1)");
  const TestCase tc = parse_test_case("00-3");
  const std::array<int, 2> finals{1, 0};
  const CaseOutcome out = evaluate_case(p, tc, finals, 0.1, config_for(2));
  CHECK(out.error_probability >= 0.0);
  CHECK(out.error_probability <= 1.0);
  CHECK(out.error_probability == doctest::Approx(0.75));
}

TEST_CASE("evaluate_case validates the desired output range") {
  const Program p = parse_program_text("");
  const std::array<int, 1> finals{0};
  TestCase tc;
  tc.truth_table = {0, 0};
  tc.desired_output = 2;  // one final qubit can only spell 0 or 1
  CHECK_THROWS_AS(evaluate_case(p, tc, finals, 0.5, config_for(1)), ValidationError);
  tc.desired_output = -1;
  CHECK_THROWS_AS(evaluate_case(p, tc, finals, 0.5, config_for(1)), ValidationError);
}

TEST_CASE("evaluate_case requires final qubits") {
  const Program p = parse_program_text("");
  const TestCase tc = parse_test_case("00-0");
  CHECK_THROWS_AS(evaluate_case(p, tc, {}, 0.5, config_for(1)), ValidationError);
}

TEST_CASE("evaluate_case counts expected oracle calls") {
  const Program p = parse_program_text("(ORACLE 1 0)");
  const TestCase tc = parse_test_case("10-2");
  const std::array<int, 2> finals{1, 0};
  const CaseOutcome out = evaluate_case(p, tc, finals, 0.5, config_for(2));
  CHECK(out.expected_oracles == doctest::Approx(1.0));
  // tt reads input qubit 1 (still 0): tt[0]=1 flips the output qubit 0,
  // so the finals (q1,q0) spell 01 = 1, not the desired 2.
  CHECK(out.error_probability == doctest::Approx(1.0));
}

TEST_CASE("run_test_suite aggregates across cases") {
  const Program p = parse_program_text("(ORACLE 0 1)");
  // Identity readout on qubit 1: output bit equals tt[0].
  const std::vector<TestCase> cases{parse_test_case("00-0"), parse_test_case("10-1"),
                                    parse_test_case("01-0"), parse_test_case("11-1")};
  const std::array<int, 1> finals{1};
  const TestResult result = run_test_suite(p, cases, finals, 0.5, config_for(2));
  REQUIRE(result.cases.size() == 4);
  CHECK(result.misses == 0);
  CHECK(result.max_error == doctest::Approx(0.0));
  CHECK(result.avg_error == doctest::Approx(0.0));
  CHECK(result.max_expected_oracles == doctest::Approx(1.0));
  CHECK(result.avg_expected_oracles == doctest::Approx(1.0));
}

TEST_CASE("run_test_suite recomputes the same aggregates as its per-case list") {
  const Program p =
      parse_program_text("(HADAMARD 1) (ORACLE 1 0) (MEASURE 0) (END) (END)");
  const std::vector<TestCase> cases{parse_test_case("01-1"), parse_test_case("10-0"),
                                    parse_test_case("11-1"), parse_test_case("00-0")};
  const std::array<int, 1> finals{0};
  const TestResult result = run_test_suite(p, cases, finals, 0.3, config_for(2));
  REQUIRE(result.cases.size() == cases.size());
  int misses = 0;
  double max_err = 0.0, sum_err = 0.0, max_oracles = 0.0, sum_oracles = 0.0;
  for (const CaseOutcome& c : result.cases) {
    misses += c.is_miss ? 1 : 0;
    max_err = std::max(max_err, c.error_probability);
    sum_err += c.error_probability;
    max_oracles = std::max(max_oracles, c.expected_oracles);
    sum_oracles += c.expected_oracles;
  }
  CHECK(result.misses == misses);
  CHECK(result.max_error == doctest::Approx(max_err));
  CHECK(result.avg_error == doctest::Approx(sum_err / 4.0));
  CHECK(result.max_expected_oracles == doctest::Approx(max_oracles));
  CHECK(result.avg_expected_oracles == doctest::Approx(sum_oracles / 4.0));
}

TEST_CASE("run_test_suite aggregate values do not depend on case order") {
  const Program p =
      parse_program_text("(HADAMARD 1) (ORACLE 1 0) (MEASURE 0) (END) (END)");
  std::vector<TestCase> cases{parse_test_case("01-1"), parse_test_case("10-0"),
                              parse_test_case("11-1"), parse_test_case("00-0")};
  const std::array<int, 1> finals{0};
  const TestResult fwd = run_test_suite(p, cases, finals, 0.3, config_for(2));
  std::reverse(cases.begin(), cases.end());
  const TestResult rev = run_test_suite(p, cases, finals, 0.3, config_for(2));
  CHECK(fwd.misses == rev.misses);
  CHECK(std::abs(fwd.max_error - rev.max_error) < 1e-15);
  CHECK(std::abs(fwd.avg_error - rev.avg_error) < 1e-15);
  CHECK(std::abs(fwd.avg_expected_oracles - rev.avg_expected_oracles) < 1e-15);
}

TEST_CASE("run_test_suite validates its inputs") {
  const Program p = parse_program_text("");
  const std::array<int, 1> finals{0};
  CHECK_THROWS_AS(run_test_suite(p, {}, finals, 0.5, config_for(1)),
                  ValidationError);
  const std::vector<TestCase> uneven{parse_test_case("00-0"),
                                     parse_test_case("0000-0")};
  CHECK_THROWS_AS(run_test_suite(p, uneven, finals, 0.5, config_for(1)),
                  ValidationError);
}

TEST_CASE("threshold one never misses") {
  const Program p = parse_program_text("(HADAMARD 0)");
  const std::vector<TestCase> cases{parse_test_case("00-0"),
                                    parse_test_case("11-1")};
  const std::array<int, 1> finals{0};
  const TestResult result = run_test_suite(p, cases, finals, 1.0, config_for(1));
  CHECK(result.misses == 0);
}

TEST_CASE("the search fixture solves its full test suite") {
  const Program p = parse_program_text(
      qgame::testing::read_file(qgame::testing::fixture_path("grover.qcp")),
      "grover.qcp");
  const std::vector<TestCase> cases{
      parse_test_case("1000-0"), parse_test_case("0100-1"),
      parse_test_case("0010-2"), parse_test_case("0001-3")};
  const std::array<int, 2> finals{2, 1};
  const TestResult result = run_test_suite(p, cases, finals, 0.48, config_for(3));
  CHECK(result.misses == 0);
  CHECK(result.max_error < 1e-9);
  CHECK(result.avg_error < 1e-9);
  CHECK(result.max_expected_oracles == 1.0);
  CHECK(result.avg_expected_oracles == 1.0);
}

TEST_CASE("execute_program reports branches and expected oracles") {
  SimulationConfig cfg = config_for(2);
  cfg.oracle_truth_table = std::vector<std::uint8_t>{1, 0};
  const Program p =
      parse_program_text("(HADAMARD 1) (ORACLE 1 0) (MEASURE 0) (END) (END)");
  const std::array<int, 2> finals{1, 0};
  const ExecutionReport report = execute_program(p, cfg, finals);
  CHECK(report.branches.size() == 2);
  CHECK(report.expected_oracles == doctest::Approx(1.0));
}

TEST_CASE("execute_program range-checks the final qubits") {
  const Program p = parse_program_text("");
  const std::array<int, 1> bad{3};
  CHECK_THROWS_AS(execute_program(p, config_for(2), bad), ValidationError);
  const std::array<int, 1> negative{-1};
  CHECK_THROWS_AS(execute_program(p, config_for(2), negative), ValidationError);
  CHECK_NOTHROW(execute_program(p, config_for(2)));
}
