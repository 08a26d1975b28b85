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

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "qgame/gates.hpp"
#include "qgame/statevector.hpp"

using namespace qgame;

namespace {

StateVector random_state(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  StateVector s(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < s.size(); ++i) s[i] = {gauss(rng), gauss(rng)};
  s /= s.norm();
  return s;
}

}  // namespace

TEST_CASE("zero_state starts in |00...0>") {
  const StateVector s = zero_state(3);
  REQUIRE(s.size() == 8);
  CHECK(s[0] == Amplitude(1));
  for (Eigen::Index i = 1; i < 8; ++i) CHECK(s[i] == Amplitude(0));
  CHECK(num_qubits(s) == 3);
}

TEST_CASE("zero_state enforces the qubit range") {
  CHECK_THROWS_AS(zero_state(0), ValidationError);
  CHECK_THROWS_AS(zero_state(-1), ValidationError);
  CHECK_THROWS_AS(zero_state(25), ValidationError);
  CHECK_NOTHROW(zero_state(4, 4));
  CHECK_THROWS_AS(zero_state(5, 4), ValidationError);
}

TEST_CASE("num_qubits rejects non-power-of-two lengths") {
  StateVector s(3);
  s.setZero();
  CHECK_THROWS_AS(num_qubits(s), ValidationError);
  StateVector one(1);
  one.setZero();
  CHECK_THROWS_AS(num_qubits(one), ValidationError);
}

TEST_CASE("hadamard on a one-qubit register") {
  StateVector s = zero_state(1);
  const std::array<int, 1> t{0};
  apply_gate_in_place(s, hadamard(), t);
  CHECK(s[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(s[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("single-qubit gate touches only its own bit position") {
  StateVector s = zero_state(3);
  const std::array<int, 1> t{2};
  apply_gate_in_place(s, hadamard(), t);
  CHECK(s[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(s[4].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  for (Eigen::Index i : {1, 2, 3, 5, 6, 7}) CHECK(std::abs(s[i]) == 0.0);
}

TEST_CASE("targets[0] is the most significant gate-basis bit") {
  // Prepare |10> (qubit 1 set, basis index 2); CNOT with control 1, target 0
  // must produce |11> (index 3).
  StateVector s = zero_state(2);
  const std::array<int, 1> flip{1};
  apply_gate_in_place(s, qnot(), flip);
  REQUIRE(std::abs(s[2] - Amplitude(1)) < 1e-15);
  const std::array<int, 2> ct{1, 0};
  apply_gate_in_place(s, cnot(), ct);
  CHECK(std::abs(s[3] - Amplitude(1)) < 1e-15);
  CHECK(std::abs(s[2]) == 0.0);
}

TEST_CASE("control and target order changes the operator") {
  StateVector s = zero_state(2);
  const std::array<int, 1> flip{0};
  apply_gate_in_place(s, qnot(), flip);  // |01>, index 1
  const std::array<int, 2> ct{0, 1};     // control 0, target 1
  apply_gate_in_place(s, cnot(), ct);
  CHECK(std::abs(s[3] - Amplitude(1)) < 1e-15);  // |11>
}

TEST_CASE("apply_gate_in_place validates targets and shape") {
  StateVector s = zero_state(2);
  const std::array<int, 1> bad_hi{2};
  const std::array<int, 1> bad_lo{-1};
  const std::array<int, 2> dup{1, 1};
  CHECK_THROWS_AS(apply_gate_in_place(s, qnot(), bad_hi), ValidationError);
  CHECK_THROWS_AS(apply_gate_in_place(s, qnot(), bad_lo), ValidationError);
  CHECK_THROWS_AS(apply_gate_in_place(s, cnot(), dup), ValidationError);
  const std::array<int, 2> two{0, 1};
  CHECK_THROWS_AS(apply_gate_in_place(s, qnot(), two), ValidationError);
  const std::array<int, 3> three{0, 1, 2};
  CHECK_THROWS_AS(apply_gate_in_place(s, cnot(), three), ValidationError);
}

TEST_CASE("non-unitary matrices are rejected at application time") {
  StateVector s = zero_state(1);
  GateMatrix m(2, 2);
  m << 1, 0, 0, 2;  // not unitary
  const std::array<int, 1> t{0};
  CHECK_THROWS_WITH_AS(apply_gate_in_place(s, m, t), "non-unitary transformation",
                       SimulationError);
}

TEST_CASE("probability_of sums the right half of the register") {
  StateVector s = zero_state(2);
  const std::array<int, 1> t{0};
  apply_gate_in_place(s, hadamard(), t);
  CHECK(probability_of(s, 0, 0) == doctest::Approx(0.5));
  CHECK(probability_of(s, 0, 1) == doctest::Approx(0.5));
  CHECK(probability_of(s, 1, 0) == doctest::Approx(1.0));
  CHECK(probability_of(s, 1, 1) == doctest::Approx(0.0));
  CHECK_THROWS_AS(probability_of(s, 2, 0), ValidationError);
  CHECK_THROWS_AS(probability_of(s, 0, 2), ValidationError);
}

TEST_CASE("collapse projects and renormalises") {
  StateVector s = zero_state(1);
  const std::array<int, 1> t{0};
  apply_gate_in_place(s, hadamard(), t);
  collapse_in_place(s, 0, 1);
  CHECK(std::abs(s[0]) == 0.0);
  CHECK(std::abs(s[1]) == doctest::Approx(1.0));
  CHECK(norm_error(s) < 1e-12);
}

TEST_CASE("collapse onto a zero-probability outcome throws") {
  StateVector s = zero_state(1);
  CHECK_THROWS_AS(collapse_in_place(s, 0, 1), SimulationError);
}

TEST_CASE("read_distribution spells values first-qubit-most-significant") {
  StateVector s = zero_state(2);
  const std::array<int, 1> flip{0};
  apply_gate_in_place(s, qnot(), flip);  // |01>: qubit0=1, qubit1=0
  const std::array<int, 2> order_a{1, 0};
  auto da = read_distribution(s, order_a);
  REQUIRE(da.size() == 4);
  CHECK(da[1] == doctest::Approx(1.0));  // bits (q1,q0) = (0,1) -> 1
  const std::array<int, 2> order_b{0, 1};
  auto db = read_distribution(s, order_b);
  CHECK(db[2] == doctest::Approx(1.0));  // bits (q0,q1) = (1,0) -> 2
}

TEST_CASE("read_distribution allows repeated qubits") {
  StateVector s = zero_state(2);
  const std::array<int, 1> flip{0};
  apply_gate_in_place(s, qnot(), flip);  // |01>
  const std::array<int, 2> twice{0, 0};
  auto d = read_distribution(s, twice);
  REQUIRE(d.size() == 4);
  CHECK(d[3] == doctest::Approx(1.0));  // bit 1 written at both positions
  CHECK(d.sum() == doctest::Approx(1.0));
}

TEST_CASE("read_distribution of a uniform superposition is flat") {
  StateVector s = zero_state(2);
  const std::array<int, 1> q0{0};
  const std::array<int, 1> q1{1};
  apply_gate_in_place(s, hadamard(), q0);
  apply_gate_in_place(s, hadamard(), q1);
  const std::array<int, 2> both{1, 0};
  auto d = read_distribution(s, both);
  for (Eigen::Index i = 0; i < 4; ++i) CHECK(d[i] == doctest::Approx(0.25));
}

TEST_CASE("read_distribution validates its arguments") {
  StateVector s = zero_state(2);
  CHECK_THROWS_AS(read_distribution(s, std::span<const int>{}), ValidationError);
  const std::array<int, 1> bad{2};
  CHECK_THROWS_AS(read_distribution(s, bad), ValidationError);
}

TEST_CASE("apply_oracle matches the truth-table mapping on every basis state") {
  // Two inputs (qubits 2, 1; qubit 2 most significant), output qubit 0.
  const std::vector<std::uint8_t> tt{0, 1, 1, 0};  // XOR of the inputs
  const std::vector<int> inputs{2, 1};
  for (Eigen::Index b = 0; b < 8; ++b) {
    StateVector s = StateVector::Zero(8);
    s[b] = 1;
    apply_oracle_in_place(s, tt, inputs, 0);
    const std::size_t x = (static_cast<std::size_t>(b >> 2 & 1) << 1) |
                          static_cast<std::size_t>(b >> 1 & 1);
    const Eigen::Index expect = b ^ (tt[x] ? 1 : 0);
    CHECK(std::abs(s[expect] - Amplitude(1)) < 1e-15);
    CHECK(std::abs(s.squaredNorm() - 1.0) < 1e-15);
  }
}

TEST_CASE("apply_oracle validates the wiring") {
  StateVector s = zero_state(3);
  const std::vector<std::uint8_t> tt4{1, 0, 0, 1};
  const std::vector<int> two_inputs{2, 1};
  const std::vector<int> one_input{2};
  CHECK_NOTHROW(apply_oracle_in_place(s, tt4, two_inputs, 0));
  CHECK_THROWS_AS(apply_oracle_in_place(s, tt4, one_input, 0), ValidationError);
  const std::vector<int> clash{2, 0};
  CHECK_THROWS_AS(apply_oracle_in_place(s, tt4, clash, 0), ValidationError);
  const std::vector<int> empty;
  CHECK_THROWS_AS(apply_oracle_in_place(s, tt4, empty, 0), ValidationError);
  const std::vector<std::uint8_t> bad_bits{1, 2, 0, 0};
  CHECK_THROWS_AS(apply_oracle_in_place(s, bad_bits, two_inputs, 0), ValidationError);
}

TEST_CASE("oracle application agrees with the explicit permutation matrix") {
  std::mt19937 rng(11);
  const std::vector<std::uint8_t> tt{1, 0, 1, 1};
  const std::vector<int> inputs{2, 1};
  StateVector s = random_state(3, rng);
  // Matrix route: qubits (2,1,0) spell the |x,out> basis directly.
  const std::array<int, 3> all{2, 1, 0};
  StateVector via_matrix = apply_gate(StateVector(s), oracle_matrix<double>(tt), all);
  StateVector via_swap = apply_oracle(StateVector(s), tt, inputs, 0);
  CHECK((via_matrix - via_swap).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("random gates preserve the norm") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> angle(-6.0, 6.0);
  std::uniform_int_distribution<int> pick(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    StateVector s = random_state(n, rng);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    for (int step = 0; step < 6; ++step) {
      const int q = qubit(rng);
      switch (pick(rng)) {
        case 0: {
          const std::array<int, 1> t{q};
          apply_gate_in_place(s, hadamard(), t);
          break;
        }
        case 1: {
          const std::array<int, 1> t{q};
          apply_gate_in_place(s, u2(angle(rng), angle(rng), angle(rng), angle(rng)), t);
          break;
        }
        case 2: {
          const std::array<int, 1> t{q};
          apply_gate_in_place(s, u_theta(angle(rng)), t);
          break;
        }
        case 3: {
          if (n < 2) break;
          int r = qubit(rng);
          if (r == q) r = (q + 1) % n;
          const std::array<int, 2> t{q, r};
          apply_gate_in_place(s, cnot(), t);
          break;
        }
        default: {
          if (n < 2) break;
          int r = qubit(rng);
          if (r == q) r = (q + 1) % n;
          const std::array<int, 2> t{q, r};
          apply_gate_in_place(s, cphase(angle(rng)), t);
          break;
        }
      }
    }
    CHECK(norm_error(s) < 1e-10);
  }
}

TEST_CASE("swap via gate matrix equals relabelling the amplitudes") {
  std::mt19937 rng(31);
  StateVector s = random_state(3, rng);
  const std::array<int, 2> t{2, 0};
  StateVector swapped = apply_gate(StateVector(s), swap_gate(), t);
  for (Eigen::Index b = 0; b < 8; ++b) {
    const Eigen::Index hi = (b >> 2) & 1;
    const Eigen::Index lo = b & 1;
    const Eigen::Index mapped = (b & 2) | (lo << 2) | hi;
    CHECK(std::abs(swapped[mapped] - s[b]) < 1e-12);
  }
}

TEST_CASE("apply_gate value form equals the in-place form") {
  std::mt19937 rng(41);
  StateVector s = random_state(2, rng);
  const std::array<int, 2> t{0, 1};
  StateVector by_value = apply_gate(StateVector(s), cnot(), t);
  StateVector in_place = s;
  apply_gate_in_place(in_place, cnot(), t);
  CHECK((by_value - in_place).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("norm_error reports deviation from a unit vector") {
  StateVector s = zero_state(1);
  CHECK(norm_error(s) == 0.0);
  s *= 2.0;
  CHECK(norm_error(s) == doctest::Approx(3.0));
}
