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
/// Built-in gate matrices. Two-qubit gates act on the |control,target> basis
/// with the control qubit as the most significant bit, matching the
/// targets[0]-is-most-significant convention of apply_gate_in_place.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>

#include "qgame/statevector.hpp"

namespace qgame {

template <typename Scalar>
using Matrix2c = Eigen::Matrix<Complex<Scalar>, 2, 2>;

template <typename Scalar>
using Matrix4c = Eigen::Matrix<Complex<Scalar>, 4, 4>;

/// [[0,1],[1,0]]
template <typename Scalar = double>
Matrix2c<Scalar> qnot() {
  Matrix2c<Scalar> m;
  m << 0, 1, 1, 0;
  return m;
}

/// (1/sqrt 2) [[1,1],[1,-1]]
template <typename Scalar = double>
Matrix2c<Scalar> hadamard() {
  const Scalar s = Scalar{1} / std::sqrt(Scalar{2});
  Matrix2c<Scalar> m;
  m << s, s, s, -s;
  return m;
}

/// Square root of NOT, (1/sqrt 2) [[1,-1],[1,1]]: applying it twice maps
/// |0> to |1> exactly (SRN^2 = [[0,-1],[1,0]]).
template <typename Scalar = double>
Matrix2c<Scalar> srn() {
  const Scalar s = Scalar{1} / std::sqrt(Scalar{2});
  Matrix2c<Scalar> m;
  m << s, -s, s, s;
  return m;
}

/// Real rotation [[cos t, sin t],[-sin t, cos t]]; identity at t = 0.
template <typename Scalar = double>
Matrix2c<Scalar> u_theta(Scalar theta) {
  const Scalar c = std::cos(theta);
  const Scalar s = std::sin(theta);
  Matrix2c<Scalar> m;
  m << c, s, -s, c;
  return m;
}

/// General single-qubit unitary in Euler-angle form,
///   e^{ia} [[e^{i(-p/2-s/2)} cos t, -e^{i(-p/2+s/2)} sin t],
///           [e^{i( p/2-s/2)} sin t,  e^{i( p/2+s/2)} cos t]]
/// with (p, t, s, a) = (phi, theta, psi, alpha). Unitary for all parameters
/// and a real rotation at phi = psi = alpha = 0.
template <typename Scalar = double>
Matrix2c<Scalar> u2(Scalar phi, Scalar theta, Scalar psi, Scalar alpha) {
  const auto phase = [](Scalar x) { return std::polar(Scalar{1}, x); };
  const Scalar c = std::cos(theta);
  const Scalar s = std::sin(theta);
  const Complex<Scalar> g = phase(alpha);
  Matrix2c<Scalar> m;
  m << g * phase(-phi / 2 - psi / 2) * c, -g * phase(-phi / 2 + psi / 2) * s,
      g * phase(phi / 2 - psi / 2) * s, g * phase(phi / 2 + psi / 2) * c;
  return m;
}

/// Controlled NOT: flips the target bit when the control bit is 1.
template <typename Scalar = double>
Matrix4c<Scalar> cnot() {
  Matrix4c<Scalar> m;
  m << 1, 0, 0, 0,
       0, 1, 0, 0,
       0, 0, 0, 1,
       0, 0, 1, 0;
  return m;
}

/// Controlled phase: diag(1, 1, 1, e^{i alpha}).
template <typename Scalar = double>
Matrix4c<Scalar> cphase(Scalar alpha) {
  Matrix4c<Scalar> m = Matrix4c<Scalar>::Identity();
  m(3, 3) = std::polar(Scalar{1}, alpha);
  return m;
}

/// Exchanges the two qubits: |01> <-> |10>.
template <typename Scalar = double>
Matrix4c<Scalar> swap_gate() {
  Matrix4c<Scalar> m;
  m << 1, 0, 0, 0,
       0, 0, 1, 0,
       0, 1, 0, 0,
       0, 0, 0, 1;
  return m;
}

/// The oracle as an explicit 2^{m+1} x 2^{m+1} permutation matrix over the
/// basis |x, out> with x = inputs value (inputs[0] most significant) and the
/// output qubit as the least significant bit: |x, out> -> |x, out xor tt[x]>.
template <typename Scalar = double>
ComplexMatrix<Scalar> oracle_matrix(std::span<const std::uint8_t> truth_table) {
  const std::size_t rows = truth_table.size();
  if (rows < 2 || (rows & (rows - 1)) != 0)
    throw ValidationError("oracle truth table length " + std::to_string(rows) +
                          " is not a power of two >= 2");
  for (std::uint8_t bit : truth_table)
    if (bit != 0 && bit != 1)
      throw ValidationError("oracle truth table entries must be 0 or 1");
  const Eigen::Index dim = static_cast<Eigen::Index>(rows) * 2;
  ComplexMatrix<Scalar> m = ComplexMatrix<Scalar>::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const std::size_t x = static_cast<std::size_t>(col) >> 1;
    const Eigen::Index out = col & 1;
    m((static_cast<Eigen::Index>(x) << 1) | (out ^ truth_table[x]), col) = 1;
  }
  return m;
}

}  // namespace qgame
