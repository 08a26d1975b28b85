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
/// Complex state vector of an n-qubit register and in-place application of
/// k-qubit unitaries without materialising the full 2^n x 2^n operator.
///
/// Basis convention: for basis index b, the value of qubit q is bit q of b,
/// so qubit 0 is the least significant bit. A printed ket |b_{n-1}...b_0>
/// lists qubit n-1 leftmost.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qgame/errors.hpp"

namespace qgame {

template <typename Scalar>
using Complex = std::complex<Scalar>;

/// Column vector of 2^n amplitudes.
template <typename Scalar>
using AmpVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

/// Dense 2^k x 2^k complex gate matrix.
template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

using Amplitude = Complex<double>;
using StateVector = AmpVector<double>;
using GateMatrix = ComplexMatrix<double>;

/// Default memory ceiling: 2^24 amplitudes = 256 MiB. Overridable per call.
inline constexpr int kDefaultMaxQubits = 24;

/// Tolerance for the unitarity check applied to caller-supplied matrices.
inline constexpr double kUnitarityTolerance = 1e-9;

namespace detail {

inline int log2_exact(Eigen::Index size) {
  if (size < 2 || (size & (size - 1)) != 0)
    throw ValidationError("amplitude vector length " + std::to_string(size) +
                          " is not a power of two >= 2");
  int n = 0;
  while ((Eigen::Index{1} << n) < size) ++n;
  return n;
}

inline void check_targets(std::span<const int> targets, int n_qubits) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n_qubits)
      throw ValidationError("target qubit " + std::to_string(targets[i]) +
                            " out of range for a " + std::to_string(n_qubits) +
                            "-qubit register");
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j])
        throw ValidationError("duplicate target qubit " + std::to_string(targets[i]));
  }
}

/// Inserts a zero bit at position `pos`, shifting higher bits left.
inline Eigen::Index insert_zero_bit(Eigen::Index value, int pos) {
  const Eigen::Index low = (Eigen::Index{1} << pos) - 1;
  return ((value & ~low) << 1) | (value & low);
}

}  // namespace detail

/// Number of qubits described by an amplitude vector (its length must be a
/// power of two).
template <typename Derived>
int num_qubits(const Eigen::MatrixBase<Derived>& amps) {
  return detail::log2_exact(amps.size());
}

/// |00...0>: amplitude 1 at index 0.
template <typename Scalar = double>
AmpVector<Scalar> zero_state(int n_qubits, int max_qubits = kDefaultMaxQubits) {
  if (n_qubits < 1 || n_qubits > max_qubits)
    throw ValidationError("qubit count " + std::to_string(n_qubits) +
                          " outside the supported range [1, " +
                          std::to_string(max_qubits) + "]");
  AmpVector<Scalar> amps = AmpVector<Scalar>::Zero(Eigen::Index{1} << n_qubits);
  amps[0] = Complex<Scalar>{1};
  return amps;
}

/// max |U^dagger U - I| over all entries; 0 for a perfectly unitary matrix.
template <typename Derived>
auto unitarity_error(const Eigen::MatrixBase<Derived>& m) {
  using Mat = typename Derived::PlainObject;
  if (m.rows() != m.cols())
    throw ValidationError("gate matrix is not square");
  return ((m.adjoint() * m) - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

/// Applies a 2^k x 2^k unitary to the listed target qubits, in place.
///
/// targets[0] addresses the most significant bit of the gate's 2^k basis.
/// For every assignment of the non-target qubits the 2^k sub-vector gathered
/// from the target positions is replaced by `gate` times that sub-vector.
template <typename VecDerived, typename MatDerived>
void apply_gate_in_place(Eigen::MatrixBase<VecDerived>& amps,
                         const Eigen::MatrixBase<MatDerived>& gate,
                         std::span<const int> targets) {
  using Scalar = typename Eigen::NumTraits<typename VecDerived::Scalar>::Real;
  const int n = num_qubits(amps);
  const int k = static_cast<int>(targets.size());
  if (k < 1 || k > n)
    throw ValidationError("gate acts on " + std::to_string(k) +
                          " qubits, register has " + std::to_string(n));
  const Eigen::Index gate_dim = Eigen::Index{1} << k;
  if (gate.rows() != gate_dim || gate.cols() != gate_dim)
    throw ValidationError("gate matrix is " + std::to_string(gate.rows()) + "x" +
                          std::to_string(gate.cols()) + ", expected " +
                          std::to_string(gate_dim) + "x" + std::to_string(gate_dim) +
                          " for " + std::to_string(k) + " target qubit(s)");
  detail::check_targets(targets, n);
  if (unitarity_error(gate) > static_cast<Scalar>(kUnitarityTolerance))
    throw SimulationError("non-unitary transformation");

  // scatter[g] = bits of gate-basis index g placed at the target positions.
  std::vector<Eigen::Index> scatter(static_cast<std::size_t>(gate_dim), 0);
  for (Eigen::Index g = 0; g < gate_dim; ++g)
    for (int j = 0; j < k; ++j)
      if ((g >> (k - 1 - j)) & 1) scatter[static_cast<std::size_t>(g)] |= Eigen::Index{1} << targets[j];

  std::vector<int> ascending(targets.begin(), targets.end());
  std::sort(ascending.begin(), ascending.end());

  AmpVector<Scalar> sub(gate_dim);
  AmpVector<Scalar> out(gate_dim);
  const Eigen::Index outer = amps.size() >> k;
  for (Eigen::Index i = 0; i < outer; ++i) {
    Eigen::Index base = i;
    for (int pos : ascending) base = detail::insert_zero_bit(base, pos);
    for (Eigen::Index g = 0; g < gate_dim; ++g)
      sub[g] = amps(base | scatter[static_cast<std::size_t>(g)]);
    out.noalias() = gate * sub;
    for (Eigen::Index g = 0; g < gate_dim; ++g)
      amps.derived()(base | scatter[static_cast<std::size_t>(g)]) = out[g];
  }
}

template <typename Scalar, typename MatDerived>
AmpVector<Scalar> apply_gate(AmpVector<Scalar> amps,
                             const Eigen::MatrixBase<MatDerived>& gate,
                             std::span<const int> targets) {
  apply_gate_in_place(amps, gate, targets);
  return amps;
}

/// Born-rule probability that measuring `qubit` yields `value`.
template <typename Derived>
auto probability_of(const Eigen::MatrixBase<Derived>& amps, int qubit, int value) {
  using Scalar = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const int n = num_qubits(amps);
  if (qubit < 0 || qubit >= n)
    throw ValidationError("qubit " + std::to_string(qubit) + " out of range for a " +
                          std::to_string(n) + "-qubit register");
  if (value != 0 && value != 1)
    throw ValidationError("measured value must be 0 or 1");
  const Eigen::Index mask = Eigen::Index{1} << qubit;
  Scalar p = 0;
  for (Eigen::Index b = 0; b < amps.size(); ++b)
    if (((b & mask) != 0) == (value == 1)) p += std::norm(Complex<Scalar>(amps(b)));
  return p;
}

/// Projects onto qubit == value and renormalises, in place.
template <typename Derived>
void collapse_in_place(Eigen::MatrixBase<Derived>& amps, int qubit, int value) {
  using Scalar = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const Scalar p = probability_of(amps, qubit, value);
  if (!(p > Scalar{0}))
    throw SimulationError("zero-probability collapse requested: qubit " +
                          std::to_string(qubit) + " = " + std::to_string(value));
  const Scalar scale = Scalar{1} / std::sqrt(p);
  const Eigen::Index mask = Eigen::Index{1} << qubit;
  for (Eigen::Index b = 0; b < amps.size(); ++b) {
    if (((b & mask) != 0) == (value == 1))
      amps.derived()(b) *= scale;
    else
      amps.derived()(b) = Complex<Scalar>{0};
  }
}

template <typename Scalar>
AmpVector<Scalar> collapse(AmpVector<Scalar> amps, int qubit, int value) {
  collapse_in_place(amps, qubit, value);
  return amps;
}

/// Marginal distribution over the integer spelled by the listed qubits,
/// first listed qubit most significant. Result has 2^k entries summing to 1.
/// A repeated qubit contributes its bit at every listed position; the result
/// is still a distribution.
template <typename Derived>
auto read_distribution(const Eigen::MatrixBase<Derived>& amps,
                       std::span<const int> qubits_msb_first) {
  using Scalar = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const int n = num_qubits(amps);
  if (qubits_msb_first.empty())
    throw ValidationError("at least one measurement qubit required");
  if (qubits_msb_first.size() > 30)
    throw ValidationError("too many measurement qubits");
  for (int q : qubits_msb_first)
    if (q < 0 || q >= n)
      throw ValidationError("measurement qubit " + std::to_string(q) +
                            " out of range for a " + std::to_string(n) +
                            "-qubit register");
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> dist =
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(Eigen::Index{1}
                                                     << qubits_msb_first.size());
  for (Eigen::Index b = 0; b < amps.size(); ++b) {
    Eigen::Index v = 0;
    for (int q : qubits_msb_first) v = (v << 1) | ((b >> q) & 1);
    dist[v] += std::norm(Complex<Scalar>(amps(b)));
  }
  return dist;
}

/// Applies the oracle permutation |x, out> -> |x, out xor tt[x]>, where the
/// row index x is read from the input qubits with inputs[0] most significant.
template <typename Derived>
void apply_oracle_in_place(Eigen::MatrixBase<Derived>& amps,
                           std::span<const std::uint8_t> truth_table,
                           std::span<const int> inputs, int output) {
  const int n = num_qubits(amps);
  const std::size_t m = inputs.size();
  if (m < 1) throw ValidationError("oracle requires at least one input qubit");
  if (m > 30 || truth_table.size() != (std::size_t{1} << m))
    throw ValidationError("oracle with " + std::to_string(m) +
                          " inputs requires a truth table of length 2^" +
                          std::to_string(m) + ", got " +
                          std::to_string(truth_table.size()));
  for (std::uint8_t bit : truth_table)
    if (bit != 0 && bit != 1)
      throw ValidationError("oracle truth table entries must be 0 or 1");
  std::vector<int> touched(inputs.begin(), inputs.end());
  touched.push_back(output);
  detail::check_targets(touched, n);

  const Eigen::Index out_mask = Eigen::Index{1} << output;
  for (Eigen::Index b = 0; b < amps.size(); ++b) {
    if (b & out_mask) continue;
    std::size_t x = 0;
    for (int q : inputs) x = (x << 1) | static_cast<std::size_t>((b >> q) & 1);
    if (truth_table[x]) std::swap(amps.derived()(b), amps.derived()(b | out_mask));
  }
}

template <typename Scalar>
AmpVector<Scalar> apply_oracle(AmpVector<Scalar> amps,
                               std::span<const std::uint8_t> truth_table,
                               std::span<const int> inputs, int output) {
  apply_oracle_in_place(amps, truth_table, inputs, output);
  return amps;
}

/// | ||amps||^2 - 1 |, zero for a normalised state.
template <typename Derived>
auto norm_error(const Eigen::MatrixBase<Derived>& amps) {
  using Scalar = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return std::abs(amps.squaredNorm() - Scalar{1});
}

}  // namespace qgame
