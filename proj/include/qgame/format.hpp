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
/// Plain-text rendering of amplitudes and results. Reals are shown with
/// three significant digits; magnitudes below 1e-3 switch to e-notation.

#pragma once

#include <string>

#include "qgame/evaluator.hpp"
#include "qgame/statevector.hpp"

namespace qgame {

/// "0" / "1" / "0.5" / "0.707" / "2.36e-17". Exact zero renders as "0".
std::string format_real(double value);

/// "a", "a+bi" or "a-bi"; a zero imaginary part is omitted.
std::string format_amplitude(const Amplitude& amplitude);

/// Ket label "|b_{n-1}...b_0>" for a basis index, qubit n-1 leftmost.
std::string register_label(Eigen::Index index, int n_qubits);

/// "Register  Amplitude  Probability" header plus one aligned row per basis
/// state in ascending index order; probability = |amplitude|^2.
std::string format_amplitude_table(const StateVector& state);

/// The five statistics lines: MISSES, MAX-ERROR, AVG-ERROR,
/// MAX-EXPECTED-ORACLES, AVG-EXPECTED-ORACLES.
std::string format_test_result(const TestResult& result);

}  // namespace qgame
