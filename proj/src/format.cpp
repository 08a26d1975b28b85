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

#include "qgame/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <vector>

namespace qgame {
namespace {

// "5.00e-04" -> "5e-4", "1.23e+03" -> "1.23e3".
std::string trim_scientific(const std::string& s) {
  const std::size_t e = s.find_first_of("eE");
  std::string mantissa = s.substr(0, e);
  std::string exponent = s.substr(e + 1);
  if (mantissa.find('.') != std::string::npos) {
    while (mantissa.back() == '0') mantissa.pop_back();
    if (mantissa.back() == '.') mantissa.pop_back();
  }
  bool negative = false;
  std::size_t i = 0;
  if (exponent[0] == '+') {
    i = 1;
  } else if (exponent[0] == '-') {
    negative = true;
    i = 1;
  }
  while (i + 1 < exponent.size() && exponent[i] == '0') ++i;
  const std::string digits = exponent.substr(i);
  if (digits == "0") return mantissa;
  return mantissa + "e" + (negative ? "-" : "") + digits;
}

}  // namespace

std::string format_real(double value) {
  if (value == 0.0) return "0";
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  if (std::abs(value) < 1e-3) {
    std::snprintf(buf, sizeof(buf), "%.2e", value);
    return trim_scientific(buf);
  }
  std::snprintf(buf, sizeof(buf), "%.3g", value);
  const std::string s(buf);
  if (s.find_first_of("eE") != std::string::npos) return trim_scientific(s);
  return s;
}

std::string format_amplitude(const Amplitude& amplitude) {
  const std::string re = format_real(amplitude.real());
  if (amplitude.imag() == 0.0) return re;
  const std::string im = format_real(std::abs(amplitude.imag()));
  return re + (amplitude.imag() < 0.0 ? "-" : "+") + im + "i";
}

std::string register_label(Eigen::Index index, int n_qubits) {
  std::string label = "|";
  for (int q = n_qubits - 1; q >= 0; --q) {
    label += ((index >> q) & 1) ? '1' : '0';
  }
  label += '>';
  return label;
}

std::string format_amplitude_table(const StateVector& state) {
  const int n = num_qubits(state);
  std::vector<std::string> labels, amps, probs;
  labels.reserve(static_cast<std::size_t>(state.size()));
  std::size_t label_width = std::string("Register").size();
  std::size_t amp_width = std::string("Amplitude").size();
  for (Eigen::Index b = 0; b < state.size(); ++b) {
    labels.push_back(register_label(b, n));
    amps.push_back(format_amplitude(state[b]));
    probs.push_back(format_real(std::norm(state[b])));
    label_width = std::max(label_width, labels.back().size());
    amp_width = std::max(amp_width, amps.back().size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(label_width)) << "Register" << "  "
      << std::setw(static_cast<int>(amp_width)) << "Amplitude" << "  "
      << "Probability\n";
  for (std::size_t row = 0; row < labels.size(); ++row) {
    out << std::setw(static_cast<int>(label_width)) << labels[row] << "  "
        << std::setw(static_cast<int>(amp_width)) << amps[row] << "  "
        << probs[row] << "\n";
  }
  return out.str();
}

std::string format_test_result(const TestResult& result) {
  std::ostringstream out;
  out << "MISSES: " << result.misses << "\n"
      << "MAX-ERROR: " << format_real(result.max_error) << "\n"
      << "AVG-ERROR: " << format_real(result.avg_error) << "\n"
      << "MAX-EXPECTED-ORACLES: " << format_real(result.max_expected_oracles) << "\n"
      << "AVG-EXPECTED-ORACLES: " << format_real(result.avg_expected_oracles) << "\n";
  return out.str();
}

}  // namespace qgame
