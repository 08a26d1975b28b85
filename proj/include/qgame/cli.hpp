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
/// Command-line front end: argument parsing, program loading, test/execute
/// dispatch, and exit-code mapping.
///
/// Grammar: qgame (-c CASE... | -x [TT]) -n N -f Q... [-t T] FILE
///          qgame -v | qgame -h
/// `-c` and `-f` consume every following token up to the next option. If
/// `-c` consumed tokens and no positional FILE remains, the last consumed
/// token is reassigned as FILE.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qgame {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitSyntax = 3;
inline constexpr int kExitRuntime = 4;

enum class CliMode { Test, Execute, Version, Help };

struct CliInvocation {
  CliMode mode = CliMode::Test;
  std::vector<std::string> case_tokens;          ///< raw -c tokens, unvalidated
  std::optional<std::string> truth_table_token;  ///< raw -x token
  std::optional<int> n_qubits;
  std::vector<int> final_qubits;
  std::optional<double> threshold;
  std::optional<std::string> file;
};

/// Splits argv-style tokens into an invocation. Raises UsageError on unknown
/// options, malformed numbers, or more than one positional argument.
CliInvocation parse_args(const std::vector<std::string>& args);

std::string usage_text();
std::string help_text();

/// Full front end: parse, load, validate, run, print. Results go to `out`,
/// diagnostics to `err`. Returns one of the kExit* codes; never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qgame
