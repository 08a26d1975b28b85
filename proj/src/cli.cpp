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

#include "qgame/cli.hpp"

#include <cerrno>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qgame/errors.hpp"
#include "qgame/evaluator.hpp"
#include "qgame/format.hpp"
#include "qgame/parser.hpp"
#include "qgame/simulator.hpp"
#include "qgame/version.hpp"

namespace qgame {
namespace {

bool is_option(const std::string& token) {
  return token.size() >= 2 && token[0] == '-';
}

int parse_int_token(const std::string& token, const char* flag) {
  errno = 0;
  char* end = nullptr;
  const long value = std::strtol(token.c_str(), &end, 10);
  if (end == token.c_str() || *end != '\0' || errno == ERANGE || value < INT_MIN ||
      value > INT_MAX) {
    throw UsageError(std::string("option ") + flag + ": '" + token +
                     "' is not an integer");
  }
  return static_cast<int>(value);
}

double parse_double_token(const std::string& token, const char* flag) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0' || errno == ERANGE) {
    throw UsageError(std::string("option ") + flag + ": '" + token +
                     "' is not a number");
  }
  return value;
}

std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open program file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad() || buffer.bad()) {
    throw IoError("failed reading program file '" + path + "'");
  }
  return buffer.str();
}

void print_program_echo(std::ostream& out, const Program& program) {
  out << "Program " << program.source_name << ":\n";
  out << to_text(program);
  out << "\n";
}

void run_test_mode(const CliInvocation& inv, const Program& program,
                   std::ostream& out) {
  if (inv.case_tokens.empty()) {
    throw UsageError("test mode requires at least one -c case");
  }
  if (!inv.n_qubits) {
    throw UsageError("test mode requires -n (number of qubits)");
  }
  if (inv.final_qubits.empty()) {
    throw UsageError("test mode requires -f (final measurement qubits)");
  }
  if (!inv.threshold) {
    throw UsageError("test mode requires -t (error threshold)");
  }
  std::vector<TestCase> cases;
  cases.reserve(inv.case_tokens.size());
  for (const std::string& token : inv.case_tokens) {
    cases.push_back(parse_test_case(token));
  }
  SimulationConfig config;
  config.n_qubits = *inv.n_qubits;
  validate_simulation_config(config);
  validate_program(program, config.n_qubits, cases.front().truth_table.size());

  const TestResult result =
      run_test_suite(program, cases, inv.final_qubits, *inv.threshold, config);

  out << format_test_result(result);
  out << "Inputs:\n";
  out << "  cases:";
  for (const std::string& token : inv.case_tokens) out << ' ' << token;
  out << "\n  number of qubits: " << config.n_qubits;
  out << "\n  final measurement qubits:";
  for (int q : inv.final_qubits) out << ' ' << q;
  out << "\n  threshold: " << format_real(*inv.threshold);
  out << "\n  program file: " << *inv.file << "\n";
}

void run_execute_mode(const CliInvocation& inv, const Program& program,
                      std::ostream& out) {
  if (!inv.n_qubits) {
    throw UsageError("execute mode requires -n (number of qubits)");
  }
  SimulationConfig config;
  config.n_qubits = *inv.n_qubits;
  if (inv.truth_table_token) {
    config.oracle_truth_table = parse_truth_table(*inv.truth_table_token);
  }
  validate_simulation_config(config);
  std::optional<std::size_t> tt_size;
  if (config.oracle_truth_table) tt_size = config.oracle_truth_table->size();
  validate_program(program, config.n_qubits, tt_size);

  const ExecutionReport report = execute_program(program, config, inv.final_qubits);

  out << "Branches: " << report.branches.size() << "\n";
  std::size_t index = 1;
  for (const ExecutionBranch& branch : report.branches) {
    out << "\nBranch " << index << " (probability "
        << format_real(branch.probability) << (branch.halted ? ", halted" : "")
        << "):\n";
    if (branch.history.empty()) {
      out << "  no measurements\n";
    } else {
      for (const MeasurementEvent& event : branch.history) {
        out << "  measured qubit " << event.qubit << " -> " << event.outcome
            << " (probability " << format_real(event.probability_at_fork) << ")\n";
      }
    }
    for (const StateVector& snapshot : branch.snapshots) {
      out << "Amplitudes:\n" << format_amplitude_table(snapshot);
    }
    out << "Final amplitudes:\n" << format_amplitude_table(branch.state);
    ++index;
  }
  out << "\nEXPECTED-ORACLES: " << format_real(report.expected_oracles) << "\n";
}

}  // namespace

CliInvocation parse_args(const std::vector<std::string>& args) {
  CliInvocation inv;
  std::vector<std::string> positionals;
  bool saw_c = false;
  bool saw_x = false;
  bool saw_v = false;
  bool saw_h = false;
  std::size_t i = 0;
  while (i < args.size()) {
    const std::string& token = args[i];
    if (token == "-c") {
      saw_c = true;
      ++i;
      while (i < args.size() && !is_option(args[i])) {
        inv.case_tokens.push_back(args[i++]);
      }
    } else if (token == "-x") {
      saw_x = true;
      ++i;
      if (i < args.size() && !is_option(args[i])) {
        inv.truth_table_token = args[i++];
      }
    } else if (token == "-n") {
      ++i;
      if (i >= args.size() || is_option(args[i])) {
        throw UsageError("option -n requires an integer argument");
      }
      inv.n_qubits = parse_int_token(args[i++], "-n");
    } else if (token == "-f") {
      ++i;
      while (i < args.size() && !is_option(args[i])) {
        inv.final_qubits.push_back(parse_int_token(args[i++], "-f"));
      }
    } else if (token == "-t") {
      ++i;
      if (i >= args.size() || is_option(args[i])) {
        throw UsageError("option -t requires a numeric argument");
      }
      inv.threshold = parse_double_token(args[i++], "-t");
    } else if (token == "-v") {
      saw_v = true;
      ++i;
    } else if (token == "-h") {
      saw_h = true;
      ++i;
    } else if (is_option(token)) {
      throw UsageError("unknown option '" + token + "'");
    } else {
      positionals.push_back(token);
      ++i;
    }
  }
  if (saw_v) {
    inv.mode = CliMode::Version;
    return inv;
  }
  if (saw_h) {
    inv.mode = CliMode::Help;
    return inv;
  }
  if (saw_c && saw_x) {
    throw UsageError("options -c and -x are mutually exclusive");
  }
  inv.mode = saw_x ? CliMode::Execute : CliMode::Test;
  if (positionals.size() > 1) {
    throw UsageError("unexpected argument '" + positionals[1] + "'");
  }
  if (positionals.size() == 1) {
    inv.file = positionals[0];
  } else if (!inv.case_tokens.empty()) {
    // No positional left: the last token swallowed by -c doubles as FILE.
    inv.file = inv.case_tokens.back();
    inv.case_tokens.pop_back();
  }
  return inv;
}

std::string usage_text() {
  return "Usage: qgame [OPTIONS] FILE ...\n"
         "Try 'qgame -h' for the full option list.\n";
}

std::string help_text() {
  return
      "Usage: qgame [OPTIONS] FILE ...\n"
      "\n"
      "Runs QGAME quantum programs by state-vector simulation.\n"
      "\n"
      "Modes:\n"
      "  -c CASE...  test mode: evaluate FILE against oracle test cases;\n"
      "              each CASE is TRUTHTABLE-OUTPUT, e.g. 0000-0\n"
      "  -x [TT]     execute mode: run FILE once, with oracle truth table TT\n"
      "              (a bit string such as 1000) when the program calls ORACLE\n"
      "\n"
      "Options:\n"
      "  -n N        number of qubits in the simulated machine\n"
      "  -f Q...     final measurement qubits, most significant first\n"
      "  -t T        error-probability threshold for counting misses\n"
      "              (accepted and ignored in execute mode)\n"
      "  -v          print the version and exit\n"
      "  -h          print this help and exit\n"
      "\n"
      "Examples:\n"
      "  qgame -c 1000-0 0100-1 0010-2 0001-3 -n 3 -f 2 1 -t 0.48 grover.qcp\n"
      "  qgame -x 1000 -n 3 -f 2 1 -t 1 grover.qcp\n"
      "\n"
      "Programs whose qubit indices fall outside [0, N), for example\n"
      "(HADAMARD -2), are rejected with a validation error before any\n"
      "instruction runs.\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliInvocation inv;
  try {
    inv = parse_args(args);
  } catch (const UsageError& e) {
    err << "Error: " << e.what() << "\n" << usage_text();
    return kExitUsage;
  }
  if (inv.mode == CliMode::Version) {
    out << kProgramName << " version " << kVersion << "\n";
    return kExitOk;
  }
  if (inv.mode == CliMode::Help) {
    out << help_text();
    return kExitOk;
  }
  try {
    if (!inv.file) {
      throw UsageError("missing program FILE");
    }
    const std::string text = load_file(*inv.file);
    const Program program = parse_program_text(text, *inv.file);
    print_program_echo(out, program);
    if (inv.mode == CliMode::Test) {
      run_test_mode(inv, program, out);
    } else {
      run_execute_mode(inv, program, out);
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "Error: " << e.what() << "\n" << usage_text();
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O Error: " << e.what() << "\nProgram aborted.\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << "Syntax error: " << e.what() << "\nProgram aborted.\n";
    return kExitSyntax;
  } catch (const ValidationError& e) {
    err << "Syntax error: " << e.what() << "\nProgram aborted.\n";
    return kExitSyntax;
  } catch (const Error& e) {
    err << "Runtime error: " << e.what() << "\nProgram aborted.\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "Runtime error: " << e.what() << "\nProgram aborted.\n";
    return kExitRuntime;
  }
}

}  // namespace qgame
