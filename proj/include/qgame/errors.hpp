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

#pragma once

#include <stdexcept>
#include <string>

namespace qgame {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad command line (unknown flag, malformed token, stray positional).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or missing program file.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Lexical or syntactic failure while reading program text. Carries the
/// 1-based source position of the offending token.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Semantic rejection of an otherwise well-formed program or configuration,
/// e.g. a qubit index outside the register.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Failure during simulation (zero-probability collapse, oracle call limit,
/// non-unitary transformation).
class SimulationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgame
