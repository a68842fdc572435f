// Copyright 2026 The dpsynth Authors.
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

#ifndef DPSYNTH_ERROR_H_
#define DPSYNTH_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpsynth {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A model object (game, automaton, policy, ...) violates one of its
// structural invariants.
class ModelError : public Error {
 public:
  using Error::Error;
};

// Invalid numeric parameter, e.g. a skew below one.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `line` and `column` are 1-based; zero means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(Format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string Format(const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string where;
    if (line > 0) where += "line " + std::to_string(line);
    if (column > 0) {
      if (!where.empty()) where += ", ";
      where += "column " + std::to_string(column);
    }
    return where.empty() ? message : where + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace dpsynth

#endif  // DPSYNTH_ERROR_H_
