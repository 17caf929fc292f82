// Copyright 2026 The faspkit Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace faspkit {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments to an operation (empty t-norm argument list, value out of
/// range, mismatched interpretation size, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a .fasp source, with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The input uses a connective outside the supported fragment (product logic,
/// t-conorms in bodies, Goedel negation on the MILP path).
class FragmentError : public Error {
 public:
  using Error::Error;
};

/// An exponential enumeration was asked to run past its configured size.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A postcondition the library relies on failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

namespace diag {

// Shared wording so tests and callers can match on it.
inline constexpr const char* kProductUnsupported =
    "product t-norm/negator is not supported: solving product logic needs "
    "quadratically constrained mixed-integer programming (bMICQP), only the "
    "Lukasiewicz/minimum fragment maps to bounded MIP";

inline constexpr const char* kConormUnsupported =
    "t-conorm in a rule body is not supported: with t-conorms the answer sets "
    "can require Goedel negation, whose solution set is not closed and cannot "
    "be captured by completion plus loop formulas";

inline constexpr const char* kGoedelNotMilp =
    "Goedel negation (not_m) cannot be encoded as a mixed-integer program: the "
    "solution set of b = not_m(a) is not topologically closed; use the grid "
    "backend or the check command";

}  // namespace diag

}  // namespace faspkit
