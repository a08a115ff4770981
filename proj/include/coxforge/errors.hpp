/*
   Copyright 2026 The coxforge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace coxforge {

/// Division by a zero scalar.
class DivisionByZeroError : public std::domain_error {
  public:
    explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

/// Operands from different fields (or different prime moduli) were mixed.
class FieldMismatchError : public std::invalid_argument {
  public:
    explicit FieldMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// A precondition on user-supplied data failed (bad instance, bad flag, ...).
class UsageError : public std::invalid_argument {
  public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Text could not be parsed; carries a 1-based line/column position.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}

    int line;
    int column;
};

/// An operator was applied outside its domain (e.g. truncation out of K_1).
class DomainUnderflowError : public std::domain_error {
  public:
    explicit DomainUnderflowError(const std::string& what) : std::domain_error(what) {}
};

/// Internal invariant violated; indicates corrupted input state
/// (e.g. a tuple fed to an operator that is not actually a kernel element).
class ConsistencyError : public std::logic_error {
  public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace coxforge
