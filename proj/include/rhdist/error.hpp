// Copyright 2026 The rhdist Authors
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

#ifndef RHDIST_ERROR_HPP_
#define RHDIST_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rhdist {

// Base class for every error raised by the library. The CLI maps all of
// these to the "data error" exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain (e.g. smooth evaluation below 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Family or formula parameters that violate a stated constraint.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Graph with no edges, or an operation that would produce one.
class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rhdist

#endif  // RHDIST_ERROR_HPP_
