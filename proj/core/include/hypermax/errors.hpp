// Copyright 2026 The hypermax Authors
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

#ifndef HYPERMAX_ERRORS_HPP_
#define HYPERMAX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hypermax {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value violates a documented precondition. The message
// names the violated inequality.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the range of std::int64_t.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to run beyond its size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

// A configured resource limit was hit; partial results are discarded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `line()` is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Broken internal invariant. Never expected when preconditions hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypermax

#endif  // HYPERMAX_ERRORS_HPP_
