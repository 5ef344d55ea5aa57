/*
 * Copyright 2026 The rootform Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef ROOTFORM_ERRORS_HPP_
#define ROOTFORM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rootform {

enum class ErrorKind {
  DegenerateBasis,
  DegenerateLattice,
  IterationLimitExceeded,
  NegativeConorm,
  InvalidArgument,
  ParseError,
  InvalidGridSpec,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the CLI in particular) can tell them apart without parsing
/// the message.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Parse failures remember the 1-based input line.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& reason)
    : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + reason),
      line_(line), reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

private:
  std::size_t line_;
  std::string reason_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

} // namespace rootform

#endif
