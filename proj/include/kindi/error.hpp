// Copyright 2026 The Kindi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KINDI_ERROR_HPP_
#define KINDI_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace kindi {

// Base class for all typed errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Source-position carrying error (lexing, parsing, elaboration).
class SourceError : public Error {
 public:
  SourceError(int line, int col, const std::string& msg)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

class LexError : public SourceError {
 public:
  using SourceError::SourceError;
};

class ParseError : public SourceError {
 public:
  ParseError(int line, int col, const std::string& expected,
             const std::string& found)
      : SourceError(line, col, "expected " + expected + ", found " + found),
        expected_(expected),
        found_(found) {}

  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::string expected_;
  std::string found_;
};

// An assertion (typically LLM output) referenced a symbol the target module
// does not declare.
class UnknownSymbolError : public SourceError {
 public:
  UnknownSymbolError(int line, int col, const std::string& name)
      : SourceError(line, col, "unknown symbol '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ElabError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace kindi

#endif  // KINDI_ERROR_HPP_
