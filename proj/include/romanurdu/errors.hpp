// Copyright (c) 2026 The romanurdu Authors
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

#ifndef ROMANURDU_ERRORS_HPP
#define ROMANURDU_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace romanurdu {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text is not valid UTF-8.
class EncodingError : public Error {
 public:
  using Error::Error;
};

// A caller violated an API contract (bad index, empty candidate list, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// A data file could not be parsed. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0)
      : Error(message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Two rows define the same lexicon sense or the same mapping pattern.
class DuplicateEntryError : public ParseError {
 public:
  using ParseError::ParseError;
};

// System output and gold reference disagree on case or word counts.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

}  // namespace romanurdu

#endif  // ROMANURDU_ERRORS_HPP
