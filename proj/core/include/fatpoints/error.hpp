// Copyright 2026 The fatpoints Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
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

namespace fatpoints {

// Base class for every error raised by the library. Callers that only need
// to distinguish "bad input" from "bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (bad modulus, degree, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Syntax error in the scheme mini-language, with the byte offset at which
// parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Well-formed text describing an inconsistent scheme; `item` is the index of
// the offending comma-separated item.
class SemanticError : public Error {
 public:
  SemanticError(const std::string& what, std::size_t item)
      : Error(what + " (item " + std::to_string(item) + ")"), item_(item) {}
  std::size_t item() const noexcept { return item_; }

 private:
  std::size_t item_;
};

// The requested map does not come from a system of projective dimension n.
class NotACremonaCandidate : public Error {
 public:
  using Error::Error;
};

// A fiber census would exceed the configured operation budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, unsigned suggested_prime)
      : Error(what), suggested_prime_(suggested_prime) {}
  unsigned suggested_prime() const noexcept { return suggested_prime_; }

 private:
  unsigned suggested_prime_;
};

}  // namespace fatpoints
