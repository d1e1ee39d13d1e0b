/*
 * Copyright 2026 The codedmv Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CODEDMV_ERRORS_H_
#define CODEDMV_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace codedmv {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters or constructor arguments violate a documented precondition.
class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

// A state vector does not fit the plan it is evaluated against.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON, CSV, or Matrix Market input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The received equations do not determine every block product.
class NotDecodableError : public Error {
 public:
  using Error::Error;
};

// Floating-point decode failed (singular system or inconsistent duplicates).
class NumericError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search would need more work than the caller allowed.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, double required,
                      std::int64_t budget)
      : Error(what + " (needs about " + std::to_string(required) +
              " evaluations, budget is " + std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}

  double required() const { return required_; }
  std::int64_t budget() const { return budget_; }

 private:
  double required_;
  std::int64_t budget_;
};

}  // namespace codedmv

#endif  // CODEDMV_ERRORS_H_
