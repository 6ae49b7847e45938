// Copyright 2026 The Authors.
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

#ifndef SPARSEMDS_ERRORS_H_
#define SPARSEMDS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sparsemds {

// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic between elements (or matrices) of different prime fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

// Dimensions do not fit the operation (non-square, wrong vector length...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Enumeration-based checks refuse instances above their size caps.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// Malformed `.sm` / `.gm` text or CLI vector.
class ParseError : public Error {
 public:
  using Error::Error;
};

class InsufficientSymbolsError : public Error {
 public:
  using Error::Error;
};

// Known symbols admit no common message: errors are present, not just
// erasures.
class InconsistentSymbolsError : public Error {
 public:
  using Error::Error;
};

// Explicit field size at or below the binomial bound without an override.
class FieldTooSmallError : public Error {
 public:
  using Error::Error;
};

class AttemptsExhaustedError : public Error {
 public:
  using Error::Error;
};

// A state the algorithms prove unreachable. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sparsemds

#endif  // SPARSEMDS_ERRORS_H_
