// Copyright 2026 The spdpriv Authors
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

#ifndef SPDPRIV_ERRORS_HPP_
#define SPDPRIV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace spdpriv {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation
// (non-positive-definite matrix, empty dataset, epsilon out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operands have incompatible shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A numerical routine failed to converge or produced non-finite output.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Reading or writing a file failed, or its contents could not be parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace spdpriv

#endif  // SPDPRIV_ERRORS_HPP_
