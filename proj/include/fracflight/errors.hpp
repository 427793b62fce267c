// Copyright 2026 The fracflight Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace fracflight {

// Base of every error raised by the library. The C API maps each subclass
// onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Gamma requested exactly at a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A term-level precondition failed (e.g. an Erdelyi-Kober integral that
// does not exist for the given exponent).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Series did not meet the stopping rule within the term cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature could not reach its error target.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracflight
