// Copyright 2026 the su2abelian authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace su2abelian {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (presentation DSL, manifold descriptions, ...).
// Carries the byte offset of the offending character when known.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  explicit ParseError(const std::string& msg) : Error(msg), pos(0) {}
  std::size_t pos;
};

// A documented operation precondition was violated.
struct PreconditionError : Error {
  using Error::Error;
};

struct UnknownGenerator : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct Inadmissible : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct NoWitness : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct IsAbelian : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct NotHyperbolic : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct TraceMinusTwo : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct TraceMismatch : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct InvalidGluing : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct BadDiscriminant : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct DiscriminantMismatch : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct DivisionByZero : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct InvalidSplice : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct InvalidTorusKnot : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct InvalidSeifertData : PreconditionError {
  using PreconditionError::PreconditionError;
};

}  // namespace su2abelian
