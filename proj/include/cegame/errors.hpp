// Copyright 2026 The cegame Authors
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

namespace cegame {

// Base class for every failure raised by the library. The CLI maps the
// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input does not describe a valid game, profile or spec.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A player's resource cannot be placed within its limits, or a flow
// problem has no solution saturating its source edges.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// The instance lies outside the class a solver supports.
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

// The solver stopped making progress at the configured tolerances.
class NumericDegeneracy : public Error {
 public:
  using Error::Error;
};

// Label-correcting shortest paths failed to stabilize.
class NegativeCycleDetected : public Error {
 public:
  using Error::Error;
};

// Malformed game or spec document.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace cegame
