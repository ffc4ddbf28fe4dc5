// Copyright 2026 The PulseForge Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace pulseforge {

// Every error raised by the library derives from Error so callers (the CLI in
// particular) can map whole families onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed Pauli labels, bad coefficients, bad enum names.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Qubit or parameter index out of range, duplicated targets.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Dimension mismatches between states, operators and Hamiltonians.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Dense-size guards (too many qubits).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Inputs outside a function's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Envelope geometry that cannot be realised (negative flat top, sigma <= 0).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A pulse or gate references a qubit pair the device does not couple.
class TopologyError : public Error {
 public:
  using Error::Error;
};

// Pulse parameters outside the active constraint spec.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// Structured-text documents (schedule, device, Hamiltonian) that fail to parse.
// The message carries line/field context.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Template construction problems (length mismatch, unknown id, infeasible budget).
class TemplateError : public Error {
 public:
  using Error::Error;
};

}  // namespace pulseforge
