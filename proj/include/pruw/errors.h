// Copyright 2026 The pruw authors.
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

#include <stdexcept>
#include <string>

namespace pruw {

class PruwError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid system parameters or configuration input.
class ConfigError : public PruwError {
 public:
  using PruwError::PruwError;
};

class DimensionError : public PruwError {
 public:
  using PruwError::PruwError;
};

// Fewer equations than unknowns: the system does not pin down a solution.
class UnderdeterminedError : public DimensionError {
 public:
  using DimensionError::DimensionError;
};

class SingularMatrixError : public PruwError {
 public:
  using PruwError::PruwError;
};

class DivisionByZeroError : public PruwError {
 public:
  using PruwError::PruwError;
};

class IndexError : public PruwError {
 public:
  using PruwError::PruwError;
};

// A peer sent something the protocol forbids (e.g. duplicate write position).
class ProtocolError : public PruwError {
 public:
  using PruwError::PruwError;
};

// Decoded storage disagrees with the plaintext shadow model.
class OracleViolation : public PruwError {
 public:
  using PruwError::PruwError;
};

}  // namespace pruw
