// Copyright 2026 The Archipelago Authors
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

namespace archipelago {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated (non-Hermitian input, dimension
/// mismatch, malformed argument).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Index outside the generator range.
class IndexError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Argument outside the real domain of a special function.
class DomainError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Kronecker product would exceed the supported matrix size.
class DimensionOverflowError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Requested physical-domain mode is not available for a model.
class UnsupportedModeError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Sampler set up so that it cannot work (e.g. vanishing acceptance rate).
class ConfigurationError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Iteration failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Optimizer could not find a feasible starting point.
class SearchError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// File could not be written or read.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace archipelago
