// Copyright 2026 The bosonbound Authors
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

namespace bosonbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square input, mismatched dimensions, wrong vector length.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A configured size cap (permanent order, Fock-space dimension) was exceeded.
class SizeLimitError : public Error {
  public:
    using Error::Error;
};

/// A precondition on an input value was violated (unitarity, normalization).
class ContractError : public Error {
  public:
    using Error::Error;
};

/// A scalar parameter is out of its admissible range.
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// Row/column multiplicity vectors do not describe a square submatrix.
class SpecError : public Error {
  public:
    using Error::Error;
};

/// Input Fock state is incompatible with the mode count.
class InputStateError : public Error {
  public:
    using Error::Error;
};

/// Malformed interferometer network (overlapping or out-of-range modes).
class StructureError : public Error {
  public:
    using Error::Error;
};

/// A matrix factorization could not be carried out (e.g. singular input).
class DecompositionError : public Error {
  public:
    using Error::Error;
};

/// Malformed serialized input (JSON/CSV).
class FormatError : public Error {
  public:
    using Error::Error;
};

}  // namespace bosonbound
