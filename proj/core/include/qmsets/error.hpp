// Copyright 2026 The qmsets Authors
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
#include <string_view>

namespace qmsets {

enum class ErrorKind {
    LengthMismatch,
    DimMismatch,
    NotSquare,
    Singular,
    UniverseMismatch,
    ZeroState,
    OutOfRange,
    ImpossibleOutcome,
    IncompatibleAttributes,
    NotComplete,
    ShapeMismatch,
    UnknownGate,
    SizeMismatch,
    WrongArity,
    ParseError,
    LineOutOfRange,
    ZeroInitial,
    InvalidArgument,
};

/// Stable name of an error kind, e.g. "ZeroState". The CLI prints these.
std::string_view error_name(ErrorKind kind) noexcept;

/// All domain failures are reported through this one exception type; the kind
/// identifies the contract that was violated.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

  private:
    ErrorKind kind_;
};

}  // namespace qmsets
