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

#include "qmsets/error.hpp"

namespace qmsets {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::DimMismatch: return "DimMismatch";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::UniverseMismatch: return "UniverseMismatch";
        case ErrorKind::ZeroState: return "ZeroState";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::ImpossibleOutcome: return "ImpossibleOutcome";
        case ErrorKind::IncompatibleAttributes: return "IncompatibleAttributes";
        case ErrorKind::NotComplete: return "NotComplete";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::UnknownGate: return "UnknownGate";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::WrongArity: return "WrongArity";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::LineOutOfRange: return "LineOutOfRange";
        case ErrorKind::ZeroInitial: return "ZeroInitial";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

}  // namespace qmsets
