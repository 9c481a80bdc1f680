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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmsets/error.hpp"
#include "qmsets/qc2.hpp"
#include "qmsets/rational.hpp"

namespace qmsets::dsl {

/// Initial register: one bitstring, or an XOR-sum of bitstrings (`init ket`).
struct InitSpec {
    bool ket_form = false;
    std::vector<std::string> kets;
    friend bool operator==(const InitSpec &, const InitSpec &) = default;
};

struct Step {
    enum class Kind { Gate, Measure, MeasureAll };
    Kind kind = Kind::Gate;
    std::string gate;                      ///< gate name for Kind::Gate
    std::vector<std::size_t> operands;     ///< lines: 1 for most gates, control/target for CNOT, none for EF
    std::string table;                     ///< truth table for EF
    std::optional<std::size_t> condition;  ///< apply only if this line last measured 1
    friend bool operator==(const Step &, const Step &) = default;
};

struct CircuitAst {
    std::size_t lines = 0;
    std::optional<InitSpec> init;  ///< absent means all zeros
    std::vector<Step> steps;
    friend bool operator==(const CircuitAst &, const CircuitAst &) = default;
};

/// Error with a 1-based source position. kind() is ParseError, UnknownGate or LineOutOfRange.
class ParseError : public Error {
  public:
    ParseError(ErrorKind kind, std::size_t line, std::size_t column, std::string token, const std::string &message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string &token() const noexcept { return token_; }
    const std::string &detail() const noexcept { return detail_; }

  private:
    std::size_t line_;
    std::size_t column_;
    std::string token_;
    std::string detail_;
};

/// Throws ParseError.
CircuitAst parse(std::string_view text);
/// Canonical text; parse(render(ast)) == ast.
std::string render(const CircuitAst &ast);
/// One statement, as render writes it.
std::string render(const Step &step);

struct MeasurementRecord {
    std::size_t line = 0;
    bool outcome = false;
    Probability probability;
};

struct StepRecord {
    std::string statement;
    bool applied = true;  ///< false when a condition was not met
    std::vector<MeasurementRecord> measurements;
    Register state;
};

struct RunRecord {
    Register initial;
    std::vector<StepRecord> steps;
    std::vector<MeasurementRecord> measurements;  ///< all, in order
    Register final_state;
};

/// Deterministic for a given seed. Throws Error(ZeroInitial) if init cancels to zero.
RunRecord run(const CircuitAst &ast, std::uint64_t seed);
/// Measurements take the given outcomes in order; no sampling happens.
/// Throws Error(InvalidArgument) if outcomes run out, Error(ImpossibleOutcome) if one has probability 0.
RunRecord run_forced(const CircuitAst &ast, const std::vector<bool> &outcomes);

}  // namespace qmsets::dsl
