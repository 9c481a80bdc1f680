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
#include <string>
#include <string_view>
#include <vector>

#include "qmsets/gf2.hpp"
#include "qmsets/random.hpp"
#include "qmsets/rational.hpp"

namespace qmsets {

/// n lines; the state is a nonzero vector in Z2^(2^n). Basis index is the
/// big-endian bitstring with line 0 (Alice) as the most significant bit.
class Register {
  public:
    /// Throws Error(SizeMismatch) unless state has length 2^lines, Error(ZeroState) if zero.
    Register(std::size_t lines, BitVec state);
    /// The basis ket |bits⟩, e.g. "01".
    static Register basis(std::string_view bits);
    /// XOR-sum of basis kets; duplicates cancel. Throws Error(ZeroState) if they all cancel.
    static Register sum_of(std::size_t lines, const std::vector<std::string> &kets);

    std::size_t lines() const noexcept { return lines_; }
    const BitVec &state() const noexcept { return state_; }
    /// Bit of `line` in basis index `index`.
    bool bit(std::size_t index, std::size_t line) const { return (index >> (lines_ - 1 - line)) & 1U; }
    /// "01" for index 1 of a 2-line register.
    std::string basis_label(std::size_t index) const;
    /// Coefficients as "[1,0,1,0]".
    std::string coefficients() const;
    /// "|00> + |11>"
    std::string to_string() const;

    friend bool operator==(const Register &a, const Register &b) = default;

  private:
    std::size_t lines_;
    BitVec state_;
};

struct Gate {
    std::string name;
    GF2Matrix matrix;
    std::size_t width = 0;  ///< lines spanned

    /// Throws Error(SizeMismatch) unless the matrix is 2^k square with k ≥ 1,
    /// Error(Singular) if singular.
    Gate(std::string name, GF2Matrix matrix);
};

/// I, X, H0, H1, XH0, XH1, CNOT_A, CNOT_B. Throws Error(UnknownGate).
Gate standard_gate(std::string_view name);
/// Names accepted by standard_gate.
const std::vector<std::string> &standard_gate_names();
/// Full-register CNOT flipping `target` when `control` is 1. Throws Error(LineOutOfRange).
Gate controlled_not(std::size_t lines, std::size_t control, std::size_t target);

/// Applies g to lines [first_line, first_line + g.width), identity elsewhere.
/// Throws Error(SizeMismatch) if the gate does not fit.
Register apply(const Gate &g, const Register &r, std::size_t first_line = 0);

struct LineMeasurement {
    bool outcome = false;
    Probability probability;
    Register post;
};

/// Born rule over the register support, grouped by the line's bit, then collapse.
/// Throws Error(LineOutOfRange).
LineMeasurement measure_line(const Register &r, std::size_t line, Rng &rng);
/// Throws Error(ImpossibleOutcome) if no basis ket has that bit.
LineMeasurement measure_line_given(const Register &r, std::size_t line, bool outcome);
/// Removes a line whose bit is the same across the support.
/// Throws Error(InvalidArgument) if the line is not definite.
Register drop_line(const Register &r, std::size_t line);

struct TeleportTrace {
    Register input;
    Register phi0;
    Register phi1;
    Register phi2;
    bool classical_bit = false;  ///< Alice's outcome M, sent to Bob
    Probability probability;     ///< of that outcome
    Register collapsed;
    Register bob_received;  ///< Bob's line before the correction
    Register bob_final;     ///< after X^M
    bool success() const { return bob_final == input; }
};

/// Teleports α|0⟩+β|1⟩. Throws Error(ZeroState) when α = β = 0.
TeleportTrace teleport(bool alpha, bool beta, Rng &rng);
/// Same with Alice's outcome fixed.
TeleportTrace teleport_given(bool alpha, bool beta, bool outcome);

/// f: Z2^n -> Z2 as a truth table in input order 0…0, …, 1…1.
class BooleanFunction {
  public:
    /// Throws Error(WrongArity) unless the table has length 2^n with n ≥ 1.
    explicit BooleanFunction(std::vector<bool> table);
    /// "1101"; throws Error(InvalidArgument) for non-binary characters.
    static BooleanFunction parse(std::string_view bits);
    /// Function with index `code`: bit k of code is f(k).
    static BooleanFunction from_code(std::size_t arity, std::uint64_t code);

    std::size_t arity() const noexcept { return arity_; }
    const std::vector<bool> &table() const noexcept { return table_; }
    /// f at the input whose big-endian bitstring is `input`.
    bool operator()(std::size_t input) const { return table_.at(input); }
    std::string to_string() const;

  private:
    std::size_t arity_ = 0;
    std::vector<bool> table_;
};

/// Kronecker product over prefixes p (lexicographic) of X^{f(p,1)}·H_{f(p,0)};
/// spans 2^(n-1) lines.
Gate ef_gate(const BooleanFunction &f);
/// Number of lines used by the parity algorithm for arity n.
std::size_t parity_lines(std::size_t arity);
/// Row sums of a gate matrix mod 2.
BitVec row_sums(const Gate &g);

/// A gate placed on lines [first_line, first_line + gate.width).
struct CircuitStep {
    Gate gate;
    std::size_t first_line = 0;
};

struct Circuit {
    std::size_t lines = 0;
    std::vector<CircuitStep> steps;
};

struct CircuitRun {
    std::vector<Register> states;  ///< initial state, then one per step
    std::vector<std::string> applied;  ///< gate names in order
    std::size_t count(std::string_view gate_name) const;
};

/// Throws Error(SizeMismatch) if the register and circuit disagree on lines.
CircuitRun execute(const Circuit &c, const Register &initial);

/// |0…0⟩, H0 on every line, then E_f.
Circuit parity_circuit(const BooleanFunction &f);

struct ParityResult {
    bool parity = false;               ///< true = odd
    std::vector<bool> slice_parities;  ///< one per prefix, line order
    std::size_t measured_index = 0;
    Register final_state;
    std::size_t ef_applications = 0;
    /// "EO" style code, one letter per slice.
    std::string slice_code() const;
};

ParityResult parity_sat(const BooleanFunction &f);

enum class DeutschAnswer { Constant, Balanced };
std::string_view to_string(DeutschAnswer a);

/// Throws Error(WrongArity) unless arity 1.
DeutschAnswer deutsch(const BooleanFunction &f);
/// Odd parity means satisfiable under the promise of at most one satisfying input.
bool unambiguous_sat(const BooleanFunction &f);

}  // namespace qmsets
