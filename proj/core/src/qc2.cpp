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

#include "qmsets/qc2.hpp"

#include <functional>

#include "qmsets/error.hpp"

namespace qmsets {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t log2_exact(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

void check_line(std::size_t lines, std::size_t line) {
    if (line >= lines) {
        throw Error(ErrorKind::LineOutOfRange,
                    "line " + std::to_string(line) + " out of range for " + std::to_string(lines) + " lines");
    }
}

GF2Matrix power_of_x(bool a) { return a ? GF2Matrix{{0, 1}, {1, 0}} : GF2Matrix::identity(2); }
GF2Matrix hadamard(bool b) { return b ? GF2Matrix{{1, 1}, {0, 1}} : GF2Matrix{{1, 0}, {1, 1}}; }

Register qubit(bool alpha, bool beta) {
    BitVec v(2);
    v.set(0, alpha);
    v.set(1, beta);
    return Register(1, std::move(v));
}

TeleportTrace run_teleport(bool alpha, bool beta, const std::function<LineMeasurement(const Register &)> &measure) {
    if (!alpha && !beta) throw Error(ErrorKind::ZeroState, "cannot teleport the zero vector");
    const Register input = qubit(alpha, beta);
    BitVec v(4);
    v.set(0, alpha);
    v.set(2, beta);
    const Register phi0(2, std::move(v));
    const Register phi1 = apply(standard_gate("H0"), phi0, 1);
    const Register phi2 = apply(standard_gate("CNOT_B"), phi1, 0);
    LineMeasurement m = measure(phi2);
    Register bob = drop_line(m.post, 0);
    Register bob_final = m.outcome ? apply(standard_gate("X"), bob, 0) : bob;
    return TeleportTrace{input, phi0, phi1, phi2, m.outcome, m.probability, m.post, std::move(bob), std::move(bob_final)};
}

}  // namespace

Register::Register(std::size_t lines, BitVec state) : lines_(lines), state_(std::move(state)) {
    if (lines_ == 0 || lines_ >= 32 || state_.size() != (std::size_t{1} << lines_)) {
        throw Error(ErrorKind::SizeMismatch, "register of " + std::to_string(lines_) + " lines needs a state of length 2^" +
                                                 std::to_string(lines_));
    }
    if (state_.is_zero()) throw Error(ErrorKind::ZeroState, "register state is the zero vector");
}

Register Register::basis(std::string_view bits) { return sum_of(bits.size(), {std::string(bits)}); }

Register Register::sum_of(std::size_t lines, const std::vector<std::string> &kets) {
    if (lines == 0 || lines >= 32) throw Error(ErrorKind::SizeMismatch, "unsupported line count " + std::to_string(lines));
    BitVec state(std::size_t{1} << lines);
    for (const auto &k : kets) {
        if (k.size() != lines) {
            throw Error(ErrorKind::SizeMismatch, "ket '" + k + "' does not have " + std::to_string(lines) + " bits");
        }
        std::size_t index = 0;
        for (char c : k) {
            if (c != '0' && c != '1') throw Error(ErrorKind::InvalidArgument, "ket '" + k + "' is not binary");
            index = (index << 1) | static_cast<std::size_t>(c == '1');
        }
        state.flip(index);
    }
    return Register(lines, std::move(state));
}

std::string Register::basis_label(std::size_t index) const {
    std::string s(lines_, '0');
    for (std::size_t line = 0; line < lines_; ++line) s[line] = bit(index, line) ? '1' : '0';
    return s;
}

std::string Register::coefficients() const {
    std::string s = "[";
    for (std::size_t i = 0; i < state_.size(); ++i) {
        if (i > 0) s += ",";
        s += state_.get(i) ? "1" : "0";
    }
    return s + "]";
}

std::string Register::to_string() const {
    std::string s;
    for (std::size_t i : state_.ones()) {
        if (!s.empty()) s += " + ";
        s += "|" + basis_label(i) + ">";
    }
    return s;
}

Gate::Gate(std::string n, GF2Matrix m) : name(std::move(n)), matrix(std::move(m)) {
    if (!matrix.is_square() || matrix.rows() < 2 || !is_power_of_two(matrix.rows())) {
        throw Error(ErrorKind::SizeMismatch, "gate '" + name + "' must be a 2^k square matrix");
    }
    if (!is_nonsingular(matrix)) throw Error(ErrorKind::Singular, "gate '" + name + "' is singular");
    width = log2_exact(matrix.rows());
}

const std::vector<std::string> &standard_gate_names() {
    static const std::vector<std::string> names{"I", "X", "H0", "H1", "XH0", "XH1", "CNOT_A", "CNOT_B"};
    return names;
}

Gate standard_gate(std::string_view name) {
    if (name == "I") return Gate("I", GF2Matrix::identity(2));
    if (name == "X") return Gate("X", power_of_x(true));
    if (name == "H0") return Gate("H0", hadamard(false));
    if (name == "H1") return Gate("H1", hadamard(true));
    if (name == "XH0") return Gate("XH0", mat_mul(power_of_x(true), hadamard(false)));
    if (name == "XH1") return Gate("XH1", mat_mul(power_of_x(true), hadamard(true)));
    if (name == "CNOT_A") return Gate("CNOT_A", {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    if (name == "CNOT_B") return Gate("CNOT_B", {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}});
    throw Error(ErrorKind::UnknownGate, "unknown gate '" + std::string(name) + "'");
}

Gate controlled_not(std::size_t lines, std::size_t control, std::size_t target) {
    check_line(lines, control);
    check_line(lines, target);
    if (control == target) throw Error(ErrorKind::InvalidArgument, "CNOT control and target coincide");
    const std::size_t dim = std::size_t{1} << lines;
    const std::size_t cbit = std::size_t{1} << (lines - 1 - control);
    const std::size_t tbit = std::size_t{1} << (lines - 1 - target);
    GF2Matrix m(dim, dim);
    for (std::size_t x = 0; x < dim; ++x) m.set((x & cbit) ? x ^ tbit : x, x, true);
    return Gate("CNOT(" + std::to_string(control) + "," + std::to_string(target) + ")", std::move(m));
}

Register apply(const Gate &g, const Register &r, std::size_t first_line) {
    if (first_line + g.width > r.lines()) {
        throw Error(ErrorKind::SizeMismatch, "gate '" + g.name + "' on lines " + std::to_string(first_line) + ".." +
                                                 std::to_string(first_line + g.width - 1) + " of a " +
                                                 std::to_string(r.lines()) + "-line register");
    }
    const std::size_t before = std::size_t{1} << first_line;
    const std::size_t after = std::size_t{1} << (r.lines() - first_line - g.width);
    const GF2Matrix full = kron(kron(GF2Matrix::identity(before), g.matrix), GF2Matrix::identity(after));
    return Register(r.lines(), mat_apply(full, r.state()));
}

LineMeasurement measure_line_given(const Register &r, std::size_t line, bool outcome) {
    check_line(r.lines(), line);
    BitVec kept(r.state().size());
    const std::vector<std::size_t> support = r.state().ones();
    std::size_t hits = 0;
    for (std::size_t i : support) {
        if (r.bit(i, line) != outcome) continue;
        kept.set(i, true);
        ++hits;
    }
    if (hits == 0) {
        throw Error(ErrorKind::ImpossibleOutcome,
                    "line " + std::to_string(line) + " cannot read " + (outcome ? "1" : "0"));
    }
    return LineMeasurement{outcome, Probability(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(support.size())),
                           Register(r.lines(), std::move(kept))};
}

LineMeasurement measure_line(const Register &r, std::size_t line, Rng &rng) {
    check_line(r.lines(), line);
    const std::vector<std::size_t> support = r.state().ones();
    return measure_line_given(r, line, r.bit(support[draw_index(rng, support.size())], line));
}

Register drop_line(const Register &r, std::size_t line) {
    check_line(r.lines(), line);
    if (r.lines() == 1) throw Error(ErrorKind::InvalidArgument, "cannot drop the only line");
    const std::vector<std::size_t> support = r.state().ones();
    const bool value = r.bit(support.front(), line);
    BitVec rest(std::size_t{1} << (r.lines() - 1));
    const std::size_t low_bits = r.lines() - 1 - line;
    for (std::size_t i : support) {
        if (r.bit(i, line) != value) throw Error(ErrorKind::InvalidArgument, "line " + std::to_string(line) + " is not definite");
        const std::size_t high = i >> (low_bits + 1);
        const std::size_t low = i & ((std::size_t{1} << low_bits) - 1);
        rest.set((high << low_bits) | low, true);
    }
    return Register(r.lines() - 1, std::move(rest));
}

TeleportTrace teleport(bool alpha, bool beta, Rng &rng) {
    return run_teleport(alpha, beta, [&](const Register &r) { return measure_line(r, 0, rng); });
}

TeleportTrace teleport_given(bool alpha, bool beta, bool outcome) {
    return run_teleport(alpha, beta, [&](const Register &r) { return measure_line_given(r, 0, outcome); });
}

BooleanFunction::BooleanFunction(std::vector<bool> table) : table_(std::move(table)) {
    if (table_.size() < 2 || !is_power_of_two(table_.size())) {
        throw Error(ErrorKind::WrongArity, "truth table length " + std::to_string(table_.size()) +
                                               " is not 2^n with n >= 1");
    }
    arity_ = log2_exact(table_.size());
}

BooleanFunction BooleanFunction::parse(std::string_view bits) {
    std::vector<bool> table;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorKind::InvalidArgument, "truth table '" + std::string(bits) + "' is not binary");
        }
        table.push_back(c == '1');
    }
    return BooleanFunction(std::move(table));
}

BooleanFunction BooleanFunction::from_code(std::size_t arity, std::uint64_t code) {
    if (arity == 0 || arity > 6) throw Error(ErrorKind::WrongArity, "arity must be between 1 and 6");
    std::vector<bool> table(std::size_t{1} << arity);
    for (std::size_t k = 0; k < table.size(); ++k) table[k] = (code >> k) & 1U;
    return BooleanFunction(std::move(table));
}

std::string BooleanFunction::to_string() const {
    std::string s;
    for (bool b : table_) s += b ? '1' : '0';
    return s;
}

std::size_t parity_lines(std::size_t arity) { return std::size_t{1} << (arity - 1); }

Gate ef_gate(const BooleanFunction &f) {
    GF2Matrix m = GF2Matrix::identity(1);
    for (std::size_t prefix = 0; prefix < parity_lines(f.arity()); ++prefix) {
        const bool at0 = f(prefix << 1);
        const bool at1 = f((prefix << 1) | 1U);
        m = kron(m, mat_mul(power_of_x(at1), hadamard(at0)));
    }
    return Gate("EF", std::move(m));
}

BitVec row_sums(const Gate &g) {
    BitVec ones(g.matrix.cols());
    for (std::size_t j = 0; j < ones.size(); ++j) ones.set(j, true);
    return mat_apply(g.matrix, ones);
}

std::string ParityResult::slice_code() const {
    std::string s;
    for (bool b : slice_parities) s += b ? 'O' : 'E';
    return s;
}

std::size_t CircuitRun::count(std::string_view gate_name) const {
    std::size_t n = 0;
    for (const auto &a : applied) n += (a == gate_name);
    return n;
}

CircuitRun execute(const Circuit &c, const Register &initial) {
    if (initial.lines() != c.lines) throw Error(ErrorKind::SizeMismatch, "register and circuit differ in line count");
    CircuitRun run{{initial}, {}};
    for (const auto &step : c.steps) {
        run.states.push_back(apply(step.gate, run.states.back(), step.first_line));
        run.applied.push_back(step.gate.name);
    }
    return run;
}

Circuit parity_circuit(const BooleanFunction &f) {
    Circuit c{parity_lines(f.arity()), {}};
    for (std::size_t line = 0; line < c.lines; ++line) c.steps.push_back({standard_gate("H0"), line});
    c.steps.push_back({ef_gate(f), 0});
    return c;
}

ParityResult parity_sat(const BooleanFunction &f) {
    const Circuit c = parity_circuit(f);
    const CircuitRun run = execute(c, Register::basis(std::string(c.lines, '0')));
    const Register &r = run.states.back();
    const std::size_t lines = c.lines;

    const std::vector<std::size_t> support = r.state().ones();
    if (support.size() != 1) throw Error(ErrorKind::InvalidArgument, "E_f output is not a single basis ket");
    ParityResult out{false, {}, support.front(), r, run.count("EF")};
    for (std::size_t line = 0; line < lines; ++line) {
        const bool slice = r.bit(out.measured_index, line);
        out.slice_parities.push_back(slice);
        out.parity = out.parity != slice;
    }
    return out;
}

std::string_view to_string(DeutschAnswer a) { return a == DeutschAnswer::Balanced ? "balanced" : "constant"; }

DeutschAnswer deutsch(const BooleanFunction &f) {
    if (f.arity() != 1) throw Error(ErrorKind::WrongArity, "Deutsch's problem takes a unary function");
    return parity_sat(f).parity ? DeutschAnswer::Balanced : DeutschAnswer::Constant;
}

bool unambiguous_sat(const BooleanFunction &f) { return parity_sat(f).parity; }

}  // namespace qmsets
