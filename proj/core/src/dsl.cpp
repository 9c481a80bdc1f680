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

#include "qmsets/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

namespace qmsets::dsl {

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

bool is_bits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

const std::vector<std::string> &single_line_gates() {
    static const std::vector<std::string> names{"I", "X", "H0", "H1", "XH0", "XH1"};
    return names;
}

bool contains(const std::vector<std::string> &v, std::string_view s) { return std::find(v.begin(), v.end(), s) != v.end(); }

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    CircuitAst parse() {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t end = text_.find('\n', pos);
            if (end == std::string_view::npos) end = text_.size();
            ++line_no;
            line_ = line_no;
            tokens_ = tokenize(text_.substr(pos, end - pos));
            if (!tokens_.empty()) statement();
            pos = end + 1;
        }
        if (!have_lines_) fail(ErrorKind::ParseError, 1, 1, "", "missing 'lines' statement");
        if (ast_.steps.empty()) fail(ErrorKind::ParseError, lines_at_, 1, "lines", "circuit has no steps");
        return ast_;
    }

  private:
    [[noreturn]] void fail(ErrorKind kind, std::size_t line, std::size_t column, const std::string &token,
                           const std::string &message) {
        throw ParseError(kind, line, column, token, message);
    }
    [[noreturn]] void fail_at(const Token &t, const std::string &message, ErrorKind kind = ErrorKind::ParseError) {
        fail(kind, line_, t.column, t.text, message);
    }
    [[noreturn]] void fail_eol(const std::string &message) {
        const Token &last = tokens_.back();
        fail(ErrorKind::ParseError, line_, last.column + last.text.size(), "", message);
    }

    void expect_count(std::size_t n) {
        if (tokens_.size() < n) fail_eol("unexpected end of statement");
        if (tokens_.size() > n) fail_at(tokens_[n], "unexpected token");
    }

    std::size_t number(const Token &t) {
        std::size_t value = 0;
        const char *first = t.text.data();
        const char *last = first + t.text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) fail_at(t, "expected a non-negative integer");
        return value;
    }

    std::size_t line_index(const Token &t) {
        const std::size_t v = number(t);
        if (v >= ast_.lines) {
            fail_at(t, "line " + t.text + " out of range for " + std::to_string(ast_.lines) + " lines",
                    ErrorKind::LineOutOfRange);
        }
        return v;
    }

    void statement() {
        const Token &head = tokens_[0];
        if (head.text == "lines") return lines_statement();
        if (!have_lines_) fail_at(head, "'lines' must come first");
        if (head.text == "init") return init_statement();
        if (head.text == "gate") return gate_statement();
        if (head.text == "measure") return measure_statement();
        fail_at(head, "unknown statement '" + head.text + "'");
    }

    void lines_statement() {
        if (have_lines_) fail_at(tokens_[0], "duplicate 'lines' statement");
        expect_count(2);
        const std::size_t n = number(tokens_[1]);
        if (n == 0 || n > 16) fail_at(tokens_[1], "line count must be between 1 and 16");
        ast_.lines = n;
        measured_.assign(n, false);
        have_lines_ = true;
        lines_at_ = line_;
    }

    void init_statement() {
        if (ast_.init) fail_at(tokens_[0], "duplicate 'init' statement");
        if (!ast_.steps.empty()) fail_at(tokens_[0], "'init' must precede the steps");
        if (tokens_.size() < 2) fail_eol("expected a bitstring");
        InitSpec spec;
        if (tokens_[1].text == "ket") {
            spec.ket_form = true;
            if (tokens_.size() < 3) fail_eol("expected a ket expression");
            std::string expr;
            for (std::size_t k = 2; k < tokens_.size(); ++k) expr += tokens_[k].text;
            const Token whole{expr, tokens_[2].column};
            std::size_t start = 0;
            while (true) {
                const std::size_t plus = expr.find('+', start);
                const std::string term = expr.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
                check_bits(whole, term);
                spec.kets.push_back(term);
                if (plus == std::string::npos) break;
                start = plus + 1;
            }
        } else {
            expect_count(2);
            check_bits(tokens_[1], tokens_[1].text);
            spec.kets.push_back(tokens_[1].text);
        }
        ast_.init = std::move(spec);
    }

    void check_bits(const Token &t, const std::string &bits) {
        if (!is_bits(bits)) fail_at(t, "'" + bits + "' is not a bitstring");
        if (bits.size() != ast_.lines) {
            fail_at(t, "bitstring '" + bits + "' needs " + std::to_string(ast_.lines) + " bits");
        }
    }

    void gate_statement() {
        if (tokens_.size() < 2) fail_eol("expected a gate name");
        std::size_t n = tokens_.size();
        Step step;
        step.kind = Step::Kind::Gate;
        if (n >= 2 && tokens_[n - 2].text == "if") {
            const std::size_t cond = line_index(tokens_[n - 1]);
            if (!measured_[cond]) fail_at(tokens_[n - 1], "line " + tokens_[n - 1].text + " has not been measured");
            step.condition = cond;
            tokens_.resize(n - 2);
            n -= 2;
        }
        const Token &name = tokens_[1];
        step.gate = name.text;
        if (contains(single_line_gates(), name.text)) {
            expect_count(3);
            step.operands.push_back(line_index(tokens_[2]));
        } else if (name.text == "CNOT_A" || name.text == "CNOT_B") {
            expect_count(3);
            const std::size_t first = line_index(tokens_[2]);
            if (first + 1 >= ast_.lines) {
                fail_at(tokens_[2], name.text + " needs lines " + tokens_[2].text + " and " + std::to_string(first + 1),
                        ErrorKind::LineOutOfRange);
            }
            step.operands.push_back(first);
        } else if (name.text == "CNOT") {
            expect_count(4);
            const std::size_t control = line_index(tokens_[2]);
            const std::size_t target = line_index(tokens_[3]);
            if (control == target) fail_at(tokens_[3], "control and target coincide");
            step.operands = {control, target};
        } else if (name.text == "EF") {
            expect_count(3);
            const Token &table = tokens_[2];
            if (!is_bits(table.text)) fail_at(table, "'" + table.text + "' is not a truth table");
            if ((ast_.lines & (ast_.lines - 1)) != 0 || table.text.size() != 2 * ast_.lines) {
                fail_at(table, "EF on " + std::to_string(ast_.lines) + " lines needs a truth table of length " +
                                   std::to_string(2 * ast_.lines) + " and a power-of-two line count");
            }
            step.table = table.text;
        } else {
            fail_at(name, "unknown gate '" + name.text + "'", ErrorKind::UnknownGate);
        }
        ast_.steps.push_back(std::move(step));
    }

    void measure_statement() {
        expect_count(2);
        Step step;
        if (tokens_[1].text == "all") {
            step.kind = Step::Kind::MeasureAll;
            std::fill(measured_.begin(), measured_.end(), true);
        } else {
            step.kind = Step::Kind::Measure;
            const std::size_t l = line_index(tokens_[1]);
            step.operands.push_back(l);
            measured_[l] = true;
        }
        ast_.steps.push_back(std::move(step));
    }

    std::string_view text_;
    std::size_t line_ = 0;
    std::vector<Token> tokens_;
    CircuitAst ast_;
    bool have_lines_ = false;
    std::size_t lines_at_ = 1;
    std::vector<bool> measured_;
};

Gate step_gate(const Step &step, std::size_t lines, std::size_t &first_line) {
    first_line = 0;
    if (step.gate == "CNOT") return controlled_not(lines, step.operands[0], step.operands[1]);
    if (step.gate == "EF") return ef_gate(BooleanFunction::parse(step.table));
    first_line = step.operands.at(0);
    return standard_gate(step.gate);
}

Register initial_register(const CircuitAst &ast) {
    if (!ast.init) return Register::basis(std::string(ast.lines, '0'));
    try {
        return Register::sum_of(ast.lines, ast.init->kets);
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::ZeroState) throw Error(ErrorKind::ZeroInitial, "initial ket sums to zero");
        throw;
    }
}

using Measurer = std::function<LineMeasurement(const Register &, std::size_t)>;

RunRecord execute(const CircuitAst &ast, const Measurer &measure) {
    Register state = initial_register(ast);
    RunRecord record{state, {}, {}, state};
    std::map<std::size_t, bool> last;
    for (const auto &step : ast.steps) {
        StepRecord sr{render(step), true, {}, state};
        if (step.kind == Step::Kind::Gate) {
            if (step.condition && !last[*step.condition]) {
                sr.applied = false;
            } else {
                std::size_t first_line = 0;
                const Gate g = step_gate(step, ast.lines, first_line);
                state = apply(g, state, first_line);
            }
        } else {
            std::vector<std::size_t> targets = step.operands;
            if (step.kind == Step::Kind::MeasureAll) {
                targets.clear();
                for (std::size_t l = 0; l < ast.lines; ++l) targets.push_back(l);
            }
            for (std::size_t l : targets) {
                LineMeasurement m = measure(state, l);
                state = m.post;
                last[l] = m.outcome;
                sr.measurements.push_back({l, m.outcome, m.probability});
                record.measurements.push_back(sr.measurements.back());
            }
        }
        sr.state = state;
        record.steps.push_back(std::move(sr));
    }
    record.final_state = state;
    return record;
}

}  // namespace

ParseError::ParseError(ErrorKind kind, std::size_t line, std::size_t column, std::string token, const std::string &message)
    : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                      (token.empty() ? std::string() : " (at '" + token + "')")),
      line_(line), column_(column), token_(std::move(token)), detail_(message) {}

CircuitAst parse(std::string_view text) { return Parser(text).parse(); }

std::string render(const Step &step) {
    switch (step.kind) {
        case Step::Kind::MeasureAll:
            return "measure all";
        case Step::Kind::Measure:
            return "measure " + std::to_string(step.operands.at(0));
        case Step::Kind::Gate:
            break;
    }
    std::string s = "gate " + step.gate;
    if (step.gate == "EF") s += " " + step.table;
    for (std::size_t l : step.operands) s += " " + std::to_string(l);
    if (step.condition) s += " if " + std::to_string(*step.condition);
    return s;
}

std::string render(const CircuitAst &ast) {
    std::string out = "lines " + std::to_string(ast.lines) + "\n";
    if (ast.init) {
        out += "init ";
        if (ast.init->ket_form) {
            out += "ket ";
            for (std::size_t k = 0; k < ast.init->kets.size(); ++k) out += (k ? "+" : "") + ast.init->kets[k];
        } else {
            out += ast.init->kets.at(0);
        }
        out += "\n";
    }
    for (const auto &step : ast.steps) out += render(step) + "\n";
    return out;
}

RunRecord run(const CircuitAst &ast, std::uint64_t seed) {
    Rng rng(seed);
    return execute(ast, [&](const Register &r, std::size_t line) { return measure_line(r, line, rng); });
}

RunRecord run_forced(const CircuitAst &ast, const std::vector<bool> &outcomes) {
    std::size_t next = 0;
    return execute(ast, [&](const Register &r, std::size_t line) {
        if (next >= outcomes.size()) throw Error(ErrorKind::InvalidArgument, "ran out of forced outcomes");
        return measure_line_given(r, line, outcomes[next++]);
    });
}

}  // namespace qmsets::dsl
