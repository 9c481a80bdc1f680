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

#include "qmsets/rational.hpp"

#include <charconv>

#include "qmsets/error.hpp"

namespace qmsets {

std::string to_wire(const Rational &r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_display(const Rational &r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return to_wire(r);
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw Error(ErrorKind::InvalidArgument, "not a rational: '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Probability::Probability(const Rational &value) : value_(value) {
    if (value_ < Rational(0) || value_ > Rational(1)) {
        throw Error(ErrorKind::OutOfRange, "probability " + qmsets::to_wire(value_) + " outside [0,1]");
    }
}

Probability::Probability(std::int64_t num, std::int64_t den) : Probability(Rational(num, den)) {}

}  // namespace qmsets
