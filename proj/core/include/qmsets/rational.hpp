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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace qmsets {

/// Exact rational number. Every probability, eigenvalue and density-matrix
/// entry in the library is one of these; floating point appears only in
/// Shannon entropy.
using Rational = boost::rational<std::int64_t>;

/// Wire form: always "p/q", including "0/1" and "3/1".
std::string to_wire(const Rational &r);

/// Display form: "p/q", or just "p" when the denominator is 1.
std::string to_display(const Rational &r);

/// Accepts "p/q", "p", with optional leading '-'. Throws Error(InvalidArgument).
Rational parse_rational(std::string_view text);

/// A rational constrained to [0, 1], always stored reduced.
class Probability {
  public:
    constexpr Probability() = default;
    /// Throws Error(OutOfRange) if value is outside [0, 1].
    explicit Probability(const Rational &value);
    Probability(std::int64_t num, std::int64_t den);

    static Probability zero() { return Probability(); }
    static Probability one() { return Probability(1, 1); }

    const Rational &value() const noexcept { return value_; }
    std::int64_t numerator() const noexcept { return value_.numerator(); }
    std::int64_t denominator() const noexcept { return value_.denominator(); }
    bool is_zero() const noexcept { return value_.numerator() == 0; }

    /// Complement 1 - p.
    Probability complement() const { return Probability(Rational(1) - value_); }

    friend Probability operator*(const Probability &a, const Probability &b) {
        return Probability(a.value_ * b.value_);
    }
    /// Sum; throws Error(OutOfRange) if it exceeds 1.
    friend Probability operator+(const Probability &a, const Probability &b) {
        return Probability(a.value_ + b.value_);
    }
    friend bool operator==(const Probability &a, const Probability &b) = default;
    friend std::strong_ordering operator<=>(const Probability &a, const Probability &b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_wire() const { return qmsets::to_wire(value_); }
    std::string to_display() const { return qmsets::to_display(value_); }

  private:
    Rational value_{0};
};

inline bool operator==(const Probability &p, const Rational &r) { return p.value() == r; }

}  // namespace qmsets
