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
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qmsets {

/// Fixed-length vector over Z2, packed 64 coefficients per word.
///
/// As a subset of an ordered universe, bit i set means element i is present;
/// addition is symmetric difference.
class BitVec {
  public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t length);
    /// From a string of '0'/'1', index 0 first. Throws Error(InvalidArgument).
    static BitVec from_string(std::string_view bits);
    static BitVec from_indices(std::size_t length, std::initializer_list<std::size_t> indices);
    static BitVec from_indices(std::size_t length, const std::vector<std::size_t> &indices);
    /// Low `length` bits of `value`, bit i of the integer -> index i.
    static BitVec from_integer(std::size_t length, std::uint64_t value);
    /// Unit vector e_i.
    static BitVec unit(std::size_t length, std::size_t index);

    std::size_t size() const noexcept { return length_; }
    bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value) noexcept;
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    std::size_t popcount() const noexcept;
    bool is_zero() const noexcept;
    /// Indices of the set bits, ascending.
    std::vector<std::size_t> ones() const;
    /// Index of the lowest set bit, or size() if zero.
    std::size_t first_one() const noexcept;
    /// Parity of popcount(*this & other). Lengths must match.
    bool dot(const BitVec &other) const;

    /// In-place XOR; throws Error(LengthMismatch).
    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec &b) { return a &= b; }
    friend bool operator==(const BitVec &a, const BitVec &b) = default;

    /// Lexicographic-by-index order on equal-length vectors, usable as a map key.
    friend bool operator<(const BitVec &a, const BitVec &b);

    std::string to_string() const;

    const std::vector<Word> &words() const noexcept { return words_; }
    std::vector<Word> &words() noexcept { return words_; }

  private:
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

/// Componentwise XOR. Throws Error(LengthMismatch).
BitVec add(const BitVec &v, const BitVec &w);

/// Dense matrix over Z2 stored as packed rows.
class GF2Matrix {
  public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);
    /// Row-major 0/1 literal. Throws Error(DimMismatch) on ragged rows.
    GF2Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static GF2Matrix identity(std::size_t n);
    static GF2Matrix from_rows(const std::vector<BitVec> &rows);
    static GF2Matrix from_columns(const std::vector<BitVec> &columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    bool at(std::size_t r, std::size_t c) const noexcept { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value) noexcept { data_[r].set(c, value); }
    const BitVec &row(std::size_t r) const noexcept { return data_[r]; }
    BitVec column(std::size_t c) const;
    GF2Matrix transpose() const;

    friend bool operator==(const GF2Matrix &a, const GF2Matrix &b) = default;

    /// Rows joined by '\n', each as a 0/1 string.
    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> data_;
};

/// A·v mod 2. Throws Error(DimMismatch).
BitVec mat_apply(const GF2Matrix &a, const BitVec &v);
/// A·B mod 2. Throws Error(DimMismatch).
GF2Matrix mat_mul(const GF2Matrix &a, const GF2Matrix &b);
/// Rank by Gaussian elimination.
std::size_t rank(const GF2Matrix &a);
/// Full rank test. Throws Error(NotSquare).
bool is_nonsingular(const GF2Matrix &a);
/// Gauss-Jordan inverse. Throws Error(NotSquare) or Error(Singular).
GF2Matrix invert(const GF2Matrix &a);
/// Unique x with A·x = b. Throws Error(NotSquare), Error(DimMismatch) or Error(Singular).
BitVec solve(const GF2Matrix &a, const BitVec &b);
/// Kronecker product; A supplies the outer (most significant) block index.
GF2Matrix kron(const GF2Matrix &a, const GF2Matrix &b);

}  // namespace qmsets
