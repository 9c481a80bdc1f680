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

#include "qmsets/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "qmsets/error.hpp"

namespace qmsets {

namespace {

std::size_t word_count(std::size_t length) { return (length + BitVec::kWordBits - 1) / BitVec::kWordBits; }

void require_same_length(const BitVec &a, const BitVec &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::LengthMismatch,
                    "vectors of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

void require_square(const GF2Matrix &a) {
    if (!a.is_square()) {
        throw Error(ErrorKind::NotSquare,
                    "matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

}  // namespace

BitVec::BitVec(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw Error(ErrorKind::InvalidArgument, "bit string contains '" + std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

BitVec BitVec::from_indices(std::size_t length, std::initializer_list<std::size_t> indices) {
    return from_indices(length, std::vector<std::size_t>(indices));
}

BitVec BitVec::from_indices(std::size_t length, const std::vector<std::size_t> &indices) {
    BitVec v(length);
    for (std::size_t i : indices) {
        if (i >= length) throw Error(ErrorKind::OutOfRange, "index " + std::to_string(i) + " >= " + std::to_string(length));
        v.set(i, true);
    }
    return v;
}

BitVec BitVec::from_integer(std::size_t length, std::uint64_t value) {
    BitVec v(length);
    for (std::size_t i = 0; i < length && i < 64; ++i) v.set(i, (value >> i) & 1U);
    return v;
}

BitVec BitVec::unit(std::size_t length, std::size_t index) { return from_indices(length, {index}); }

void BitVec::set(std::size_t i, bool value) noexcept {
    Word mask = Word{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

std::size_t BitVec::popcount() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitVec::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<std::size_t> BitVec::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        Word w = words_[k];
        while (w != 0) {
            out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t BitVec::first_one() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return length_;
}

bool BitVec::dot(const BitVec &other) const {
    require_same_length(*this, other);
    Word acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) & 1;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    require_same_length(*this, other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    require_same_length(*this, other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
}

bool operator<(const BitVec &a, const BitVec &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.get(i) != b.get(i)) return b.get(i);
    }
    return false;
}

std::string BitVec::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

BitVec add(const BitVec &v, const BitVec &w) { return v ^ w; }

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

GF2Matrix::GF2Matrix(std::initializer_list<std::initializer_list<int>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_);
    for (const auto &r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::DimMismatch, "ragged matrix literal");
        BitVec row(cols_);
        std::size_t c = 0;
        for (int x : r) row.set(c++, (x & 1) != 0);
        data_.push_back(std::move(row));
    }
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<BitVec> &rows) {
    if (rows.empty()) return GF2Matrix();
    GF2Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw Error(ErrorKind::DimMismatch, "rows of unequal length");
        m.data_[r] = rows[r];
    }
    return m;
}

GF2Matrix GF2Matrix::from_columns(const std::vector<BitVec> &columns) {
    if (columns.empty()) return GF2Matrix();
    GF2Matrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != m.rows_) throw Error(ErrorKind::DimMismatch, "columns of unequal length");
        for (std::size_t r : columns[c].ones()) m.set(r, c, true);
    }
    return m;
}

BitVec GF2Matrix::column(std::size_t c) const {
    BitVec col(rows_);
    for (std::size_t r = 0; r < rows_; ++r) col.set(r, at(r, c));
    return col;
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c : data_[r].ones()) t.set(c, r, true);
    }
    return t;
}

std::string GF2Matrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r > 0) s += '\n';
        s += data_[r].to_string();
    }
    return s;
}

BitVec mat_apply(const GF2Matrix &a, const BitVec &v) {
    if (a.cols() != v.size()) {
        throw Error(ErrorKind::DimMismatch, "matrix has " + std::to_string(a.cols()) + " columns, vector has length " +
                                                std::to_string(v.size()));
    }
    BitVec out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, a.row(r).dot(v));
    return out;
}

GF2Matrix mat_mul(const GF2Matrix &a, const GF2Matrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimMismatch, "inner dimensions " + std::to_string(a.cols()) + " and " +
                                                std::to_string(b.rows()));
    }
    std::vector<BitVec> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVec acc(b.cols());
        for (std::size_t k : a.row(r).ones()) acc ^= b.row(k);
        rows.push_back(std::move(acc));
    }
    if (rows.empty()) return GF2Matrix(0, b.cols());
    return GF2Matrix::from_rows(rows);
}

namespace {

// Reduces `rows` in place to reduced row echelon form, applying the same row
// operations to `aug` when non-null. Returns the rank.
std::size_t eliminate(std::vector<BitVec> &rows, std::size_t cols, std::vector<BitVec> *aug) {
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        std::size_t found = pivot_row;
        while (found < rows.size() && !rows[found].get(c)) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);
        if (aug) std::swap((*aug)[pivot_row], (*aug)[found]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != pivot_row && rows[r].get(c)) {
                rows[r] ^= rows[pivot_row];
                if (aug) (*aug)[r] ^= (*aug)[pivot_row];
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::vector<BitVec> rows_of(const GF2Matrix &a) {
    std::vector<BitVec> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
    return rows;
}

}  // namespace

std::size_t rank(const GF2Matrix &a) {
    auto rows = rows_of(a);
    return eliminate(rows, a.cols(), nullptr);
}

bool is_nonsingular(const GF2Matrix &a) {
    require_square(a);
    return rank(a) == a.rows();
}

GF2Matrix invert(const GF2Matrix &a) {
    require_square(a);
    const std::size_t n = a.rows();
    auto rows = rows_of(a);
    auto aug = rows_of(GF2Matrix::identity(n));
    if (eliminate(rows, n, &aug) != n) throw Error(ErrorKind::Singular, "matrix is singular mod 2");
    return GF2Matrix::from_rows(aug);
}

BitVec solve(const GF2Matrix &a, const BitVec &b) {
    require_square(a);
    if (b.size() != a.rows()) {
        throw Error(ErrorKind::DimMismatch, "right-hand side has length " + std::to_string(b.size()) +
                                                ", matrix has " + std::to_string(a.rows()) + " rows");
    }
    const std::size_t n = a.rows();
    auto rows = rows_of(a);
    std::vector<BitVec> rhs;
    rhs.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        BitVec one(1);
        one.set(0, b.get(r));
        rhs.push_back(std::move(one));
    }
    if (eliminate(rows, n, &rhs) != n) throw Error(ErrorKind::Singular, "matrix is singular mod 2");
    // Reduced echelon form of a nonsingular matrix is the identity.
    BitVec x(n);
    for (std::size_t r = 0; r < n; ++r) x.set(r, rhs[r].get(0));
    return x;
}

GF2Matrix kron(const GF2Matrix &a, const GF2Matrix &b) {
    GF2Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j : a.row(i).ones()) {
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l : b.row(k).ones()) out.set(i * b.rows() + k, j * b.cols() + l, true);
            }
        }
    }
    return out;
}

}  // namespace qmsets
