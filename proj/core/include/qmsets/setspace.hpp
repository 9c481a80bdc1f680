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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmsets/gf2.hpp"
#include "qmsets/rational.hpp"

namespace qmsets {

/// Ordered, finite set of distinct labels. Position i is coordinate i of
/// every ket over this universe. Copies share storage; two universes are
/// equal when their label sequences are equal.
class Universe {
  public:
    Universe() = default;
    /// Throws Error(InvalidArgument) on an empty list or duplicate labels.
    explicit Universe(std::vector<std::string> labels);
    Universe(std::initializer_list<std::string_view> labels);

    std::size_t size() const noexcept;
    const std::string &label(std::size_t i) const { return labels().at(i); }
    const std::vector<std::string> &labels() const;
    std::optional<std::size_t> find(std::string_view label) const;
    /// Like find, but throws Error(InvalidArgument) for an unknown label.
    std::size_t index_of(std::string_view label) const;

    friend bool operator==(const Universe &a, const Universe &b);

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// A subset of a universe viewed as a vector of Z2^n.
class SubsetKet {
  public:
    /// Throws Error(LengthMismatch) unless bits.size() == universe.size().
    SubsetKet(Universe universe, BitVec bits);

    static SubsetKet empty(const Universe &u) { return SubsetKet(u, BitVec(u.size())); }
    static SubsetKet full(const Universe &u);
    static SubsetKet singleton(const Universe &u, std::size_t index);
    static SubsetKet of(const Universe &u, const std::vector<std::string> &labels);
    /// "{a,b}", "a,b", "{}" or "" (empty). Whitespace is ignored.
    static SubsetKet parse(const Universe &u, std::string_view text);

    const Universe &universe() const noexcept { return universe_; }
    const BitVec &bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return bits_.popcount(); }
    bool is_empty() const noexcept { return bits_.is_zero(); }
    bool contains(std::size_t index) const { return bits_.get(index); }
    std::vector<std::size_t> indices() const { return bits_.ones(); }
    /// Member labels in universe order.
    std::vector<std::string> labels() const;
    /// "{a,b}"; the empty set renders as "{}".
    std::string to_string() const;

    /// Symmetric difference. Throws Error(UniverseMismatch).
    friend SubsetKet operator+(const SubsetKet &a, const SubsetKet &b);
    /// Intersection. Throws Error(UniverseMismatch).
    friend SubsetKet operator&(const SubsetKet &a, const SubsetKet &b);
    friend bool operator==(const SubsetKet &a, const SubsetKet &b) = default;

  private:
    Universe universe_;
    BitVec bits_;
};

/// Throws Error(UniverseMismatch) unless a and b share a universe.
void require_same_universe(const Universe &a, const Universe &b);

/// An alternative basis of Z2^n. Column j of the matrix is basis ket j
/// written in the canonical universe; `universe()` names those basis kets
/// (the primed labels).
class BasisFrame {
  public:
    /// Throws Error(Singular) for a singular matrix and Error(DimMismatch) if
    /// the sizes of the two universes and the matrix disagree.
    BasisFrame(std::string name, Universe canonical, Universe labels, GF2Matrix columns);

    /// The frame whose basis kets are the canonical singletons.
    static BasisFrame canonical(const Universe &u, std::string name = "U");
    /// Basis kets given as canonical subsets, one per label.
    static BasisFrame from_kets(std::string name, Universe labels, const std::vector<SubsetKet> &basis);

    const std::string &name() const noexcept { return name_; }
    const Universe &canonical() const noexcept { return canonical_; }
    const Universe &universe() const noexcept { return universe_; }
    const GF2Matrix &matrix() const noexcept { return matrix_; }
    std::size_t dimension() const noexcept { return matrix_.rows(); }
    /// Basis ket j in canonical coordinates.
    SubsetKet basis_ket(std::size_t j) const;

  private:
    std::string name_;
    Universe canonical_;
    Universe universe_;
    GF2Matrix matrix_;
};

/// One outcome of a finite distribution.
struct LabeledProbability {
    std::string label;
    Probability probability;
    friend bool operator==(const LabeledProbability &, const LabeledProbability &) = default;
};

/// Distribution over labelled outcomes, in the order of the underlying universe.
struct Distribution {
    std::vector<LabeledProbability> entries;

    /// Throws Error(InvalidArgument) for an unknown label.
    Probability at(std::string_view label) const;
    Rational total() const;
    std::size_t size() const noexcept { return entries.size(); }
    auto begin() const { return entries.begin(); }
    auto end() const { return entries.end(); }
};

/// <T|S> = |T ∩ S| for kets over the same universe. Throws Error(UniverseMismatch).
std::size_t bracket(const SubsetKet &t, const SubsetKet &s);
/// Bracket of two canonical kets taken in the given frame's coordinates.
std::size_t bracket_in(const BasisFrame &frame, const SubsetKet &t, const SubsetKet &s);
/// ||S||² = |S|.
std::size_t norm_sq(const SubsetKet &s);

/// Coordinates of a canonical ket in the frame, as a ket over the frame's
/// labels. A ket already over the frame's labels is returned unchanged.
SubsetKet to_basis(const SubsetKet &s, const BasisFrame &frame);
/// Inverse of to_basis: frame coordinates back to the canonical universe.
SubsetKet from_basis(const SubsetKet &coords, const BasisFrame &frame);

/// Pr(u|S) = <{u}|S>² / ||S||² in the frame's coordinates, for every frame label.
/// Throws Error(ZeroState) for the zero ket.
Distribution born(const SubsetKet &s, const BasisFrame &frame);

/// The singletons {u} with <{u}|S> = 1, whose sum is S.
std::vector<SubsetKet> resolve(const SubsetKet &s);

/// Every ket of a space, written in each of several frames.
struct KetTable {
    std::vector<std::string> frame_names;
    /// rows[i][k] = row i in frame k, over frame k's labels.
    std::vector<std::vector<SubsetKet>> rows;
};

/// All 2^dim kets, ordered by descending cardinality then lexicographically by
/// canonical label indices. Throws Error(DimMismatch) if a frame has another
/// dimension and Error(UniverseMismatch) if frames disagree on the canonical universe.
KetTable ket_table(std::size_t dim, const std::vector<BasisFrame> &frames);
/// Same, with an explicit list of canonical row kets.
KetTable ket_table(const std::vector<BasisFrame> &frames, const std::vector<SubsetKet> &rows);
/// Aligned plain-text rendering with a header row of frame names.
std::string to_text(const KetTable &table);

/// Descending cardinality, then lexicographic on ascending index lists.
bool canonical_ket_order(const SubsetKet &a, const SubsetKet &b);

}  // namespace qmsets
