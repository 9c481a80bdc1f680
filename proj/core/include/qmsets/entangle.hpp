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
#include <utility>
#include <vector>

#include "qmsets/gf2.hpp"
#include "qmsets/rational.hpp"
#include "qmsets/setspace.hpp"

namespace qmsets {

/// X×Y with pairs indexed row-major: index(i, j) = i·|Y| + j.
class ProductUniverse {
  public:
    ProductUniverse(Universe left, Universe right);

    const Universe &left() const noexcept { return left_; }
    const Universe &right() const noexcept { return right_; }
    std::size_t size() const noexcept { return left_.size() * right_.size(); }
    std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * right_.size() + j; }
    std::size_t left_index(std::size_t k) const noexcept { return k / right_.size(); }
    std::size_t right_index(std::size_t k) const noexcept { return k % right_.size(); }
    /// "(x,y)"
    std::string pair_label(std::size_t k) const;

    friend bool operator==(const ProductUniverse &a, const ProductUniverse &b) {
        return a.left_ == b.left_ && a.right_ == b.right_;
    }

  private:
    Universe left_;
    Universe right_;
};

/// A nonempty subset of X×Y.
class ProductState {
  public:
    /// Throws Error(LengthMismatch) or Error(ZeroState).
    ProductState(ProductUniverse pu, BitVec bits);
    /// Throws Error(InvalidArgument) for unknown labels, Error(ZeroState) if empty.
    static ProductState of(const ProductUniverse &pu, const std::vector<std::pair<std::string, std::string>> &pairs);
    /// "{(a,a),(b,b)}"
    static ProductState parse(const ProductUniverse &pu, std::string_view text);
    static ProductState product(const SubsetKet &x, const SubsetKet &y);

    const ProductUniverse &universe() const noexcept { return universe_; }
    const BitVec &bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return bits_.popcount(); }
    bool contains(std::size_t i, std::size_t j) const { return bits_.get(universe_.index(i, j)); }
    /// (left index, right index) pairs in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
    std::string to_string() const;

    friend bool operator==(const ProductState &a, const ProductState &b) = default;

  private:
    ProductUniverse universe_;
    BitVec bits_;
};

/// S_X and S_Y.
std::pair<SubsetKet, SubsetKet> supports(const ProductState &s);
/// S = S_X × S_Y.
bool is_separated(const ProductState &s);

/// The equiprobable distribution on S.
struct JointDistribution {
    ProductState support;
    std::vector<Probability> prob;  ///< indexed like the product universe

    Probability at(std::size_t i, std::size_t j) const { return prob.at(support.universe().index(i, j)); }
};

JointDistribution make_joint(const ProductState &s);

struct Marginals {
    Distribution left;
    Distribution right;
};

Marginals marginals(const JointDistribution &d);
/// Pr(x,y) = Pr(x)Pr(y) at every pair.
bool is_independent(const JointDistribution &d);

/// Every nonempty subset of X×Y, in increasing bit-pattern order.
std::vector<ProductState> all_product_states(const ProductUniverse &pu);

struct Census {
    std::vector<ProductState> separated;
    std::vector<ProductState> entangled;
};

Census census(const ProductUniverse &pu);

/// Coordinates of S under the change of basis kron(left, right). A state already
/// over the frames' labels is returned unchanged.
/// Throws Error(DimMismatch) or Error(UniverseMismatch).
ProductState product_to_frame(const ProductState &s, const BasisFrame &left, const BasisFrame &right);

/// Fraction of S's pairs, written in frame×frame, whose left component is
/// `outcome`. Throws Error(InvalidArgument) for an unknown label.
Probability left_measure_prob(const ProductState &s, const BasisFrame &frame, std::string_view outcome);
Probability right_measure_prob(const ProductState &s, const BasisFrame &frame, std::string_view outcome);

struct JointTriple {
    std::string x;
    std::string y;
    std::string z;
    Probability probability;
};

struct CounterfactualJoint {
    std::vector<std::string> frame_names;
    std::vector<JointTriple> triples;  ///< x outermost, each in frame label order
    /// The three inequality terms Pr(x0,y0), Pr(y1,z1), Pr(x0,z1) as pairwise marginals.
    Probability first;
    Probability second;
    Probability third;
    std::string first_label;
    std::string second_label;
    std::string third_label;

    Probability at(std::string_view x, std::string_view y, std::string_view z) const;
    /// first + second
    Rational lhs() const { return first.value() + second.value(); }
    Rational rhs() const { return third.value(); }
    bool holds() const { return lhs() >= rhs(); }
};

/// Pr(x,y,z) = Pr(x|S in f1)·Pr(y|S in f2)·Pr(z|S in f3) from left measurements.
/// The inequality uses the first label of f1, both first and second labels of
/// f2, and the second label of f3. Throws Error(DimMismatch) if a frame has fewer than 2 labels.
CounterfactualJoint counterfactual_joint(const ProductState &s, const BasisFrame &f1, const BasisFrame &f2,
                                         const BasisFrame &f3);

/// Left outcome in left_frame, collapse of the right system onto the right
/// support of the matching pairs, then the right outcome in right_frame.
/// Throws Error(ImpossibleOutcome) when the left outcome has probability 0.
Probability sequential_pair_prob(const ProductState &s, const BasisFrame &left_frame, std::string_view left_outcome,
                                 const BasisFrame &right_frame, std::string_view right_outcome);

struct SequentialTerm {
    std::string left_frame;
    std::string left_outcome;
    std::string right_frame;
    std::string right_outcome;
    Probability probability;
};

struct BellReport {
    std::vector<SequentialTerm> terms;  ///< Pr(x0,y0), Pr(y1,z1), Pr(x0,z1)
    Rational lhs;
    Rational rhs;
    bool violated = false;
    /// e.g. "1/4 + 0 ≥ 1/2 : VIOLATED"
    std::string summary() const;
};

/// Evaluates Pr(x0,y0) + Pr(y1,z1) ≥ Pr(x0,z1) with sequential probabilities.
/// A left outcome of probability 0 contributes 0.
BellReport bell_violation(const ProductState &s, const BasisFrame &f1, const BasisFrame &f2, const BasisFrame &f3);

/// Born probabilities of each state in each frame, one column per frame label.
struct StateOutcomeTable {
    std::vector<std::string> columns;
    std::vector<std::pair<SubsetKet, std::vector<Probability>>> rows;
};

StateOutcomeTable state_outcome_table(const std::vector<SubsetKet> &states, const std::vector<BasisFrame> &frames);
std::string to_text(const StateOutcomeTable &table);

}  // namespace qmsets
