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

#include "qmsets/rational.hpp"
#include "qmsets/setspace.hpp"

namespace qmsets {

/// Set partition of a universe. Blocks are nonempty, disjoint, cover the
/// universe, and are kept ordered by their least element index.
class Partition {
  public:
    /// Throws Error(InvalidArgument) if the blocks are not a partition of `u`
    /// and Error(UniverseMismatch) if a block lives elsewhere.
    Partition(Universe u, std::vector<SubsetKet> blocks);

    static Partition discrete(const Universe &u);
    /// The one-block partition ("blob").
    static Partition indiscrete(const Universe &u);
    /// block_ids[i] is an arbitrary tag for the block of element i.
    static Partition from_block_ids(const Universe &u, const std::vector<std::size_t> &block_ids);
    /// "{a,b}|{c}" over a given universe.
    static Partition parse(const Universe &u, std::string_view text);
    /// "{a,b}|{c}" with the universe taken from the labels in order of appearance.
    static Partition parse(std::string_view text);

    const Universe &universe() const noexcept { return universe_; }
    const std::vector<SubsetKet> &blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    std::size_t block_of(std::size_t element) const { return block_id_.at(element); }
    bool same_block(std::size_t i, std::size_t j) const { return block_id_.at(i) == block_id_.at(j); }
    bool is_discrete() const noexcept { return blocks_.size() == universe_.size(); }

    /// "{a,b}|{c}".
    std::string to_string() const;

    friend bool operator==(const Partition &a, const Partition &b) {
        return a.universe_ == b.universe_ && a.blocks_ == b.blocks_;
    }

  private:
    Universe universe_;
    std::vector<SubsetKet> blocks_;
    std::vector<std::size_t> block_id_;
};

/// Ordered pairs of elements lying in distinct blocks.
class DitSet {
  public:
    DitSet(Universe u, std::vector<std::pair<std::size_t, std::size_t>> pairs);

    const Universe &universe() const noexcept { return universe_; }
    const std::vector<std::pair<std::size_t, std::size_t>> &pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool contains(std::size_t i, std::size_t j) const;
    bool is_subset_of(const DitSet &other) const;
    bool is_symmetric() const;
    bool meets_diagonal() const;
    std::vector<std::pair<std::string, std::string>> labeled() const;

    friend bool operator==(const DitSet &a, const DitSet &b) { return a.pairs_ == b.pairs_; }

  private:
    Universe universe_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;  // sorted
};

/// Blocks are the nonempty intersections B ∩ C. Throws Error(UniverseMismatch).
Partition join(const Partition &p, const Partition &q);
/// q ⪯ p: every block of p sits inside a block of q, i.e. dit(q) ⊆ dit(p).
/// Throws Error(UniverseMismatch).
bool refines(const Partition &q, const Partition &p);
DitSet dit_set(const Partition &p);
/// |dit(p)| / |U|².
Probability logical_entropy(const Partition &p);
/// Σ p_B log2(1/p_B) over block probabilities |B|/|U|.
double shannon_entropy(const Partition &p);

struct BlockEntropies {
    Probability logical;  ///< h(B) = 1 - p_B
    double shannon;       ///< H(B) = log2(1/p_B)
};
/// Throws Error(OutOfRange) for p_B == 0.
BlockEntropies block_entropy_relation(const Probability &p_block);

/// Every partition of `u` (Bell-number many), via restricted growth strings.
std::vector<Partition> enumerate_partitions(const Universe &u);

}  // namespace qmsets
