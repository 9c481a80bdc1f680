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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qmsets/error.hpp"
#include "qmsets/partitions.hpp"
#include "qmsets/presets.hpp"

using namespace qmsets;
using oracle::R;

namespace {

constexpr double kShannonTol = 1e-12;

Partition part(std::string_view text) { return Partition::parse(presets::u3(), text); }

/// Oracle: pairs (i, j) in different blocks, straight from block membership.
std::size_t dit_count(const Partition &p) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < p.universe().size(); ++i) {
        for (std::size_t j = 0; j < p.universe().size(); ++j) n += !p.same_block(i, j);
    }
    return n;
}

/// Oracle: every block of `fine` lies within one block of `coarse`.
bool block_containment(const Partition &coarse, const Partition &fine) {
    for (const auto &b : fine.blocks()) {
        bool inside = false;
        for (const auto &c : coarse.blocks()) inside = inside || (b & c) == b;
        if (!inside) return false;
    }
    return true;
}

}  // namespace

TEST(Partition, ParseValidatesBlocks) {
    EXPECT_EQ(part("{c}|{a,b}").to_string(), "{a,b}|{c}");
    EXPECT_THROW(part("{a,b}|{b,c}"), Error);
    EXPECT_THROW(part("{a,b}"), Error);
    EXPECT_THROW(part("{a,b}|{}|{c}"), Error);
}

TEST(Partition, UniverseInferredFromText) {
    const Partition p = Partition::parse("{x,y}|{z}");
    EXPECT_EQ(p.universe().labels(), (std::vector<std::string>{"x", "y", "z"}));
}

TEST(Join, Examples) {
    EXPECT_EQ(join(part("{a}|{b,c}"), part("{a,b}|{c}")), Partition::discrete(presets::u3()));
    const Partition p = part("{a,c}|{b}");
    EXPECT_EQ(join(p, Partition::indiscrete(presets::u3())), p);
    EXPECT_EQ(join(p, p), p);
}

TEST(Join, IncompatiblePartitions) {
    try {
        join(part("{a}|{b,c}"), Partition::parse("{x}|{y,z}"));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UniverseMismatch);
    }
}

TEST(Refines, Examples) {
    const Universe u = presets::u3();
    for (const auto &p : enumerate_partitions(u)) EXPECT_TRUE(refines(Partition::indiscrete(u), p));
    EXPECT_FALSE(refines(Partition::discrete(u), Partition::indiscrete(u)));
    EXPECT_TRUE(refines(part("{a}|{b,c}"), Partition::discrete(u)));
}

TEST(DitSet, Examples) {
    const Universe u = presets::u3();
    EXPECT_EQ(dit_set(Partition::discrete(u)).size(), 6u);
    EXPECT_EQ(dit_set(Partition::indiscrete(u)).size(), 0u);
    const auto labeled = dit_set(part("{a}|{b,c}")).labeled();
    const std::vector<std::pair<std::string, std::string>> expected{{"a", "b"}, {"a", "c"}, {"b", "a"}, {"c", "a"}};
    EXPECT_EQ(labeled, expected);
}

TEST(Enumerate, BellNumbers) {
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52};
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_partitions(oracle::letters(n)).size(), bell[n]);
}

TEST(LogicalEntropy, Examples) {
    const Universe u = presets::u3();
    EXPECT_EQ(logical_entropy(Partition::discrete(u)), R(2, 3));
    EXPECT_EQ(logical_entropy(Partition::indiscrete(u)), R(0));
    EXPECT_EQ(logical_entropy(part("{a,b}|{c}")), R(4, 9));
}

TEST(ShannonEntropy, Examples) {
    EXPECT_NEAR(shannon_entropy(Partition::indiscrete(presets::u3())), 0.0, kShannonTol);
    EXPECT_NEAR(shannon_entropy(Partition::parse("{a,b}|{c,d}")), 1.0, kShannonTol);
    EXPECT_NEAR(shannon_entropy(Partition::discrete(oracle::letters(4))), 2.0, kShannonTol);
    EXPECT_NEAR(shannon_entropy(part("{a,b}|{c}")), std::log2(3.0) - 2.0 / 3.0, kShannonTol);
}

TEST(BlockEntropy, Relation) {
    const struct {
        Probability p;
        Rational h;
        double big_h;
    } cases[] = {{Probability::one(), R(0), 0.0}, {Probability(1, 2), R(1, 2), 1.0}, {Probability(1, 4), R(3, 4), 2.0}};
    for (const auto &c : cases) {
        const BlockEntropies e = block_entropy_relation(c.p);
        EXPECT_EQ(e.logical, c.h);
        EXPECT_NEAR(e.shannon, c.big_h, kShannonTol);
        EXPECT_NEAR(boost::rational_cast<double>(e.logical.value()), 1.0 - std::pow(2.0, -e.shannon), kShannonTol);
    }
    try {
        block_entropy_relation(Probability::zero());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
    }
}

TEST(PartitionLattice, ExhaustivePropertiesUpToFour) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const Universe u = oracle::letters(n);
        const auto all = enumerate_partitions(u);
        for (const auto &p : all) {
            const DitSet d = dit_set(p);
            EXPECT_TRUE(d.is_symmetric());
            EXPECT_FALSE(d.meets_diagonal());
            EXPECT_EQ(d.size(), dit_count(p));
            std::size_t squares = 0;
            for (const auto &b : p.blocks()) squares += b.size() * b.size();
            EXPECT_EQ(d.size(), n * n - squares);
            EXPECT_EQ(logical_entropy(p), R(static_cast<std::int64_t>(d.size()), static_cast<std::int64_t>(n * n)));

            for (const auto &q : all) {
                const bool by_dits = dit_set(q).is_subset_of(d);
                EXPECT_EQ(refines(q, p), by_dits);
                EXPECT_EQ(refines(q, p), block_containment(q, p));
                if (refines(q, p)) EXPECT_LE(logical_entropy(q), logical_entropy(p));

                // join is the least upper bound
                const Partition j = join(p, q);
                EXPECT_TRUE(refines(p, j));
                EXPECT_TRUE(refines(q, j));
                for (const auto &r : all) {
                    if (refines(p, r) && refines(q, r)) EXPECT_TRUE(refines(j, r));
                }
            }
        }
    }
}
