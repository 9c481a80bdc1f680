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

#include <random>

#include "oracles.hpp"
#include "qmsets/error.hpp"
#include "qmsets/gf2.hpp"

using namespace qmsets;

namespace {

const GF2Matrix kSlit{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}};

GF2Matrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c) {
    GF2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1U);
    }
    return m;
}

BitVec random_vec(std::mt19937_64 &rng, std::size_t n) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1U);
    return v;
}

}  // namespace

TEST(BitVec, AddIsSymmetricDifference) {
    EXPECT_EQ(add(BitVec::from_string("110"), BitVec::from_string("111")), BitVec::from_string("001"));
    EXPECT_EQ(add(BitVec::from_string("110"), BitVec::from_string("011")), BitVec::from_string("101"));
    const BitVec v = BitVec::from_string("1011");
    EXPECT_TRUE(add(v, v).is_zero());
}

TEST(BitVec, AddRejectsLengthMismatch) {
    try {
        add(BitVec(3), BitVec(4));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
    }
}

TEST(BitVec, GroupLawsOnAllVectorsOfLengthThree) {
    for (std::uint64_t a = 0; a < 8; ++a) {
        for (std::uint64_t b = 0; b < 8; ++b) {
            const BitVec x = BitVec::from_integer(3, a);
            const BitVec y = BitVec::from_integer(3, b);
            EXPECT_EQ(add(x, y), add(y, x));
            EXPECT_EQ(add(x, y), BitVec::from_integer(3, a ^ b));
            for (std::uint64_t c = 0; c < 8; ++c) {
                const BitVec z = BitVec::from_integer(3, c);
                EXPECT_EQ(add(add(x, y), z), add(x, add(y, z)));
            }
        }
    }
}

TEST(BitVec, WordBoundaries) {
    BitVec v(130);
    v.set(0, true);
    v.set(63, true);
    v.set(64, true);
    v.set(129, true);
    EXPECT_EQ(v.popcount(), 4u);
    EXPECT_EQ(v.ones(), (std::vector<std::size_t>{0, 63, 64, 129}));
    EXPECT_EQ(v.first_one(), 0u);
}

TEST(GF2Matrix, ApplySlitDynamics) {
    EXPECT_EQ(mat_apply(kSlit, BitVec::from_string("100")), BitVec::from_string("110"));
    EXPECT_EQ(mat_apply(kSlit, BitVec::from_string("101")), BitVec::from_string("101"));
    const BitVec v = BitVec::from_string("011");
    EXPECT_EQ(mat_apply(GF2Matrix::identity(3), v), v);
}

TEST(GF2Matrix, ApplyDimMismatch) {
    try {
        mat_apply(kSlit, BitVec(2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimMismatch);
    }
}

TEST(GF2Matrix, MulGates) {
    const GF2Matrix x{{0, 1}, {1, 0}};
    const GF2Matrix h0{{1, 0}, {1, 1}};
    EXPECT_EQ(mat_mul(x, h0), (GF2Matrix{{1, 1}, {1, 0}}));
    EXPECT_EQ(mat_mul(x, x), GF2Matrix::identity(2));
    EXPECT_EQ(mat_mul(GF2Matrix::identity(3), kSlit), kSlit);
    EXPECT_THROW(mat_mul(x, kSlit), Error);
}

TEST(GF2Matrix, Nonsingular) {
    EXPECT_TRUE(is_nonsingular(GF2Matrix::identity(4)));
    EXPECT_TRUE(is_nonsingular(kSlit));
    EXPECT_FALSE(is_nonsingular(GF2Matrix{{1, 1}, {1, 1}}));
    try {
        is_nonsingular(GF2Matrix(2, 3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSquare);
    }
}

TEST(GF2Matrix, NonsingularAgreesWithKernelSearch) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto &m : oracle::all_matrices(n)) EXPECT_EQ(is_nonsingular(m), oracle::nonsingular(m)) << m.to_string();
    }
}

TEST(GF2Matrix, NonsingularCounts) {
    // |GL(n, 2)| = 1, 6, 168
    EXPECT_EQ(oracle::all_nonsingular(1).size(), 1u);
    EXPECT_EQ(oracle::all_nonsingular(2).size(), 6u);
    EXPECT_EQ(oracle::all_nonsingular(3).size(), 168u);
}

TEST(GF2Matrix, Invert) {
    EXPECT_EQ(invert(GF2Matrix::identity(3)), GF2Matrix::identity(3));
    const GF2Matrix h0{{1, 0}, {1, 1}};
    EXPECT_EQ(invert(h0), h0);
    try {
        invert(GF2Matrix{{1, 1}, {1, 1}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Singular);
    }
}

TEST(GF2Matrix, InvertIsInverseExactlyWhenNonsingular) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto &m : oracle::all_matrices(n)) {
            if (oracle::nonsingular(m)) {
                const GF2Matrix inv = invert(m);
                EXPECT_EQ(mat_mul(inv, m), GF2Matrix::identity(n));
                EXPECT_EQ(mat_mul(m, inv), GF2Matrix::identity(n));
            } else {
                EXPECT_THROW(invert(m), Error);
            }
        }
    }
}

TEST(GF2Matrix, SolveKetTableRows) {
    // columns {a,b}, {b,c}, {a,b,c}
    const GF2Matrix primed = GF2Matrix::from_columns(
        {BitVec::from_string("110"), BitVec::from_string("011"), BitVec::from_string("111")});
    EXPECT_EQ(solve(primed, BitVec::from_string("100")), BitVec::from_string("011"));
    EXPECT_EQ(solve(primed, BitVec::from_string("101")), BitVec::from_string("110"));
    const BitVec b = BitVec::from_string("010");
    EXPECT_EQ(solve(GF2Matrix::identity(3), b), b);
    EXPECT_THROW(solve(GF2Matrix{{1, 1}, {1, 1}}, BitVec(2)), Error);
}

TEST(GF2Matrix, SolveMatchesUniqueSearchUpToFour) {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            const GF2Matrix a = random_matrix(rng, n, n);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                const BitVec b = BitVec::from_integer(n, mask);
                const auto expected = oracle::coordinates(a, oracle::bits_of(mask, n));
                if (!oracle::nonsingular(a)) {
                    EXPECT_THROW(solve(a, b), Error);
                    continue;
                }
                ASSERT_TRUE(expected.has_value());
                const BitVec x = solve(a, b);
                EXPECT_EQ(mat_apply(a, x), b);
                for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(x.get(i), (*expected)[i]);
            }
        }
    }
}

TEST(GF2Matrix, Kron) {
    const GF2Matrix h0{{1, 0}, {1, 1}};
    EXPECT_EQ(kron(GF2Matrix::identity(2), h0),
              (GF2Matrix{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}}));
    EXPECT_EQ(kron(GF2Matrix::identity(2), GF2Matrix::identity(2)), GF2Matrix::identity(4));
    const GF2Matrix xh1{{0, 1}, {1, 1}};
    const GF2Matrix xh0{{1, 1}, {1, 0}};
    EXPECT_EQ(kron(xh1, xh0), (GF2Matrix{{0, 0, 1, 1}, {0, 0, 1, 0}, {1, 1, 1, 1}, {1, 0, 1, 0}}));
}

TEST(GF2Matrix, AssociativityAndMixedProduct) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const GF2Matrix a = random_matrix(rng, 3, 4);
        const GF2Matrix b = random_matrix(rng, 4, 2);
        const BitVec v = random_vec(rng, 2);
        EXPECT_EQ(mat_apply(mat_mul(a, b), v), mat_apply(a, mat_apply(b, v)));

        const GF2Matrix c = random_matrix(rng, 4, 3);
        const GF2Matrix p = random_matrix(rng, 2, 2);
        const GF2Matrix q = random_matrix(rng, 2, 3);
        EXPECT_EQ(mat_mul(kron(a, p), kron(c, q)), kron(mat_mul(a, c), mat_mul(p, q)));
    }
}

TEST(GF2Matrix, WideMatricesCrossWordBoundary) {
    std::mt19937_64 rng(17);
    GF2Matrix a = GF2Matrix::identity(70);
    for (std::size_t r = 0; r < 70; ++r) {
        for (std::size_t c = r + 1; c < 70; ++c) a.set(r, c, rng() & 1U);
    }
    EXPECT_TRUE(is_nonsingular(a));
    EXPECT_EQ(mat_mul(invert(a), a), GF2Matrix::identity(70));
    const BitVec b = random_vec(rng, 70);
    EXPECT_EQ(mat_apply(a, solve(a, b)), b);
}
