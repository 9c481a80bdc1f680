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

#include <algorithm>

#include "oracles.hpp"
#include "qmsets/entangle.hpp"
#include "qmsets/error.hpp"
#include "qmsets/presets.hpp"

using namespace qmsets;
using oracle::R;

namespace {

ProductUniverse bell_pu() { return ProductUniverse(presets::bell_universe(), presets::bell_universe()); }

ProductState state(std::string_view text) { return ProductState::parse(bell_pu(), text); }

/// Oracle: expand each pair (x,y) as {x}_frame × {y}_frame and add the
/// products mod 2, one pair at a time.
BitVec expand_pairs(const ProductState &s, const BasisFrame &left, const BasisFrame &right) {
    const std::size_t nr = right.dimension();
    BitVec out(left.dimension() * nr);
    for (const auto &[i, j] : s.pairs()) {
        const SubsetKet x = to_basis(SubsetKet::singleton(s.universe().left(), i), left);
        const SubsetKet y = to_basis(SubsetKet::singleton(s.universe().right(), j), right);
        for (std::size_t p : x.indices()) {
            for (std::size_t q : y.indices()) out.flip(p * nr + q);
        }
    }
    return out;
}

/// Oracle: Pr(x,y) == Pr(x)·Pr(y) counted directly, scaled by |S|² to stay integral.
bool independent_by_counting(const ProductState &s) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < s.universe().left().size(); ++i) {
        for (std::size_t j = 0; j < s.universe().right().size(); ++j) {
            std::size_t row = 0, col = 0;
            for (const auto &[x, y] : s.pairs()) {
                row += x == i;
                col += y == j;
            }
            if ((s.contains(i, j) ? n : 0) != row * col) return false;
        }
    }
    return true;
}

ProductState swapped(const ProductState &s) {
    const ProductUniverse pu(s.universe().right(), s.universe().left());
    BitVec bits(pu.size());
    for (const auto &[i, j] : s.pairs()) bits.set(pu.index(j, i), true);
    return ProductState(pu, bits);
}

}  // namespace

TEST(ProductState, ParseAndRender) {
    const ProductState s = state("{(b,b),(a,a)}");
    EXPECT_EQ(s.to_string(), "{(a,a),(b,b)}");
    EXPECT_EQ(s, presets::bell_state());
    EXPECT_THROW(state("{}"), Error);
    EXPECT_THROW(state("{(a,c)}"), Error);
    EXPECT_THROW(ProductState(bell_pu(), BitVec(3)), Error);
}

TEST(ProductState, SupportsAndSeparation) {
    const auto [sx, sy] = supports(state("{(a,a),(a,b)}"));
    EXPECT_EQ(sx, SubsetKet::parse(presets::bell_universe(), "{a}"));
    EXPECT_EQ(sy, SubsetKet::parse(presets::bell_universe(), "{a,b}"));
    EXPECT_TRUE(is_separated(state("{(a,a),(a,b)}")));
    EXPECT_FALSE(is_separated(presets::bell_state()));
    const SubsetKet x = SubsetKet::parse(presets::u3(), "{a,c}");
    const SubsetKet y = SubsetKet::parse(presets::bell_universe(), "{b}");
    EXPECT_TRUE(is_separated(ProductState::product(x, y)));
    EXPECT_EQ(ProductState::product(x, y).size(), 2u);
}

TEST(Census, TwoElementUniverse) {
    const Census c = census(bell_pu());
    EXPECT_EQ(c.separated.size(), 9u);
    ASSERT_EQ(c.entangled.size(), 6u);
    const std::vector<ProductState> listed{
        state("{(a,a),(b,b)}"),       state("{(a,b),(b,a)}"),       state("{(a,a),(a,b),(b,a)}"),
        state("{(a,a),(a,b),(b,b)}"), state("{(a,b),(b,a),(b,b)}"), state("{(a,a),(b,a),(b,b)}")};
    for (const auto &s : listed) {
        EXPECT_NE(std::find(c.entangled.begin(), c.entangled.end(), s), c.entangled.end()) << s.to_string();
    }
    const auto nonempty = [](const SubsetKet &k) { return !k.is_empty(); };
    for (const auto &x : oracle::all_subsets(presets::bell_universe())) {
        for (const auto &y : oracle::all_subsets(presets::bell_universe())) {
            if (!nonempty(x) || !nonempty(y)) continue;
            const ProductState p = ProductState::product(x, y);
            EXPECT_NE(std::find(c.separated.begin(), c.separated.end(), p), c.separated.end());
        }
    }
}

TEST(Joint, BellStateMarginals) {
    const JointDistribution d = make_joint(presets::bell_state());
    EXPECT_EQ(d.at(0, 0), R(1, 2));
    EXPECT_EQ(d.at(0, 1), R(0));
    const Marginals m = marginals(d);
    EXPECT_EQ(m.left.at("a"), R(1, 2));
    EXPECT_EQ(m.right.at("b"), R(1, 2));
    EXPECT_FALSE(is_independent(d));
    EXPECT_TRUE(is_independent(make_joint(state("{(a,a),(a,b)}"))));
}

TEST(Joint, SeparatedIffIndependentExhaustive) {
    for (std::size_t nx = 1; nx <= 3; ++nx) {
        for (std::size_t ny = 1; ny <= 3; ++ny) {
            const ProductUniverse pu(oracle::letters(nx), oracle::letters(ny));
            const auto states = all_product_states(pu);
            EXPECT_EQ(states.size(), (std::size_t{1} << (nx * ny)) - 1);
            std::size_t separated = 0;
            for (const auto &s : states) {
                const bool sep = is_separated(s);
                separated += sep;
                EXPECT_EQ(sep, is_independent(make_joint(s))) << s.to_string();
                EXPECT_EQ(sep, independent_by_counting(s)) << s.to_string();
            }
            EXPECT_EQ(separated, ((std::size_t{1} << nx) - 1) * ((std::size_t{1} << ny) - 1));
        }
    }
}

TEST(ProductToFrame, PartialTable) {
    const auto frames = presets::bell_frames();
    const struct {
        const char *u, *u1, *u2;
    } rows[] = {
        {"{(a,a)}", "{(a',a'),(a',b'),(b',a'),(b',b')}", "{(b'',b'')}"},
        {"{(a,b)}", "{(a',b'),(b',b')}", "{(b'',a''),(b'',b'')}"},
        {"{(b,a)}", "{(b',a'),(b',b')}", "{(a'',b''),(b'',b'')}"},
        {"{(b,b)}", "{(b',b')}", "{(a'',a''),(a'',b''),(b'',a''),(b'',b'')}"},
        {"{(a,a),(a,b)}", "{(a',a'),(b',a')}", "{(b'',a'')}"},
        {"{(a,a),(b,a)}", "{(a',a'),(a',b')}", "{(a'',b'')}"},
        {"{(a,a),(b,b)}", "{(a',a'),(a',b'),(b',a')}", "{(a'',a''),(a'',b''),(b'',a'')}"},
        {"{(a,b),(b,a)}", "{(a',b'),(b',a')}", "{(a'',b''),(b'',a'')}"},
    };
    const ProductUniverse pu1(frames[1].universe(), frames[1].universe());
    const ProductUniverse pu2(frames[2].universe(), frames[2].universe());
    for (const auto &row : rows) {
        const ProductState s = state(row.u);
        EXPECT_EQ(product_to_frame(s, frames[1], frames[1]), ProductState::parse(pu1, row.u1)) << row.u;
        EXPECT_EQ(product_to_frame(s, frames[2], frames[2]), ProductState::parse(pu2, row.u2)) << row.u;
        EXPECT_EQ(product_to_frame(s, frames[0], frames[0]), s);
    }
}

TEST(ProductToFrame, MatchesPairExpansionAndKeepsSeparation) {
    const auto frames2 = presets::bell_frames();
    for (const auto &l : frames2) {
        for (const auto &r : frames2) {
            for (const auto &s : all_product_states(bell_pu())) {
                const ProductState t = product_to_frame(s, l, r);
                EXPECT_EQ(t.bits(), expand_pairs(s, l, r));
                EXPECT_EQ(is_separated(t), is_separated(s));
            }
        }
    }
    const auto frames3 = presets::u3_frames();
    const ProductUniverse pu(presets::u3(), presets::bell_universe());
    for (const auto &l : frames3) {
        for (const auto &r : frames2) {
            for (const auto &s : all_product_states(pu)) {
                const ProductState t = product_to_frame(s, l, r);
                EXPECT_EQ(t.bits(), expand_pairs(s, l, r));
                EXPECT_EQ(is_separated(t), is_separated(s));
            }
        }
    }
}

TEST(ProductToFrame, Errors) {
    const auto frames = presets::bell_frames();
    try {
        product_to_frame(presets::bell_state(), presets::u3_frames()[1], frames[1]);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimMismatch);
    }
}

TEST(LeftMeasurement, BellStateValues) {
    const auto f = presets::bell_frames();
    const ProductState s = presets::bell_state();
    EXPECT_EQ(left_measure_prob(s, f[0], "a"), R(1, 2));
    EXPECT_EQ(left_measure_prob(s, f[1], "a'"), R(2, 3));
    EXPECT_EQ(left_measure_prob(s, f[2], "a''"), R(2, 3));
    EXPECT_EQ(left_measure_prob(s, f[1], "b'"), R(1, 3));
    EXPECT_THROW(left_measure_prob(s, f[1], "a"), Error);
}

TEST(LeftMeasurement, MirrorsRightMeasurement) {
    const auto frames = presets::bell_frames();
    for (const auto &s : all_product_states(bell_pu())) {
        for (const auto &f : frames) {
            Rational total(0);
            for (const auto &label : f.universe().labels()) {
                EXPECT_EQ(left_measure_prob(s, f, label), right_measure_prob(swapped(s), f, label));
                total += left_measure_prob(s, f, label).value();
            }
            EXPECT_EQ(total, R(1));
        }
    }
}

TEST(Counterfactual, BellState) {
    const auto f = presets::bell_frames();
    const CounterfactualJoint j = counterfactual_joint(presets::bell_state(), f[0], f[1], f[2]);
    EXPECT_EQ(j.at("a", "a'", "a''"), R(2, 9));
    EXPECT_EQ(j.triples.size(), 8u);
    Rational total(0);
    for (const auto &t : j.triples) total += t.probability.value();
    EXPECT_EQ(total, R(1));
    EXPECT_EQ(j.first, R(1, 3));
    EXPECT_EQ(j.second, R(1, 9));
    EXPECT_EQ(j.third, R(1, 6));
    EXPECT_TRUE(j.holds());
}

TEST(Counterfactual, InequalityHoldsForEveryState) {
    const auto f = presets::bell_frames();
    for (const auto &s : all_product_states(bell_pu())) EXPECT_TRUE(counterfactual_joint(s, f[0], f[1], f[2]).holds());
}

TEST(Sequential, BellStateValues) {
    const auto f = presets::bell_frames();
    const ProductState s = presets::bell_state();
    EXPECT_EQ(sequential_pair_prob(s, f[0], "a", f[1], "a'"), R(1, 4));
    EXPECT_EQ(sequential_pair_prob(s, f[1], "b'", f[2], "b''"), R(0));
    EXPECT_EQ(sequential_pair_prob(s, f[0], "a", f[2], "b''"), R(1, 2));
    try {
        sequential_pair_prob(state("{(a,a)}"), f[0], "b", f[1], "a'");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ImpossibleOutcome);
    }
}

TEST(Sequential, ProbabilitiesSumToOne) {
    const auto f = presets::bell_frames();
    for (const auto &s : all_product_states(bell_pu())) {
        for (const auto &lf : f) {
            for (const auto &rf : f) {
                Rational total(0);
                for (const auto &lo : lf.universe().labels()) {
                    if (left_measure_prob(s, lf, lo).is_zero()) continue;
                    for (const auto &ro : rf.universe().labels()) {
                        total += sequential_pair_prob(s, lf, lo, rf, ro).value();
                    }
                }
                EXPECT_EQ(total, R(1));
            }
        }
    }
}

TEST(Bell, BothBellStatesViolate) {
    const auto f = presets::bell_frames();
    const BellReport r = bell_violation(presets::bell_state(), f[0], f[1], f[2]);
    EXPECT_EQ(r.lhs, R(1, 4));
    EXPECT_EQ(r.rhs, R(1, 2));
    EXPECT_TRUE(r.violated);
    EXPECT_EQ(r.summary(), "1/4 + 0 ≥ 1/2 : VIOLATED");

    const BellReport o = bell_violation(presets::other_bell_state(), f[0], f[1], f[2]);
    ASSERT_EQ(o.terms.size(), 3u);
    EXPECT_EQ(o.terms[0].probability, R(0));
    EXPECT_EQ(o.terms[1].probability, R(0));
    EXPECT_EQ(o.terms[2].probability, R(1, 4));
    EXPECT_TRUE(o.violated);
}

TEST(StateOutcomeTable, BellFrames) {
    auto rows = presets::bell_rows();
    rows.pop_back();  // the empty ket has no distribution
    const auto t = state_outcome_table(rows, presets::bell_frames());
    EXPECT_EQ(t.columns, (std::vector<std::string>{"a", "b", "a'", "b'", "a''", "b''"}));
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_EQ(t.rows[1].second[4], R(1, 2));
    EXPECT_EQ(t.rows[2].second[3], R(1, 2));
}
