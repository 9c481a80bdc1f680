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
#include "qmsets/dynamics.hpp"
#include "qmsets/error.hpp"
#include "qmsets/presets.hpp"

using namespace qmsets;
using oracle::R;

TEST(Dynamics, Construction) {
    EXPECT_THROW(Dynamics(GF2Matrix{{1, 1}, {1, 1}}), Error);
    EXPECT_THROW(Dynamics(GF2Matrix(2, 3)), Error);
    EXPECT_EQ(Dynamics::identity(3).dimension(), 3u);
}

TEST(Evolve, Examples) {
    const SlitConfig cfg = presets::double_slit();
    const Universe u = presets::u3();
    EXPECT_EQ(evolve(cfg.dynamics, SubsetKet::parse(u, "{a}")), SubsetKet::parse(u, "{a,b}"));
    EXPECT_EQ(evolve(cfg.dynamics, SubsetKet::parse(u, "{c}")), SubsetKet::parse(u, "{b,c}"));
    EXPECT_EQ(evolve(cfg.dynamics, SubsetKet::parse(u, "{a,c}")), SubsetKet::parse(u, "{a,c}"));
    try {
        evolve(Dynamics::identity(2), SubsetKet::parse(u, "{a}"));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimMismatch);
    }
}

TEST(EvolvedFrame, DefaultNames) {
    const BasisFrame f = evolved_frame(presets::double_slit().dynamics, BasisFrame::canonical(presets::u3()));
    EXPECT_EQ(f.name(), "AU");
    EXPECT_EQ(f.universe().labels(), (std::vector<std::string>{"Aa", "Ab", "Ac"}));
    EXPECT_EQ(f.basis_ket(1), SubsetKet::parse(presets::u3(), "{a,b,c}"));
}

TEST(Dynamics, BracketPreservationExhaustiveUpToThree) {
    for (std::size_t n = 1; n <= 3; ++n) {
        const Universe u = oracle::letters(n);
        const BasisFrame canon = BasisFrame::canonical(u);
        const auto subsets = oracle::all_subsets(u);
        std::vector<std::string> v_labels;
        for (const auto &l : u.labels()) v_labels.push_back(l + "'");
        for (const auto &m : oracle::all_nonsingular(n)) {
            const Dynamics a(m);
            const BasisFrame au = evolved_frame(a, canon);
            for (const auto &frame_kets : oracle::all_nonsingular(n)) {
                // any starting frame, not only the canonical one
                const BasisFrame v("V", u, Universe(v_labels), frame_kets);
                const BasisFrame av = evolved_frame(a, v);
                for (const auto &s : subsets) {
                    for (const auto &t : subsets) {
                        EXPECT_EQ(bracket_in(v, t, s), bracket_in(av, evolve(a, t), evolve(a, s)));
                    }
                }
            }
            for (const auto &s : subsets) {
                for (const auto &t : subsets) EXPECT_EQ(bracket(t, s), bracket_in(au, evolve(a, t), evolve(a, s)));
            }
        }
    }
}

TEST(Dynamics, LinearAndInjectiveUpToFour) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const Universe u = oracle::letters(n);
        const auto subsets = oracle::all_subsets(u);
        const auto matrices = oracle::all_nonsingular(n);
        for (std::size_t i = 0; i < matrices.size(); i += n == 4 ? 97 : 1) {
            const Dynamics a(matrices[i]);
            std::vector<bool> hit(subsets.size(), false);
            for (const auto &s : subsets) {
                const SubsetKet image = evolve(a, s);
                std::uint64_t code = 0;
                for (std::size_t k : image.indices()) code |= std::uint64_t{1} << k;
                EXPECT_FALSE(hit[code]);
                hit[code] = true;
                for (const auto &t : subsets) EXPECT_EQ(evolve(a, s + t), evolve(a, s) + evolve(a, t));
            }
            EXPECT_EQ(evolve(a, SubsetKet::empty(u)), SubsetKet::empty(u));
        }
    }
}

TEST(Interference, MatchesDirectChangeOfBasis) {
    const auto frames = presets::u3_frames();
    for (const auto &via : frames) {
        for (const auto &target : frames) {
            for (const auto &s : oracle::all_subsets(presets::u3())) {
                const Interference i = interference_coefficients(s, via, target);
                EXPECT_EQ(i.coefficients, to_basis(s, target));
                EXPECT_EQ(i.components.size(), to_basis(s, via).size());
            }
        }
    }
}

TEST(Interference, SlitStateCancelsAtMiddle) {
    const SlitConfig cfg = presets::double_slit();
    const BasisFrame wall = cfg.position_frame;
    const SubsetKet evolved = evolve(cfg.dynamics, cfg.slit_state);
    const BasisFrame after = evolved_frame(cfg.dynamics, wall);
    const Interference i = interference_coefficients(evolved, after, wall);
    ASSERT_EQ(i.components.size(), 2u);
    EXPECT_EQ(i.components[0].coefficients, SubsetKet::parse(wall.universe(), "{a,b}"));
    EXPECT_EQ(i.components[1].coefficients, SubsetKet::parse(wall.universe(), "{b,c}"));
    EXPECT_EQ(i.coefficients, SubsetKet::parse(wall.universe(), "{a,c}"));
}

TEST(DoubleSlit, WallDistributions) {
    const SlitConfig cfg = presets::double_slit();
    const Distribution with = double_slit(cfg, true);
    EXPECT_EQ(with.at("a"), R(1, 4));
    EXPECT_EQ(with.at("b"), R(1, 2));
    EXPECT_EQ(with.at("c"), R(1, 4));
    const Distribution without = double_slit(cfg, false);
    EXPECT_EQ(without.at("a"), R(1, 2));
    EXPECT_EQ(without.at("b"), R(0));
    EXPECT_EQ(without.at("c"), R(1, 2));
}

TEST(DoubleSlit, ZeroSlitState) {
    SlitConfig cfg = presets::double_slit();
    cfg.slit_state = SubsetKet::empty(presets::u3());
    try {
        double_slit(cfg, false);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroState);
    }
}

TEST(DoubleSlit, SamplingWithinFiveSigma) {
    const SlitConfig cfg = presets::double_slit();
    constexpr std::size_t kTrials = 10000;
    for (bool at_slits : {true, false}) {
        Rng rng(7);
        const auto counts = double_slit_sample(cfg, at_slits, kTrials, rng);
        const Distribution exact = double_slit(cfg, at_slits);
        ASSERT_EQ(counts.size(), exact.size());
        for (std::size_t k = 0; k < counts.size(); ++k) {
            const double p = boost::rational_cast<double>(exact.entries[k].probability.value());
            const double sigma = std::sqrt(kTrials * p * (1 - p));
            EXPECT_NEAR(static_cast<double>(counts[k]), kTrials * p, 5 * sigma + 1e-9);
        }
    }
}
