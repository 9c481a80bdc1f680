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
#include <map>

#include "oracles.hpp"
#include "qmsets/attributes.hpp"
#include "qmsets/error.hpp"
#include "qmsets/presets.hpp"

using namespace qmsets;
using oracle::R;

namespace {

SubsetKet ket(std::string_view text) { return SubsetKet::parse(presets::u3(), text); }
Attribute ordinal() { return Attribute::parse(presets::u3(), "a=1,b=2,c=3"); }
Attribute chi(std::string_view s) { return Attribute::characteristic(ket(s)); }

}  // namespace

TEST(Attribute, Parse) {
    const Attribute f = Attribute::parse(presets::u3(), "a=1, b=-2, c=3/2");
    EXPECT_EQ(f.value(1), R(-2));
    EXPECT_EQ(f.value(2), R(3, 2));
    EXPECT_THROW(Attribute::parse(presets::u3(), "a=1,b=2"), Error);
    EXPECT_THROW(Attribute::parse(presets::u3(), "a=1,b=2,c=x"), Error);
}

TEST(InverseImage, Examples) {
    EXPECT_TRUE(inverse_image_partition(ordinal()).is_discrete());
    EXPECT_EQ(inverse_image_partition(Attribute::constant(presets::u3(), R(5))).block_count(), 1u);
    EXPECT_EQ(inverse_image_partition(chi("{b,c}")).to_string(), "{a}|{b,c}");
}

TEST(Project, Examples) {
    EXPECT_EQ(project(ordinal(), R(3), ket("{a,b,c}")), ket("{c}"));
    EXPECT_TRUE(project(ordinal(), R(7), ket("{a,b,c}")).is_empty());
    for (const auto &s : oracle::all_subsets(presets::u3())) {
        for (const auto &r : {R(1), R(2), R(3)}) {
            EXPECT_EQ(project(ordinal(), r, project(ordinal(), r, s)), project(ordinal(), r, s));
        }
    }
}

TEST(MeasureProbs, Examples) {
    const auto p = measure_probs(ordinal(), ket("{a,b,c}"));
    ASSERT_EQ(p.size(), 3u);
    for (const auto &e : p) EXPECT_EQ(e.probability, R(1, 3));

    const auto q = measure_probs(chi("{b,c}"), ket("{a,b,c}"));
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(q[0].eigenvalue, R(0));
    EXPECT_EQ(q[0].probability, R(1, 3));
    EXPECT_EQ(q[1].probability, R(2, 3));

    const auto r = measure_probs(chi("{a,b}"), ket("{b,c}"));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].probability, R(1, 2));
    EXPECT_EQ(r[1].probability, R(1, 2));

    EXPECT_THROW(measure_probs(ordinal(), ket("{}")), Error);
}

TEST(Measure, GivenOutcomes) {
    const MeasurementOutcome m = measure_given(ordinal(), ket("{a,b,c}"), R(3));
    EXPECT_EQ(m.post_state, ket("{c}"));
    EXPECT_EQ(m.probability, R(1, 3));

    const MeasurementOutcome n = measure_given(chi("{a,b}"), ket("{b,c}"), R(0));
    EXPECT_EQ(n.post_state, ket("{c}"));
    EXPECT_EQ(n.probability, R(1, 2));

    const MeasurementOutcome again = measure_given(chi("{a,b}"), n.post_state, n.eigenvalue);
    EXPECT_EQ(again.post_state, n.post_state);
    EXPECT_EQ(again.probability, R(1));

    try {
        measure_given(chi("{a,b}"), ket("{c}"), R(1));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ImpossibleOutcome);
    }
}

TEST(Measure, RepeatedSampledMeasurementIsStable) {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const MeasurementOutcome first = measure(chi("{b,c}"), ket("{a,b,c}"), rng);
        const MeasurementOutcome second = measure(chi("{b,c}"), first.post_state, rng);
        EXPECT_EQ(second.eigenvalue, first.eigenvalue);
        EXPECT_EQ(second.post_state, first.post_state);
    }
}

TEST(Measure, FrequenciesWithinFiveSigma) {
    const Attribute f = chi("{b,c}");
    const SubsetKet s = ket("{a,b,c}");
    const auto probs = measure_probs(f, s);
    constexpr int kTrials = 10000;
    Rng rng(20240601);
    std::map<Rational, int> counts;
    for (int i = 0; i < kTrials; ++i) ++counts[measure(f, s, rng).eigenvalue];
    for (const auto &e : probs) {
        const double p = boost::rational_cast<double>(e.probability.value());
        const double sigma = std::sqrt(kTrials * p * (1 - p));
        EXPECT_NEAR(counts[e.eigenvalue], kTrials * p, 5 * sigma);
    }
}

TEST(Measure, CollapseChain) {
    // nondegenerate χ_{b,c} then χ_{a,b}: {a,b,c} -> {b,c} -> {c}, eigenket (1,0)
    const MeasurementOutcome first = measure_given(chi("{b,c}"), ket("{a,b,c}"), R(1));
    EXPECT_EQ(first.post_state, ket("{b,c}"));
    const MeasurementOutcome second = measure_given(chi("{a,b}"), first.post_state, R(0));
    EXPECT_EQ(second.post_state, ket("{c}"));
    const std::vector<Attribute> csco{chi("{b,c}"), chi("{a,b}")};
    const auto table = eigenkets(csco);
    EXPECT_EQ(table[2].first, "c");
    EXPECT_EQ(table[2].second, (std::vector<Rational>{first.eigenvalue, second.eigenvalue}));
}

TEST(Compatibility, Examples) {
    EXPECT_TRUE(is_compatible(chi("{b,c}"), chi("{a,b}")));
    EXPECT_TRUE(is_compatible(ordinal(), ordinal()));
    const auto frames = presets::bell_frames();
    const Attribute on_u = Attribute::parse(frames[0].universe(), "a=0,b=1");
    const Attribute on_u1 = Attribute::parse(frames[1].universe(), "a'=0,b'=1");
    EXPECT_FALSE(is_compatible(on_u, on_u1));
}

TEST(Completeness, Examples) {
    const std::vector<Attribute> both{chi("{b,c}"), chi("{a,b}")};
    EXPECT_TRUE(is_complete(both));
    const std::vector<Attribute> one{chi("{b,c}")};
    EXPECT_FALSE(is_complete(one));
    const std::vector<Attribute> ord{ordinal()};
    EXPECT_TRUE(is_complete(ord));
    const std::vector<Attribute> mixed{chi("{b,c}"), Attribute::parse(Universe{"x", "y", "z"}, "x=1,y=2,z=3")};
    try {
        is_complete(mixed);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::IncompatibleAttributes);
    }
}

TEST(Eigenkets, Examples) {
    const std::vector<Attribute> both{chi("{b,c}"), chi("{a,b}")};
    const auto t = eigenkets(both);
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t[0].second, (std::vector<Rational>{R(0), R(1)}));
    EXPECT_EQ(t[1].second, (std::vector<Rational>{R(1), R(1)}));
    EXPECT_EQ(t[2].second, (std::vector<Rational>{R(1), R(0)}));

    const std::vector<Attribute> ord{ordinal()};
    const auto o = eigenkets(ord);
    EXPECT_EQ(o[1].second, (std::vector<Rational>{R(2)}));

    const std::vector<Attribute> one{chi("{b,c}")};
    try {
        eigenkets(one);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotComplete);
    }
}

TEST(SpectralApply, Examples) {
    const auto parts = spectral_apply(ordinal(), ket("{a,c}"));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0], std::make_pair(R(1), ket("{a}")));
    EXPECT_EQ(parts[1], std::make_pair(R(3), ket("{c}")));
    const auto constant = spectral_apply(Attribute::constant(presets::u3(), R(4)), ket("{a,b}"));
    ASSERT_EQ(constant.size(), 1u);
    EXPECT_EQ(constant[0].second, ket("{a,b}"));
}

TEST(SpectralApply, CompletenessOrthogonalityAndCounts) {
    const std::vector<Attribute> fs{ordinal(), chi("{b,c}"), chi("{a,b}"), Attribute::parse(presets::u3(), "a=1,b=1,c=0")};
    for (const auto &f : fs) {
        for (const auto &s : oracle::all_subsets(presets::u3())) {
            SubsetKet sum = SubsetKet::empty(presets::u3());
            std::size_t total = 0;
            for (const auto &[r, part] : spectral_apply(f, s)) {
                sum = sum + part;
                total += part.size();
            }
            EXPECT_EQ(sum, s);
            EXPECT_EQ(total, s.size());
            const auto spectrum = f.spectrum();
            for (const auto &r : spectrum) {
                for (const auto &q : spectrum) {
                    if (r != q) EXPECT_TRUE((project(f, r, s) & project(f, q, s)).is_empty());
                }
            }
            if (!s.is_empty()) {
                Rational p(0);
                for (const auto &e : measure_probs(f, s)) p += e.probability.value();
                EXPECT_EQ(p, R(1));
            }
        }
    }
}
