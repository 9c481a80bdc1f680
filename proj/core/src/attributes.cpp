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

#include "qmsets/attributes.hpp"

#include <algorithm>
#include <set>

#include "qmsets/error.hpp"

namespace qmsets {

Attribute::Attribute(Universe u, std::vector<Rational> values) : universe_(std::move(u)), values_(std::move(values)) {
    if (values_.size() != universe_.size()) {
        throw Error(ErrorKind::LengthMismatch, "attribute needs one value per universe element");
    }
}

Attribute Attribute::from_map(const Universe &u, const std::vector<std::pair<std::string, Rational>> &values) {
    std::vector<Rational> dense(u.size());
    std::vector<bool> seen(u.size(), false);
    for (const auto &[label, value] : values) {
        std::size_t i = u.index_of(label);
        if (seen[i]) throw Error(ErrorKind::InvalidArgument, "label '" + label + "' given twice");
        seen[i] = true;
        dense[i] = value;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!seen[i]) throw Error(ErrorKind::InvalidArgument, "attribute has no value for '" + u.label(i) + "'");
    }
    return Attribute(u, std::move(dense));
}

Attribute Attribute::characteristic(const SubsetKet &s) {
    std::vector<Rational> values(s.universe().size(), Rational(0));
    for (std::size_t i : s.indices()) values[i] = 1;
    return Attribute(s.universe(), std::move(values));
}

Attribute Attribute::constant(const Universe &u, const Rational &c) {
    return Attribute(u, std::vector<Rational>(u.size(), c));
}

Attribute Attribute::parse(const Universe &u, std::string_view text) {
    std::vector<std::pair<std::string, Rational>> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::InvalidArgument, "expected label=value, got '" + std::string(item) + "'");
        }
        std::string label;
        for (char c : item.substr(0, eq)) {
            if (c != ' ') label += c;
        }
        std::string value;
        for (char c : item.substr(eq + 1)) {
            if (c != ' ') value += c;
        }
        values.emplace_back(label, parse_rational(value));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return from_map(u, values);
}

std::vector<Rational> Attribute::spectrum() const {
    std::vector<Rational> out = values_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SubsetKet Attribute::level_set(const Rational &r) const {
    BitVec bits(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) bits.set(i, values_[i] == r);
    return SubsetKet(universe_, std::move(bits));
}

Partition inverse_image_partition(const Attribute &f) {
    std::vector<SubsetKet> blocks;
    for (const auto &r : f.spectrum()) blocks.push_back(f.level_set(r));
    return Partition(f.universe(), std::move(blocks));
}

SubsetKet project(const Attribute &f, const Rational &r, const SubsetKet &s) {
    require_same_universe(f.universe(), s.universe());
    return f.level_set(r) & s;
}

std::vector<EigenvalueProbability> measure_probs(const Attribute &f, const SubsetKet &s) {
    require_same_universe(f.universe(), s.universe());
    const auto total = static_cast<std::int64_t>(s.size());
    if (total == 0) throw Error(ErrorKind::ZeroState, "cannot measure the zero ket");
    std::vector<EigenvalueProbability> out;
    for (const auto &r : f.spectrum()) {
        const auto hits = static_cast<std::int64_t>(project(f, r, s).size());
        if (hits > 0) out.push_back({r, Probability(hits, total)});
    }
    return out;
}

MeasurementOutcome measure_given(const Attribute &f, const SubsetKet &s, const Rational &r) {
    require_same_universe(f.universe(), s.universe());
    if (s.is_empty()) throw Error(ErrorKind::ZeroState, "cannot measure the zero ket");
    SubsetKet post = project(f, r, s);
    if (post.is_empty()) {
        throw Error(ErrorKind::ImpossibleOutcome, "eigenvalue " + to_display(r) + " has probability 0 in " + s.to_string());
    }
    return {r, Probability(static_cast<std::int64_t>(post.size()), static_cast<std::int64_t>(s.size())), post};
}

MeasurementOutcome measure(const Attribute &f, const SubsetKet &s, Rng &rng) {
    require_same_universe(f.universe(), s.universe());
    if (s.is_empty()) throw Error(ErrorKind::ZeroState, "cannot measure the zero ket");
    auto members = s.indices();
    std::size_t pick = members[draw_index(rng, members.size())];
    return measure_given(f, s, f.value(pick));
}

bool is_compatible(const Attribute &f, const Attribute &g) { return f.universe() == g.universe(); }

namespace {

void require_pairwise_compatible(std::span<const Attribute> fs) {
    for (std::size_t k = 1; k < fs.size(); ++k) {
        if (!is_compatible(fs[0], fs[k])) {
            throw Error(ErrorKind::IncompatibleAttributes, "attributes are defined on different universes");
        }
    }
}

}  // namespace

bool is_complete(std::span<const Attribute> fs) {
    if (fs.empty()) return false;
    require_pairwise_compatible(fs);
    Partition acc = Partition::indiscrete(fs[0].universe());
    for (const auto &f : fs) acc = join(acc, inverse_image_partition(f));
    return acc.is_discrete();
}

std::vector<std::pair<std::string, std::vector<Rational>>> eigenkets(std::span<const Attribute> fs) {
    if (!is_complete(fs)) throw Error(ErrorKind::NotComplete, "attributes do not separate every element");
    const Universe &u = fs[0].universe();
    std::vector<std::pair<std::string, std::vector<Rational>>> out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::vector<Rational> tuple;
        for (const auto &f : fs) tuple.push_back(f.value(i));
        out.emplace_back(u.label(i), std::move(tuple));
    }
    return out;
}

std::vector<std::pair<Rational, SubsetKet>> spectral_apply(const Attribute &f, const SubsetKet &s) {
    require_same_universe(f.universe(), s.universe());
    std::vector<std::pair<Rational, SubsetKet>> out;
    for (const auto &r : f.spectrum()) {
        SubsetKet part = project(f, r, s);
        if (!part.is_empty()) out.emplace_back(r, std::move(part));
    }
    return out;
}

}  // namespace qmsets
