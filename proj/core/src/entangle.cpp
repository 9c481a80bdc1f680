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

#include "qmsets/entangle.hpp"

#include <algorithm>
#include <cctype>

#include "qmsets/error.hpp"

namespace qmsets {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::size_t count_left(const ProductState &s, std::size_t i) {
    std::size_t n = 0;
    for (const auto &[l, r] : s.pairs()) n += (l == i);
    return n;
}

std::size_t count_right(const ProductState &s, std::size_t j) {
    std::size_t n = 0;
    for (const auto &[l, r] : s.pairs()) n += (r == j);
    return n;
}

Distribution left_distribution(const ProductState &s, const BasisFrame &frame) {
    const ProductState coords = product_to_frame(s, frame, frame);
    Distribution d;
    const auto total = static_cast<std::int64_t>(coords.size());
    for (std::size_t i = 0; i < frame.dimension(); ++i) {
        d.entries.push_back({frame.universe().label(i), Probability(static_cast<std::int64_t>(count_left(coords, i)), total)});
    }
    return d;
}

}  // namespace

ProductUniverse::ProductUniverse(Universe left, Universe right) : left_(std::move(left)), right_(std::move(right)) {}

std::string ProductUniverse::pair_label(std::size_t k) const {
    return "(" + left_.label(left_index(k)) + "," + right_.label(right_index(k)) + ")";
}

ProductState::ProductState(ProductUniverse pu, BitVec bits) : universe_(std::move(pu)), bits_(std::move(bits)) {
    if (bits_.size() != universe_.size()) throw Error(ErrorKind::LengthMismatch, "bit vector does not match X×Y");
    if (bits_.is_zero()) throw Error(ErrorKind::ZeroState, "product state must be nonempty");
}

ProductState ProductState::of(const ProductUniverse &pu, const std::vector<std::pair<std::string, std::string>> &pairs) {
    BitVec bits(pu.size());
    for (const auto &[x, y] : pairs) bits.set(pu.index(pu.left().index_of(x), pu.right().index_of(y)), true);
    return ProductState(pu, std::move(bits));
}

ProductState ProductState::parse(const ProductUniverse &pu, std::string_view text) {
    std::string body = trim(text);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
        throw Error(ErrorKind::InvalidArgument, "product state must be written {(x,y),...}");
    }
    body = body.substr(1, body.size() - 2);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::size_t pos = 0;
    while (true) {
        const std::size_t open = body.find('(', pos);
        if (open == std::string::npos) break;
        const std::size_t close = body.find(')', open);
        const std::size_t comma = body.find(',', open);
        if (close == std::string::npos || comma == std::string::npos || comma > close) {
            throw Error(ErrorKind::InvalidArgument, "malformed pair in '" + std::string(text) + "'");
        }
        pairs.emplace_back(trim(std::string_view(body).substr(open + 1, comma - open - 1)),
                           trim(std::string_view(body).substr(comma + 1, close - comma - 1)));
        pos = close + 1;
    }
    return of(pu, pairs);
}

ProductState ProductState::product(const SubsetKet &x, const SubsetKet &y) {
    ProductUniverse pu(x.universe(), y.universe());
    BitVec bits(pu.size());
    for (std::size_t i : x.indices()) {
        for (std::size_t j : y.indices()) bits.set(pu.index(i, j), true);
    }
    return ProductState(std::move(pu), std::move(bits));
}

std::vector<std::pair<std::size_t, std::size_t>> ProductState::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t k : bits_.ones()) out.emplace_back(universe_.left_index(k), universe_.right_index(k));
    return out;
}

std::string ProductState::to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t k : bits_.ones()) {
        if (!first) out += ",";
        out += universe_.pair_label(k);
        first = false;
    }
    return out + "}";
}

std::pair<SubsetKet, SubsetKet> supports(const ProductState &s) {
    BitVec left(s.universe().left().size());
    BitVec right(s.universe().right().size());
    for (const auto &[i, j] : s.pairs()) {
        left.set(i, true);
        right.set(j, true);
    }
    return {SubsetKet(s.universe().left(), std::move(left)), SubsetKet(s.universe().right(), std::move(right))};
}

bool is_separated(const ProductState &s) {
    const auto [x, y] = supports(s);
    return ProductState::product(x, y) == s;
}

JointDistribution make_joint(const ProductState &s) {
    std::vector<Probability> prob(s.universe().size(), Probability::zero());
    const Probability each(1, static_cast<std::int64_t>(s.size()));
    for (std::size_t k : s.bits().ones()) prob[k] = each;
    return JointDistribution{s, std::move(prob)};
}

Marginals marginals(const JointDistribution &d) {
    const ProductUniverse &pu = d.support.universe();
    Marginals m;
    for (std::size_t i = 0; i < pu.left().size(); ++i) {
        Rational sum(0);
        for (std::size_t j = 0; j < pu.right().size(); ++j) sum += d.at(i, j).value();
        m.left.entries.push_back({pu.left().label(i), Probability(sum)});
    }
    for (std::size_t j = 0; j < pu.right().size(); ++j) {
        Rational sum(0);
        for (std::size_t i = 0; i < pu.left().size(); ++i) sum += d.at(i, j).value();
        m.right.entries.push_back({pu.right().label(j), Probability(sum)});
    }
    return m;
}

bool is_independent(const JointDistribution &d) {
    const Marginals m = marginals(d);
    const ProductUniverse &pu = d.support.universe();
    for (std::size_t i = 0; i < pu.left().size(); ++i) {
        for (std::size_t j = 0; j < pu.right().size(); ++j) {
            if (d.at(i, j) != m.left.entries[i].probability * m.right.entries[j].probability) return false;
        }
    }
    return true;
}

std::vector<ProductState> all_product_states(const ProductUniverse &pu) {
    const std::size_t n = pu.size();
    if (n >= 63) throw Error(ErrorKind::OutOfRange, "product universe too large to enumerate");
    std::vector<ProductState> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        out.emplace_back(pu, BitVec::from_integer(n, mask));
    }
    return out;
}

Census census(const ProductUniverse &pu) {
    Census c;
    for (auto &s : all_product_states(pu)) (is_separated(s) ? c.separated : c.entangled).push_back(std::move(s));
    return c;
}

ProductState product_to_frame(const ProductState &s, const BasisFrame &left, const BasisFrame &right) {
    const ProductUniverse &pu = s.universe();
    if (pu.left() == left.universe() && pu.right() == right.universe()) return s;
    if (pu.left().size() != left.dimension() || pu.right().size() != right.dimension()) {
        throw Error(ErrorKind::DimMismatch, "frame dimensions do not match the product factors");
    }
    require_same_universe(pu.left(), left.canonical());
    require_same_universe(pu.right(), right.canonical());
    return ProductState(ProductUniverse(left.universe(), right.universe()),
                        solve(kron(left.matrix(), right.matrix()), s.bits()));
}

Probability left_measure_prob(const ProductState &s, const BasisFrame &frame, std::string_view outcome) {
    const ProductState coords = product_to_frame(s, frame, frame);
    const std::size_t i = frame.universe().index_of(outcome);
    return Probability(static_cast<std::int64_t>(count_left(coords, i)), static_cast<std::int64_t>(coords.size()));
}

Probability right_measure_prob(const ProductState &s, const BasisFrame &frame, std::string_view outcome) {
    const ProductState coords = product_to_frame(s, frame, frame);
    const std::size_t j = frame.universe().index_of(outcome);
    return Probability(static_cast<std::int64_t>(count_right(coords, j)), static_cast<std::int64_t>(coords.size()));
}

Probability CounterfactualJoint::at(std::string_view x, std::string_view y, std::string_view z) const {
    for (const auto &t : triples) {
        if (t.x == x && t.y == y && t.z == z) return t.probability;
    }
    throw Error(ErrorKind::InvalidArgument, "no triple (" + std::string(x) + "," + std::string(y) + "," + std::string(z) + ")");
}

CounterfactualJoint counterfactual_joint(const ProductState &s, const BasisFrame &f1, const BasisFrame &f2,
                                         const BasisFrame &f3) {
    for (const BasisFrame *f : {&f1, &f2, &f3}) {
        if (f->dimension() < 2) throw Error(ErrorKind::DimMismatch, "frame '" + f->name() + "' has fewer than 2 labels");
    }
    const Distribution px = left_distribution(s, f1);
    const Distribution py = left_distribution(s, f2);
    const Distribution pz = left_distribution(s, f3);

    CounterfactualJoint cj;
    cj.frame_names = {f1.name(), f2.name(), f3.name()};
    for (const auto &x : px) {
        for (const auto &y : py) {
            for (const auto &z : pz) cj.triples.push_back({x.label, y.label, z.label, x.probability * y.probability * z.probability});
        }
    }

    const std::string &x0 = f1.universe().label(0);
    const std::string &y0 = f2.universe().label(0);
    const std::string &y1 = f2.universe().label(1);
    const std::string &z1 = f3.universe().label(1);
    Rational xy(0);
    Rational yz(0);
    Rational xz(0);
    for (const auto &t : cj.triples) {
        if (t.x == x0 && t.y == y0) xy += t.probability.value();
        if (t.y == y1 && t.z == z1) yz += t.probability.value();
        if (t.x == x0 && t.z == z1) xz += t.probability.value();
    }
    cj.first = Probability(xy);
    cj.second = Probability(yz);
    cj.third = Probability(xz);
    cj.first_label = "(" + x0 + "," + y0 + ")";
    cj.second_label = "(" + y1 + "," + z1 + ")";
    cj.third_label = "(" + x0 + "," + z1 + ")";
    return cj;
}

Probability sequential_pair_prob(const ProductState &s, const BasisFrame &left_frame, std::string_view left_outcome,
                                 const BasisFrame &right_frame, std::string_view right_outcome) {
    const ProductState coords = product_to_frame(s, left_frame, left_frame);
    const std::size_t i = left_frame.universe().index_of(left_outcome);
    BitVec right_support(left_frame.dimension());
    std::size_t matching = 0;
    for (const auto &[l, r] : coords.pairs()) {
        if (l != i) continue;
        ++matching;
        right_support.set(r, true);
    }
    if (matching == 0) {
        throw Error(ErrorKind::ImpossibleOutcome,
                    "left outcome '" + std::string(left_outcome) + "' has probability 0 in frame '" + left_frame.name() + "'");
    }
    const Probability p_left(static_cast<std::int64_t>(matching), static_cast<std::int64_t>(coords.size()));
    const SubsetKet right_state = from_basis(SubsetKet(left_frame.universe(), std::move(right_support)), left_frame);
    return p_left * born(right_state, right_frame).at(right_outcome);
}

std::string BellReport::summary() const {
    std::string out = qmsets::to_display(terms.at(0).probability.value()) + " + " +
                      qmsets::to_display(terms.at(1).probability.value()) + " ≥ " +
                      qmsets::to_display(terms.at(2).probability.value());
    return out + (violated ? " : VIOLATED" : " : HOLDS");
}

BellReport bell_violation(const ProductState &s, const BasisFrame &f1, const BasisFrame &f2, const BasisFrame &f3) {
    for (const BasisFrame *f : {&f1, &f2, &f3}) {
        if (f->dimension() < 2) throw Error(ErrorKind::DimMismatch, "frame '" + f->name() + "' has fewer than 2 labels");
    }
    auto term = [&](const BasisFrame &lf, std::size_t li, const BasisFrame &rf, std::size_t ri) {
        const std::string &lo = lf.universe().label(li);
        const std::string &ro = rf.universe().label(ri);
        Probability p = Probability::zero();
        if (!left_measure_prob(s, lf, lo).is_zero()) p = sequential_pair_prob(s, lf, lo, rf, ro);
        return SequentialTerm{lf.name(), lo, rf.name(), ro, p};
    };
    BellReport r;
    r.terms.push_back(term(f1, 0, f2, 0));
    r.terms.push_back(term(f2, 1, f3, 1));
    r.terms.push_back(term(f1, 0, f3, 1));
    r.lhs = r.terms[0].probability.value() + r.terms[1].probability.value();
    r.rhs = r.terms[2].probability.value();
    r.violated = r.lhs < r.rhs;
    return r;
}

StateOutcomeTable state_outcome_table(const std::vector<SubsetKet> &states, const std::vector<BasisFrame> &frames) {
    StateOutcomeTable t;
    for (const auto &f : frames) {
        for (const auto &l : f.universe().labels()) t.columns.push_back(l);
    }
    for (const auto &s : states) {
        std::vector<Probability> row;
        for (const auto &f : frames) {
            for (const auto &e : born(s, f)) row.push_back(e.probability);
        }
        t.rows.emplace_back(s, std::move(row));
    }
    return t;
}

std::string to_text(const StateOutcomeTable &table) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"state"});
    for (const auto &c : table.columns) cells.back().push_back(c);
    for (const auto &[state, probs] : table.rows) {
        cells.push_back({state.to_string()});
        for (const auto &p : probs) cells.back().push_back(p.to_display());
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto &row : cells) {
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    }
    std::string out;
    for (const auto &row : cells) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) out += "  ";
            out += row[k] + std::string(width[k] - row[k].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += "\n";
    }
    return out;
}

}  // namespace qmsets
