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

#include "qmsets/setspace.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "qmsets/error.hpp"

namespace qmsets {

struct Universe::Impl {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
};

namespace {

const std::vector<std::string> &no_labels() {
    static const std::vector<std::string> empty;
    return empty;
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

Universe::Universe(std::vector<std::string> labels) {
    if (labels.empty()) throw Error(ErrorKind::InvalidArgument, "universe needs at least one element");
    auto impl = std::make_shared<Impl>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) throw Error(ErrorKind::InvalidArgument, "empty label");
        if (!impl->index.emplace(labels[i], i).second) {
            throw Error(ErrorKind::InvalidArgument, "duplicate label '" + labels[i] + "'");
        }
    }
    impl->labels = std::move(labels);
    impl_ = std::move(impl);
}

Universe::Universe(std::initializer_list<std::string_view> labels)
    : Universe(std::vector<std::string>(labels.begin(), labels.end())) {}

std::size_t Universe::size() const noexcept { return impl_ ? impl_->labels.size() : 0; }

const std::vector<std::string> &Universe::labels() const { return impl_ ? impl_->labels : no_labels(); }

std::optional<std::size_t> Universe::find(std::string_view label) const {
    if (!impl_) return std::nullopt;
    auto it = impl_->index.find(std::string(label));
    if (it == impl_->index.end()) return std::nullopt;
    return it->second;
}

std::size_t Universe::index_of(std::string_view label) const {
    auto i = find(label);
    if (!i) throw Error(ErrorKind::InvalidArgument, "unknown label '" + std::string(label) + "'");
    return *i;
}

bool operator==(const Universe &a, const Universe &b) {
    return a.impl_ == b.impl_ || a.labels() == b.labels();
}

void require_same_universe(const Universe &a, const Universe &b) {
    if (!(a == b)) throw Error(ErrorKind::UniverseMismatch, "operands live in different universes");
}

SubsetKet::SubsetKet(Universe universe, BitVec bits) : universe_(std::move(universe)), bits_(std::move(bits)) {
    if (bits_.size() != universe_.size()) {
        throw Error(ErrorKind::LengthMismatch, "ket of length " + std::to_string(bits_.size()) +
                                                   " over a universe of size " + std::to_string(universe_.size()));
    }
}

SubsetKet SubsetKet::full(const Universe &u) {
    BitVec bits(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) bits.set(i, true);
    return SubsetKet(u, std::move(bits));
}

SubsetKet SubsetKet::singleton(const Universe &u, std::size_t index) {
    return SubsetKet(u, BitVec::unit(u.size(), index));
}

SubsetKet SubsetKet::of(const Universe &u, const std::vector<std::string> &labels) {
    BitVec bits(u.size());
    for (const auto &l : labels) bits.set(u.index_of(l), true);
    return SubsetKet(u, std::move(bits));
}

SubsetKet SubsetKet::parse(const Universe &u, std::string_view text) {
    std::string body = trim(text);
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') throw Error(ErrorKind::InvalidArgument, "unbalanced braces in '" + body + "'");
        body = trim(std::string_view(body).substr(1, body.size() - 2));
    }
    std::vector<std::string> labels;
    std::size_t start = 0;
    while (!body.empty() && start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string item = trim(std::string_view(body).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (item.empty()) throw Error(ErrorKind::InvalidArgument, "empty element in '" + std::string(text) + "'");
        labels.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return of(u, labels);
}

std::vector<std::string> SubsetKet::labels() const {
    std::vector<std::string> out;
    for (std::size_t i : bits_.ones()) out.push_back(universe_.label(i));
    return out;
}

std::string SubsetKet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto &l : labels()) {
        if (!first) s += ',';
        s += l;
        first = false;
    }
    return s + "}";
}

SubsetKet operator+(const SubsetKet &a, const SubsetKet &b) {
    require_same_universe(a.universe_, b.universe_);
    return SubsetKet(a.universe_, a.bits_ ^ b.bits_);
}

SubsetKet operator&(const SubsetKet &a, const SubsetKet &b) {
    require_same_universe(a.universe_, b.universe_);
    return SubsetKet(a.universe_, a.bits_ & b.bits_);
}

BasisFrame::BasisFrame(std::string name, Universe canonical, Universe labels, GF2Matrix columns)
    : name_(std::move(name)), canonical_(std::move(canonical)), universe_(std::move(labels)), matrix_(std::move(columns)) {
    const std::size_t n = canonical_.size();
    if (universe_.size() != n || matrix_.rows() != n || matrix_.cols() != n) {
        throw Error(ErrorKind::DimMismatch, "frame '" + name_ + "' has inconsistent dimensions");
    }
    if (!is_nonsingular(matrix_)) throw Error(ErrorKind::Singular, "frame '" + name_ + "' is not a basis");
}

BasisFrame BasisFrame::canonical(const Universe &u, std::string name) {
    return BasisFrame(std::move(name), u, u, GF2Matrix::identity(u.size()));
}

BasisFrame BasisFrame::from_kets(std::string name, Universe labels, const std::vector<SubsetKet> &basis) {
    if (basis.empty()) throw Error(ErrorKind::InvalidArgument, "frame needs at least one basis ket");
    const Universe &canonical = basis.front().universe();
    std::vector<BitVec> columns;
    columns.reserve(basis.size());
    for (const auto &k : basis) {
        require_same_universe(canonical, k.universe());
        columns.push_back(k.bits());
    }
    return BasisFrame(std::move(name), canonical, std::move(labels), GF2Matrix::from_columns(columns));
}

SubsetKet BasisFrame::basis_ket(std::size_t j) const { return SubsetKet(canonical_, matrix_.column(j)); }

Probability Distribution::at(std::string_view label) const {
    for (const auto &e : entries) {
        if (e.label == label) return e.probability;
    }
    throw Error(ErrorKind::InvalidArgument, "no outcome labelled '" + std::string(label) + "'");
}

Rational Distribution::total() const {
    Rational sum(0);
    for (const auto &e : entries) sum += e.probability.value();
    return sum;
}

std::size_t bracket(const SubsetKet &t, const SubsetKet &s) { return (t & s).size(); }

std::size_t bracket_in(const BasisFrame &frame, const SubsetKet &t, const SubsetKet &s) {
    return bracket(to_basis(t, frame), to_basis(s, frame));
}

std::size_t norm_sq(const SubsetKet &s) { return s.size(); }

SubsetKet to_basis(const SubsetKet &s, const BasisFrame &frame) {
    if (s.universe() == frame.universe()) return s;
    if (s.universe().size() != frame.dimension()) {
        throw Error(ErrorKind::DimMismatch, "ket of dimension " + std::to_string(s.universe().size()) + " in frame '" +
                                                frame.name() + "' of dimension " + std::to_string(frame.dimension()));
    }
    require_same_universe(s.universe(), frame.canonical());
    return SubsetKet(frame.universe(), solve(frame.matrix(), s.bits()));
}

SubsetKet from_basis(const SubsetKet &coords, const BasisFrame &frame) {
    require_same_universe(coords.universe(), frame.universe());
    return SubsetKet(frame.canonical(), mat_apply(frame.matrix(), coords.bits()));
}

Distribution born(const SubsetKet &s, const BasisFrame &frame) {
    SubsetKet coords = to_basis(s, frame);
    const std::size_t norm = norm_sq(coords);
    if (norm == 0) throw Error(ErrorKind::ZeroState, "Born rule is undefined on the zero ket");
    Distribution d;
    const Universe &u = frame.universe();
    for (std::size_t i = 0; i < u.size(); ++i) {
        // <{u}|S> is 0 or 1, so its square is itself.
        std::size_t amp = bracket(SubsetKet::singleton(u, i), coords);
        d.entries.push_back({u.label(i), Probability(static_cast<std::int64_t>(amp * amp),
                                                     static_cast<std::int64_t>(norm))});
    }
    return d;
}

std::vector<SubsetKet> resolve(const SubsetKet &s) {
    std::vector<SubsetKet> out;
    for (std::size_t i : s.indices()) out.push_back(SubsetKet::singleton(s.universe(), i));
    return out;
}

bool canonical_ket_order(const SubsetKet &a, const SubsetKet &b) {
    if (a.size() != b.size()) return a.size() > b.size();
    auto ia = a.indices();
    auto ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

KetTable ket_table(const std::vector<BasisFrame> &frames, const std::vector<SubsetKet> &rows) {
    if (frames.empty()) throw Error(ErrorKind::InvalidArgument, "ket table needs at least one frame");
    const Universe &canonical = frames.front().canonical();
    for (const auto &f : frames) {
        if (f.dimension() != canonical.size()) throw Error(ErrorKind::DimMismatch, "frame '" + f.name() + "' has another dimension");
        require_same_universe(canonical, f.canonical());
    }
    KetTable table;
    for (const auto &f : frames) table.frame_names.push_back(f.name());
    for (const auto &ket : rows) {
        require_same_universe(canonical, ket.universe());
        std::vector<SubsetKet> row;
        row.reserve(frames.size());
        for (const auto &f : frames) row.push_back(to_basis(ket, f));
        table.rows.push_back(std::move(row));
    }
    return table;
}

KetTable ket_table(std::size_t dim, const std::vector<BasisFrame> &frames) {
    for (const auto &f : frames) {
        if (f.dimension() != dim) {
            throw Error(ErrorKind::DimMismatch, "frame '" + f.name() + "' has dimension " + std::to_string(f.dimension()) +
                                                    ", expected " + std::to_string(dim));
        }
    }
    if (frames.empty()) throw Error(ErrorKind::InvalidArgument, "ket table needs at least one frame");
    if (dim >= 20) throw Error(ErrorKind::OutOfRange, "ket table of dimension " + std::to_string(dim) + " is too large");
    const Universe &canonical = frames.front().canonical();
    std::vector<SubsetKet> kets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
        kets.emplace_back(canonical, BitVec::from_integer(dim, mask));
    }
    std::sort(kets.begin(), kets.end(), canonical_ket_order);
    return ket_table(frames, kets);
}

std::string to_text(const KetTable &table) {
    std::vector<std::size_t> width(table.frame_names.size(), 0);
    for (std::size_t k = 0; k < width.size(); ++k) {
        width[k] = table.frame_names[k].size();
        for (const auto &row : table.rows) width[k] = std::max(width[k], row[k].to_string().size());
    }
    auto line = [&](const std::vector<std::string> &cells) {
        std::string s;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k > 0) s += " | ";
            s += cells[k];
            if (k + 1 < cells.size()) s += std::string(width[k] - cells[k].size(), ' ');
        }
        return s + "\n";
    };
    std::string out = line(table.frame_names);
    std::vector<std::string> rule;
    for (std::size_t w : width) rule.emplace_back(w, '-');
    std::string sep;
    for (std::size_t k = 0; k < rule.size(); ++k) {
        if (k > 0) sep += "-+-";
        sep += rule[k];
    }
    out += sep + "\n";
    for (const auto &row : table.rows) {
        std::vector<std::string> cells;
        for (const auto &ket : row) cells.push_back(ket.to_string());
        out += line(cells);
    }
    return out;
}

}  // namespace qmsets
