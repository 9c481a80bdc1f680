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

#include "qmsets/density.hpp"

#include <algorithm>

#include "qmsets/error.hpp"

namespace qmsets {

namespace {

using Square = std::vector<Rational>;

Square multiply(const Square &a, const Square &b, std::size_t n) {
    Square out(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i * n + k] == Rational(0)) continue;
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
        }
    }
    return out;
}

Square diagonal_projector(const SubsetKet &level_set) {
    const std::size_t n = level_set.universe().size();
    Square p(n * n, Rational(0));
    for (std::size_t i : level_set.indices()) p[i * n + i] = 1;
    return p;
}

}  // namespace

DensityMatrix::DensityMatrix(Universe u, std::vector<Rational> entries)
    : universe_(std::move(u)), entries_(std::move(entries)) {
    const std::size_t n = universe_.size();
    if (entries_.size() != n * n) {
        throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(n * n) + " entries, got " +
                                                  std::to_string(entries_.size()));
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            if (entries_[j * n + k] != entries_[k * n + j]) throw Error(ErrorKind::InvalidArgument, "density matrix is not symmetric");
        }
    }
    if (trace() != Rational(1)) throw Error(ErrorKind::InvalidArgument, "density matrix trace is " + to_wire(trace()));
}

Rational DensityMatrix::trace() const {
    Rational t(0);
    for (std::size_t j = 0; j < size(); ++j) t += at(j, j);
    return t;
}

std::string DensityMatrix::to_text() const {
    const std::size_t n = size();
    std::size_t width = 1;
    for (const auto &e : entries_) width = std::max(width, to_display(e).size());
    std::string out;
    for (std::size_t j = 0; j < n; ++j) {
        out += "[";
        for (std::size_t k = 0; k < n; ++k) {
            std::string cell = to_display(at(j, k));
            out += std::string(width - cell.size(), ' ') + cell;
            if (k + 1 < n) out += ' ';
        }
        out += "]\n";
    }
    return out;
}

DensityMatrix rho_of_partition(const Partition &p) {
    const std::size_t n = p.universe().size();
    const Rational point(1, static_cast<std::int64_t>(n));
    std::vector<Rational> entries(n * n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (p.same_block(j, k)) entries[j * n + k] = point;
        }
    }
    return DensityMatrix(p.universe(), std::move(entries));
}

DensityMatrix rho_of_subset(const SubsetKet &s) {
    if (s.is_empty()) throw Error(ErrorKind::ZeroState, "no density matrix for the zero ket");
    const std::size_t n = s.universe().size();
    const Rational weight(1, static_cast<std::int64_t>(s.size()));
    std::vector<Rational> entries(n * n, Rational(0));
    for (std::size_t j : s.indices()) {
        for (std::size_t k : s.indices()) entries[j * n + k] = weight;
    }
    return DensityMatrix(s.universe(), std::move(entries));
}

Probability purity(const DensityMatrix &rho) {
    const std::size_t n = rho.size();
    Square sq = multiply(rho.entries(), rho.entries(), n);
    Rational t(0);
    for (std::size_t j = 0; j < n; ++j) t += sq[j * n + j];
    return Probability(t);
}

Probability logical_entropy_rho(const DensityMatrix &rho) { return purity(rho).complement(); }

Rational expectation(const Attribute &f, const DensityMatrix &rho) {
    require_same_universe(f.universe(), rho.universe());
    Rational t(0);
    for (std::size_t j = 0; j < rho.size(); ++j) t += f.value(j) * rho.at(j, j);
    return t;
}

DensityMatrix measure_density(const Attribute &f, const DensityMatrix &rho) {
    require_same_universe(f.universe(), rho.universe());
    const std::size_t n = rho.size();
    Square sum(n * n, Rational(0));
    for (const auto &r : f.spectrum()) {
        Square proj = diagonal_projector(f.level_set(r));
        Square term = multiply(multiply(proj, rho.entries(), n), proj, n);
        for (std::size_t i = 0; i < n * n; ++i) sum[i] += term[i];
    }
    return DensityMatrix(rho.universe(), std::move(sum));
}

Probability entropy_increase(const DensityMatrix &before, const DensityMatrix &after) {
    if (before.size() != after.size()) throw Error(ErrorKind::ShapeMismatch, "density matrices differ in size");
    Rational zeroed(0);
    for (std::size_t i = 0; i < before.entries().size(); ++i) {
        const Rational &b = before.entries()[i];
        const Rational &a = after.entries()[i];
        if (a == b) continue;
        if (a != Rational(0)) throw Error(ErrorKind::InvalidArgument, "entry changed without being decohered");
        zeroed += b * b;
    }
    return Probability(zeroed);
}

}  // namespace qmsets
