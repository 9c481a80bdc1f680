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

#include "qmsets/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "qmsets/error.hpp"

namespace qmsets {

Partition::Partition(Universe u, std::vector<SubsetKet> blocks) : universe_(std::move(u)) {
    const std::size_t n = universe_.size();
    BitVec covered(n);
    for (const auto &b : blocks) {
        require_same_universe(universe_, b.universe());
        if (b.is_empty()) throw Error(ErrorKind::InvalidArgument, "partition block is empty");
        if (!(covered & b.bits()).is_zero()) throw Error(ErrorKind::InvalidArgument, "partition blocks overlap");
        covered ^= b.bits();
    }
    if (covered.popcount() != n) throw Error(ErrorKind::InvalidArgument, "partition blocks do not cover the universe");
    std::sort(blocks.begin(), blocks.end(),
              [](const SubsetKet &a, const SubsetKet &b) { return a.bits().first_one() < b.bits().first_one(); });
    block_id_.assign(n, 0);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        for (std::size_t i : blocks[k].indices()) block_id_[i] = k;
    }
    blocks_ = std::move(blocks);
}

Partition Partition::discrete(const Universe &u) {
    std::vector<SubsetKet> blocks;
    for (std::size_t i = 0; i < u.size(); ++i) blocks.push_back(SubsetKet::singleton(u, i));
    return Partition(u, std::move(blocks));
}

Partition Partition::indiscrete(const Universe &u) { return Partition(u, {SubsetKet::full(u)}); }

Partition Partition::from_block_ids(const Universe &u, const std::vector<std::size_t> &block_ids) {
    if (block_ids.size() != u.size()) throw Error(ErrorKind::LengthMismatch, "one block id per element required");
    std::map<std::size_t, BitVec> by_id;
    for (std::size_t i = 0; i < block_ids.size(); ++i) {
        auto [it, inserted] = by_id.try_emplace(block_ids[i], u.size());
        it->second.set(i, true);
    }
    std::vector<SubsetKet> blocks;
    for (auto &[id, bits] : by_id) blocks.emplace_back(u, std::move(bits));
    return Partition(u, std::move(blocks));
}

namespace {

std::vector<std::string_view> split_blocks(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t bar = text.find('|', start);
        parts.push_back(text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return parts;
}

}  // namespace

Partition Partition::parse(const Universe &u, std::string_view text) {
    std::vector<SubsetKet> blocks;
    for (auto part : split_blocks(text)) blocks.push_back(SubsetKet::parse(u, part));
    return Partition(u, std::move(blocks));
}

Partition Partition::parse(std::string_view text) {
    std::vector<std::string> labels;
    for (auto part : split_blocks(text)) {
        std::string cleaned;
        for (char c : part) {
            if (c != '{' && c != '}') cleaned += c;
        }
        std::size_t start = 0;
        while (start <= cleaned.size()) {
            std::size_t comma = cleaned.find(',', start);
            std::string item = cleaned.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
            if (!item.empty() && std::find(labels.begin(), labels.end(), item) == labels.end()) labels.push_back(item);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return parse(Universe(labels), text);
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k > 0) s += '|';
        s += blocks_[k].to_string();
    }
    return s;
}

DitSet::DitSet(Universe u, std::vector<std::pair<std::size_t, std::size_t>> pairs)
    : universe_(std::move(u)), pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool DitSet::contains(std::size_t i, std::size_t j) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(i, j));
}

bool DitSet::is_subset_of(const DitSet &other) const {
    return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

bool DitSet::is_symmetric() const {
    return std::all_of(pairs_.begin(), pairs_.end(), [&](const auto &p) { return contains(p.second, p.first); });
}

bool DitSet::meets_diagonal() const {
    return std::any_of(pairs_.begin(), pairs_.end(), [](const auto &p) { return p.first == p.second; });
}

std::vector<std::pair<std::string, std::string>> DitSet::labeled() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [i, j] : pairs_) out.emplace_back(universe_.label(i), universe_.label(j));
    return out;
}

Partition join(const Partition &p, const Partition &q) {
    require_same_universe(p.universe(), q.universe());
    std::vector<SubsetKet> blocks;
    for (const auto &b : p.blocks()) {
        for (const auto &c : q.blocks()) {
            SubsetKet meet = b & c;
            if (!meet.is_empty()) blocks.push_back(std::move(meet));
        }
    }
    return Partition(p.universe(), std::move(blocks));
}

bool refines(const Partition &q, const Partition &p) {
    require_same_universe(q.universe(), p.universe());
    return std::all_of(p.blocks().begin(), p.blocks().end(), [&](const SubsetKet &block) {
        std::size_t owner = q.block_of(block.bits().first_one());
        return (block & q.blocks()[owner]) == block;
    });
}

DitSet dit_set(const Partition &p) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t n = p.universe().size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!p.same_block(i, j)) pairs.emplace_back(i, j);
        }
    }
    return DitSet(p.universe(), std::move(pairs));
}

Probability logical_entropy(const Partition &p) {
    const auto n = static_cast<std::int64_t>(p.universe().size());
    std::int64_t indits = 0;
    for (const auto &b : p.blocks()) {
        const auto size = static_cast<std::int64_t>(b.size());
        indits += size * size;
    }
    return Probability(n * n - indits, n * n);
}

double shannon_entropy(const Partition &p) {
    const double n = static_cast<double>(p.universe().size());
    double h = 0.0;
    for (const auto &b : p.blocks()) {
        const double pb = static_cast<double>(b.size()) / n;
        h -= pb * std::log2(pb);
    }
    return h == 0.0 ? 0.0 : h;
}

BlockEntropies block_entropy_relation(const Probability &p_block) {
    if (p_block.is_zero()) throw Error(ErrorKind::OutOfRange, "block probability must be positive");
    const double p = static_cast<double>(p_block.numerator()) / static_cast<double>(p_block.denominator());
    const double shannon = -std::log2(p);
    return {p_block.complement(), shannon == 0.0 ? 0.0 : shannon};
}

std::vector<Partition> enumerate_partitions(const Universe &u) {
    const std::size_t n = u.size();
    std::vector<Partition> out;
    // Restricted growth string: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<std::size_t> a(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    while (true) {
        out.push_back(Partition::from_block_ids(u, a));
        std::size_t i = n;
        bool found = false;
        while (i-- > 1) {
            if (a[i] <= prefix_max[i - 1]) {
                found = true;
                break;
            }
        }
        if (!found) break;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    return out;
}

}  // namespace qmsets
