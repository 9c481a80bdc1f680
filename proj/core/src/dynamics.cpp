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

#include "qmsets/dynamics.hpp"

#include "qmsets/error.hpp"

namespace qmsets {

namespace {

void check_dimension(const Dynamics &d, std::size_t n) {
    if (d.dimension() != n) {
        throw Error(ErrorKind::DimMismatch,
                    "dynamics of dimension " + std::to_string(d.dimension()) + " applied to dimension " + std::to_string(n));
    }
}

void check_nonzero(const SlitConfig &cfg) {
    if (cfg.slit_state.is_empty()) throw Error(ErrorKind::ZeroState, "slit state is the zero ket");
}

}  // namespace

Dynamics::Dynamics(GF2Matrix matrix) : matrix_(std::move(matrix)) {
    if (!is_nonsingular(matrix_)) throw Error(ErrorKind::Singular, "dynamics matrix is singular");
}

SubsetKet evolve(const Dynamics &d, const SubsetKet &s) {
    check_dimension(d, s.universe().size());
    return SubsetKet(s.universe(), mat_apply(d.matrix(), s.bits()));
}

BasisFrame evolved_frame(const Dynamics &d, const BasisFrame &frame, std::optional<std::string> name,
                         std::optional<Universe> labels) {
    check_dimension(d, frame.dimension());
    if (!labels) {
        std::vector<std::string> prefixed;
        for (const auto &l : frame.universe().labels()) prefixed.push_back("A" + l);
        labels = Universe(std::move(prefixed));
    }
    return BasisFrame(name.value_or("A" + frame.name()), frame.canonical(), *labels,
                      mat_mul(d.matrix(), frame.matrix()));
}

Interference interference_coefficients(const SubsetKet &s, const BasisFrame &via, const BasisFrame &target) {
    if (via.dimension() != target.dimension()) throw Error(ErrorKind::DimMismatch, "frames differ in dimension");
    require_same_universe(via.canonical(), target.canonical());
    const SubsetKet coords = to_basis(s, via);
    Interference out{{}, SubsetKet::empty(target.universe())};
    for (std::size_t j : coords.indices()) {
        SubsetKet row = to_basis(via.basis_ket(j), target);
        out.coefficients = out.coefficients + row;
        out.components.push_back({via.universe().label(j), std::move(row)});
    }
    return out;
}

Distribution double_slit(const SlitConfig &cfg, bool measure_at_slits) {
    check_nonzero(cfg);
    const SubsetKet state = from_basis(to_basis(cfg.slit_state, cfg.position_frame), cfg.position_frame);
    if (!measure_at_slits) return born(evolve(cfg.dynamics, state), cfg.position_frame);

    const SubsetKet coords = to_basis(state, cfg.position_frame);
    const Probability slit_weight(1, static_cast<std::int64_t>(coords.size()));
    Distribution total;
    for (const auto &l : cfg.position_frame.universe().labels()) total.entries.push_back({l, Probability::zero()});
    for (std::size_t j : coords.indices()) {
        const Distribution wall = born(evolve(cfg.dynamics, cfg.position_frame.basis_ket(j)), cfg.position_frame);
        for (std::size_t k = 0; k < total.entries.size(); ++k) {
            total.entries[k].probability = total.entries[k].probability + slit_weight * wall.entries[k].probability;
        }
    }
    return total;
}

std::vector<std::size_t> double_slit_sample(const SlitConfig &cfg, bool measure_at_slits, std::size_t trials, Rng &rng) {
    check_nonzero(cfg);
    std::vector<std::size_t> hits(cfg.position_frame.dimension(), 0);
    const SubsetKet coords = to_basis(cfg.slit_state, cfg.position_frame);
    const std::vector<std::size_t> slits = coords.indices();
    const std::vector<std::size_t> superposed =
        to_basis(evolve(cfg.dynamics, from_basis(coords, cfg.position_frame)), cfg.position_frame).indices();
    for (std::size_t t = 0; t < trials; ++t) {
        if (measure_at_slits) {
            const std::size_t slit = slits[draw_index(rng, slits.size())];
            const auto landing =
                to_basis(evolve(cfg.dynamics, cfg.position_frame.basis_ket(slit)), cfg.position_frame).indices();
            ++hits[landing[draw_index(rng, landing.size())]];
        } else {
            ++hits[superposed[draw_index(rng, superposed.size())]];
        }
    }
    return hits;
}

}  // namespace qmsets
