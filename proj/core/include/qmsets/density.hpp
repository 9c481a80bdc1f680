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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qmsets/attributes.hpp"
#include "qmsets/partitions.hpp"
#include "qmsets/rational.hpp"
#include "qmsets/setspace.hpp"

namespace qmsets {

/// Real symmetric |U|×|U| matrix with exact rational entries and unit trace,
/// indexed by universe elements in universe order.
class DensityMatrix {
  public:
    /// Row-major entries. Throws Error(ShapeMismatch) for the wrong entry count
    /// and Error(InvalidArgument) unless symmetric with trace 1.
    DensityMatrix(Universe u, std::vector<Rational> entries);

    const Universe &universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return universe_.size(); }
    const Rational &at(std::size_t j, std::size_t k) const { return entries_.at(j * size() + k); }
    const std::vector<Rational> &entries() const noexcept { return entries_; }
    Rational trace() const;

    /// Rows of display-form rationals, columns aligned.
    std::string to_text() const;

    friend bool operator==(const DensityMatrix &a, const DensityMatrix &b) = default;

  private:
    Universe universe_;
    std::vector<Rational> entries_;
};

/// ρ(π) = Σ_B p_B ρ(B): entry 1/|U| on indits of π, 0 on dits.
DensityMatrix rho_of_partition(const Partition &p);
/// ρ(S): entry 1/|S| when both elements lie in S. Throws Error(ZeroState).
DensityMatrix rho_of_subset(const SubsetKet &s);
/// tr[ρ²].
Probability purity(const DensityMatrix &rho);
/// h(ρ) = 1 - tr[ρ²].
Probability logical_entropy_rho(const DensityMatrix &rho);
/// tr[fρ] with f as a diagonal matrix. Throws Error(UniverseMismatch).
Rational expectation(const Attribute &f, const DensityMatrix &rho);
/// Σ_r P_r ρ P_r over the level-set projectors of f. Throws Error(UniverseMismatch).
DensityMatrix measure_density(const Attribute &f, const DensityMatrix &rho);
/// Σ of squared entries zeroed between `before` and `after`.
/// Throws Error(ShapeMismatch) for different shapes, and Error(InvalidArgument)
/// if some entry changed other than by being zeroed.
Probability entropy_increase(const DensityMatrix &before, const DensityMatrix &after);

}  // namespace qmsets
