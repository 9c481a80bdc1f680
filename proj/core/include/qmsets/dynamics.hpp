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
#include <optional>
#include <string>
#include <vector>

#include "qmsets/gf2.hpp"
#include "qmsets/random.hpp"
#include "qmsets/setspace.hpp"

namespace qmsets {

/// A nonsingular linear map Z2^n -> Z2^n acting as one time step.
class Dynamics {
  public:
    /// Throws Error(NotSquare) or Error(Singular).
    explicit Dynamics(GF2Matrix matrix);
    static Dynamics identity(std::size_t n) { return Dynamics(GF2Matrix::identity(n)); }

    const GF2Matrix &matrix() const noexcept { return matrix_; }
    std::size_t dimension() const noexcept { return matrix_.rows(); }

  private:
    GF2Matrix matrix_;
};

/// A·S. Throws Error(DimMismatch).
SubsetKet evolve(const Dynamics &d, const SubsetKet &s);

/// Frame whose basis kets are A applied to the basis kets of `frame`.
/// Defaults: name "A" + frame name, labels "A" + each frame label.
/// Throws Error(DimMismatch).
BasisFrame evolved_frame(const Dynamics &d, const BasisFrame &frame, std::optional<std::string> name = std::nullopt,
                         std::optional<Universe> labels = std::nullopt);

/// Expansion of one `via` basis ket in the target frame.
struct ComponentExpansion {
    std::string via_label;
    SubsetKet coefficients;  ///< over the target frame's labels
};

struct Interference {
    std::vector<ComponentExpansion> components;
    SubsetKet coefficients;  ///< sum of the component rows mod 2
};

/// Writes S (a ket over `via`'s labels, or a canonical ket) in `target`
/// coordinates by expanding each `via` component separately and summing mod 2.
/// Throws Error(DimMismatch) or Error(UniverseMismatch).
Interference interference_coefficients(const SubsetKet &s, const BasisFrame &via, const BasisFrame &target);

struct SlitConfig {
    Dynamics dynamics;
    BasisFrame position_frame;
    SubsetKet slit_state;
};

/// Wall distribution over the position frame's labels. With measurement at the
/// slits, the exact mixture over slit eigenstates; without, the superposition
/// is evolved once. Throws Error(ZeroState).
Distribution double_slit(const SlitConfig &cfg, bool measure_at_slits);

/// Hit counts per wall label from `trials` simulated particles.
std::vector<std::size_t> double_slit_sample(const SlitConfig &cfg, bool measure_at_slits, std::size_t trials, Rng &rng);

}  // namespace qmsets
