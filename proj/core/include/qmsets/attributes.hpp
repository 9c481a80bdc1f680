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

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmsets/partitions.hpp"
#include "qmsets/random.hpp"
#include "qmsets/rational.hpp"
#include "qmsets/setspace.hpp"

namespace qmsets {

/// Numerical attribute f: U -> Q, the set analogue of an observable.
class Attribute {
  public:
    /// Throws Error(LengthMismatch) unless there is one value per element.
    Attribute(Universe u, std::vector<Rational> values);

    /// Throws Error(InvalidArgument) if an element has no value or a label repeats.
    static Attribute from_map(const Universe &u, const std::vector<std::pair<std::string, Rational>> &values);
    /// χ_S: 1 on S, 0 elsewhere.
    static Attribute characteristic(const SubsetKet &s);
    static Attribute constant(const Universe &u, const Rational &c);
    /// "a=1,b=2,c=3/2".
    static Attribute parse(const Universe &u, std::string_view text);

    const Universe &universe() const noexcept { return universe_; }
    const Rational &value(std::size_t i) const { return values_.at(i); }
    const std::vector<Rational> &values() const noexcept { return values_; }
    /// Distinct values, ascending.
    std::vector<Rational> spectrum() const;
    /// f⁻¹(r).
    SubsetKet level_set(const Rational &r) const;

  private:
    Universe universe_;
    std::vector<Rational> values_;
};

struct EigenvalueProbability {
    Rational eigenvalue;
    Probability probability;
    friend bool operator==(const EigenvalueProbability &, const EigenvalueProbability &) = default;
};

struct MeasurementOutcome {
    Rational eigenvalue;
    Probability probability;
    SubsetKet post_state;  ///< f⁻¹(r) ∩ S
};

/// Blocks are the nonempty level sets of f.
Partition inverse_image_partition(const Attribute &f);
/// f⁻¹(r) ∩ S; empty when r is outside the spectrum. Throws Error(UniverseMismatch).
SubsetKet project(const Attribute &f, const Rational &r, const SubsetKet &s);
/// Pr(r|S) = |f⁻¹(r) ∩ S| / |S| for each r with a nonzero projection, ascending r.
/// Throws Error(ZeroState).
std::vector<EigenvalueProbability> measure_probs(const Attribute &f, const SubsetKet &s);
/// Samples an element of S uniformly and collapses to its level set.
MeasurementOutcome measure(const Attribute &f, const SubsetKet &s, Rng &rng);
/// Collapse for a chosen eigenvalue. Throws Error(ImpossibleOutcome) if Pr(r|S) = 0.
MeasurementOutcome measure_given(const Attribute &f, const SubsetKet &s, const Rational &r);
/// Same domain.
bool is_compatible(const Attribute &f, const Attribute &g);
/// The join of the inverse-image partitions is discrete.
/// Throws Error(IncompatibleAttributes) if two attributes have different domains.
bool is_complete(std::span<const Attribute> fs);
/// Each element's tuple of eigenvalues, in universe order. Throws Error(NotComplete).
std::vector<std::pair<std::string, std::vector<Rational>>> eigenkets(std::span<const Attribute> fs);
/// The pairs (r, f⁻¹(r) ∩ S) with nonempty second component, ascending r.
std::vector<std::pair<Rational, SubsetKet>> spectral_apply(const Attribute &f, const SubsetKet &s);

}  // namespace qmsets
