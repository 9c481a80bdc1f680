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

#include <nlohmann/json.hpp>

#include "qmsets/attributes.hpp"
#include "qmsets/density.hpp"
#include "qmsets/dsl.hpp"
#include "qmsets/entangle.hpp"
#include "qmsets/partitions.hpp"
#include "qmsets/qc2.hpp"
#include "qmsets/setspace.hpp"

/// Wire format. Every rational is a "p/q" string; objects keep insertion order.
namespace qmsets::json {

using Json = nlohmann::ordered_json;

Json encode(const Rational &r);
Json encode(const Probability &p);
/// Sorted label list.
Json encode(const SubsetKet &s);
/// {label: "p/q"} in universe order.
Json encode(const Distribution &d);
/// {"frames": [...], "rows": [[[labels...] per frame] per row]}
Json encode(const KetTable &t);
/// List of blocks, each a label list.
Json encode(const Partition &p);
Json encode(const Attribute &f);
/// {"universe": [...], "entries": [["p/q", ...], ...]}
Json encode(const DensityMatrix &rho);
Json encode(const MeasurementOutcome &m);
Json encode(const ProductState &s);
/// {"lhs", "rhs", "violated", "terms": {"(x,y)": "p/q"}, "summary"}
Json encode(const BellReport &r);
Json encode(const CounterfactualJoint &c);
Json encode(const StateOutcomeTable &t);
/// {"lines", "kets": [...], "coefficients": "[...]"}
Json encode(const Register &r);
Json encode(const TeleportTrace &t);
Json encode(const ParityResult &p);
Json encode(const dsl::RunRecord &r);

}  // namespace qmsets::json
